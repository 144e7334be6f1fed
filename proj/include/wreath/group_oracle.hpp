#ifndef WREATH_GROUP_ORACLE_HPP
#define WREATH_GROUP_ORACLE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wreath/perm_group.hpp"

namespace wreath {

/// Group operations plus conjugacy metadata for the base group K.
///
/// Elements are dense handles 0..size()-1 in a fixed enumeration order with
/// the identity at 0. Conjugacy classes are indexed 0..class_count()-1,
/// ordered by the enumeration index of their representative (the class
/// minimum), so class 0 is the class of the identity.
class GroupOracle {
public:
  using Elem = int;

  virtual ~GroupOracle() = default;

  virtual std::size_t size() const = 0;
  Elem identity() const { return 0; }

  virtual Elem product(Elem a, Elem b) const = 0;
  virtual Elem inverse(Elem a) const = 0;
  virtual long long element_order(Elem a) const = 0;
  virtual std::vector<Elem> group_generators() const = 0;

  Elem conjugate(Elem a, Elem c) const { return product(product(inverse(c), a), c); }

  // First c in enumeration order with a^c = b, if the classes match.
  virtual std::optional<Elem> conj_witness(Elem a, Elem b) const = 0;

  virtual std::vector<Elem> centraliser_elements(Elem a) const = 0;
  virtual std::vector<Elem> centraliser_generators(Elem a) const = 0;
  virtual std::uint64_t centraliser_order(Elem a) const = 0;

  virtual std::size_t class_count() const = 0;
  virtual const std::vector<Elem>& class_representatives() const = 0;
  virtual int class_of(Elem a) const = 0;
  virtual std::uint64_t class_size(int class_index) const = 0;

  virtual std::string describe(Elem a) const = 0;
  virtual Elem parse(const std::string& text) const = 0;
};

/// Oracle backed by an enumerated permutation group.
class PermGroupOracle : public GroupOracle {
public:
  explicit PermGroupOracle(PermGroup group);

  const PermGroup& group() const { return group_; }
  const Perm& perm_of(Elem a) const { return group_.elements()[a]; }
  Elem elem_of(const Perm& p) const;

  std::size_t size() const override { return group_.size(); }
  Elem product(Elem a, Elem b) const override;
  Elem inverse(Elem a) const override { return inverse_[a]; }
  long long element_order(Elem a) const override { return perm_of(a).order(); }
  std::vector<Elem> group_generators() const override;
  std::optional<Elem> conj_witness(Elem a, Elem b) const override;
  std::vector<Elem> centraliser_elements(Elem a) const override;
  std::vector<Elem> centraliser_generators(Elem a) const override;
  std::uint64_t centraliser_order(Elem a) const override;
  std::size_t class_count() const override { return class_reps_.size(); }
  const std::vector<Elem>& class_representatives() const override { return class_reps_; }
  int class_of(Elem a) const override { return class_of_[a]; }
  std::uint64_t class_size(int class_index) const override;
  std::string describe(Elem a) const override { return perm_of(a).str(); }
  Elem parse(const std::string& text) const override;

private:
  PermGroup group_;
  std::vector<Elem> inverse_;
  std::vector<int> class_of_;
  std::vector<Elem> class_reps_;
  std::vector<std::uint64_t> class_sizes_;
  std::vector<Elem> mul_table_;  // only when size() is small
  std::size_t table_dim_ = 0;
};

std::shared_ptr<const PermGroupOracle> make_perm_oracle(PermGroup group);

}  // namespace wreath

#endif
