#ifndef WREATH_PERM_GROUP_HPP
#define WREATH_PERM_GROUP_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wreath/perm.hpp"

namespace wreath {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Finite permutation group given by generators, enumerated on demand.
///
/// Enumeration is breadth-first from the identity, multiplying on the right by
/// the generators in their canonical (sorted) order; the resulting element
/// order is deterministic and starts with the identity.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators,
            std::size_t cap = kDefaultEnumerationCap);

  static PermGroup trivial(int degree, std::size_t cap = kDefaultEnumerationCap);
  static PermGroup symmetric(int degree, std::size_t cap = kDefaultEnumerationCap);

  // Wraps an explicit element list (assumed closed; identity must be present).
  // Keeps the given order as the enumeration order and derives a small
  // generating set from it.
  static PermGroup from_elements(int degree, std::vector<Perm> elements,
                                 std::size_t cap = kDefaultEnumerationCap);

  int degree() const { return degree_; }
  std::size_t cap() const { return cap_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const std::vector<Perm>& elements() const;  // throws CapExceeded if |G| > cap
  std::size_t size() const { return elements().size(); }
  bool contains(const Perm& p) const;
  int index_of(const Perm& p) const;  // -1 if not a member

  // Subgroup {t in G : h^t = h}, with its element cache prefilled in G's order.
  PermGroup centraliser(const Perm& h) const;

  // First t in enumeration order with h^t = g, if any.
  std::optional<Perm> conjugating_element(const Perm& h, const Perm& g) const;

  // Representatives of the right cosets U\G, identity first, each the first
  // member of its coset in enumeration order. U must be a subgroup of G.
  std::vector<Perm> right_transversal(const PermGroup& U) const;

private:
  struct Cache {
    std::once_flag once;
    std::vector<Perm> elems;
    std::unordered_map<Perm, int> index;
    std::exception_ptr error;
  };

  void enumerate_into(Cache& c) const;
  const Cache& cache() const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::size_t cap_ = kDefaultEnumerationCap;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Smallest prefix-greedy generating set for an explicit element list.
std::vector<Perm> reduce_generators(int degree, const std::vector<Perm>& elements);

}  // namespace wreath

#endif
