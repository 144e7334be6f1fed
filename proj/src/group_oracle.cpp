#include "wreath/group_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace wreath {

PermGroupOracle::PermGroupOracle(PermGroup group) : group_(std::move(group)) {
  const auto& elems = group_.elements();
  const std::size_t n = elems.size();

  if (n * n <= 4'000'000) {
    table_dim_ = n;
    mul_table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        mul_table_[a * n + b] = group_.index_of(elems[a] * elems[b]);
  }

  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) inverse_[a] = group_.index_of(elems[a].inverse());

  // conjugation-orbit sweep; classes indexed by ascending representative
  class_of_.assign(n, -1);
  std::vector<Elem> gen_ids;
  for (const auto& g : group_.generators()) gen_ids.push_back(group_.index_of(g));
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    int cls = static_cast<int>(class_reps_.size());
    class_reps_.push_back(static_cast<Elem>(a));
    std::vector<Elem> orbit{static_cast<Elem>(a)};
    class_of_[a] = cls;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem g : gen_ids) {
        Elem img = conjugate(orbit[i], g);
        if (class_of_[img] < 0) {
          class_of_[img] = cls;
          orbit.push_back(img);
        }
      }
    }
    class_sizes_.push_back(orbit.size());
  }
}

GroupOracle::Elem PermGroupOracle::elem_of(const Perm& p) const {
  int i = group_.index_of(p);
  if (i < 0) throw DomainError("permutation is not a member of the base group");
  return i;
}

GroupOracle::Elem PermGroupOracle::product(Elem a, Elem b) const {
  if (table_dim_) return mul_table_[static_cast<std::size_t>(a) * table_dim_ + b];
  return group_.index_of(perm_of(a) * perm_of(b));
}

std::vector<GroupOracle::Elem> PermGroupOracle::group_generators() const {
  std::vector<Elem> out;
  for (const auto& g : group_.generators()) out.push_back(group_.index_of(g));
  return out;
}

std::optional<GroupOracle::Elem> PermGroupOracle::conj_witness(Elem a, Elem b) const {
  if (class_of_[a] != class_of_[b]) return std::nullopt;
  for (Elem c = 0; c < static_cast<Elem>(size()); ++c)
    if (conjugate(a, c) == b) return c;
  return std::nullopt;  // unreachable when the class partition is consistent
}

std::vector<GroupOracle::Elem> PermGroupOracle::centraliser_elements(Elem a) const {
  std::vector<Elem> out;
  for (Elem c = 0; c < static_cast<Elem>(size()); ++c)
    if (product(a, c) == product(c, a)) out.push_back(c);
  return out;
}

std::vector<GroupOracle::Elem> PermGroupOracle::centraliser_generators(Elem a) const {
  std::vector<Perm> members;
  for (Elem c : centraliser_elements(a)) members.push_back(perm_of(c));
  std::vector<Elem> out;
  for (const auto& g : reduce_generators(group_.degree(), members)) out.push_back(elem_of(g));
  return out;
}

std::uint64_t PermGroupOracle::centraliser_order(Elem a) const {
  return size() / class_sizes_[class_of_[a]];
}

std::uint64_t PermGroupOracle::class_size(int class_index) const {
  if (class_index < 0 || class_index >= static_cast<int>(class_sizes_.size()))
    throw DomainError("class index out of range");
  return class_sizes_[class_index];
}

GroupOracle::Elem PermGroupOracle::parse(const std::string& text) const {
  return elem_of(Perm::parse(text, group_.degree()));
}

std::shared_ptr<const PermGroupOracle> make_perm_oracle(PermGroup group) {
  return std::make_shared<const PermGroupOracle>(std::move(group));
}

}  // namespace wreath
