#include "wreath/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace wreath {

namespace {

std::vector<Perm> canonical_generators(int degree, std::vector<Perm> gens) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::erase_if(gens, [](const Perm& g) { return g.is_identity(); });
  return gens;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t cap)
    : degree_(degree), gens_(canonical_generators(degree, std::move(generators))), cap_(cap) {
  if (degree < 1) throw DomainError("group degree must be at least 1");
}

PermGroup PermGroup::trivial(int degree, std::size_t cap) {
  return PermGroup(degree, {}, cap);
}

PermGroup PermGroup::symmetric(int degree, std::size_t cap) {
  std::vector<Perm> gens;
  if (degree >= 2) gens.push_back(Perm::parse("(1,2)", degree));
  if (degree >= 3) {
    std::vector<int> full(degree);
    for (int i = 0; i < degree; ++i) full[i] = i + 1;
    gens.push_back(Perm::from_cycle(full, degree));
  }
  return PermGroup(degree, std::move(gens), cap);
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements, std::size_t cap) {
  if (elements.empty() || !elements.front().is_identity())
    throw DomainError("element list must start with the identity");
  PermGroup g(degree, reduce_generators(degree, elements), cap);
  auto& c = *g.cache_;
  std::call_once(c.once, [&] {
    c.elems = std::move(elements);
    for (std::size_t i = 0; i < c.elems.size(); ++i)
      c.index.emplace(c.elems[i], static_cast<int>(i));
  });
  return g;
}

void PermGroup::enumerate_into(Cache& c) const {
  c.elems.push_back(Perm::identity(degree_));
  c.index.emplace(c.elems.front(), 0);
  for (std::size_t i = 0; i < c.elems.size(); ++i) {
    for (const auto& g : gens_) {
      Perm next = c.elems[i] * g;
      if (c.index.contains(next)) continue;
      if (c.elems.size() >= cap_)
        throw CapExceeded("group enumeration exceeds cap of " + std::to_string(cap_));
      c.index.emplace(next, static_cast<int>(c.elems.size()));
      c.elems.push_back(std::move(next));
    }
  }
}

const PermGroup::Cache& PermGroup::cache() const {
  Cache& c = *cache_;
  std::call_once(c.once, [&] {
    try {
      enumerate_into(c);
    } catch (...) {
      c.error = std::current_exception();
      c.elems.clear();
      c.index.clear();
    }
  });
  if (c.error) std::rethrow_exception(c.error);
  return c;
}

const std::vector<Perm>& PermGroup::elements() const { return cache().elems; }

bool PermGroup::contains(const Perm& p) const { return index_of(p) >= 0; }

int PermGroup::index_of(const Perm& p) const {
  if (p.degree() != degree_) return -1;
  const auto& idx = cache().index;
  auto it = idx.find(p);
  return it == idx.end() ? -1 : it->second;
}

PermGroup PermGroup::centraliser(const Perm& h) const {
  std::vector<Perm> kept;
  for (const auto& t : elements())
    if (h * t == t * h) kept.push_back(t);
  return from_elements(degree_, std::move(kept), cap_);
}

std::optional<Perm> PermGroup::conjugating_element(const Perm& h, const Perm& g) const {
  for (const auto& t : elements())
    if (h.conjugated_by(t) == g) return t;
  return std::nullopt;
}

std::vector<Perm> PermGroup::right_transversal(const PermGroup& U) const {
  for (const auto& u : U.generators())
    if (!contains(u)) throw DomainError("transversal subgroup is not contained in the group");
  std::vector<Perm> reps;
  std::unordered_set<Perm> covered;
  for (const auto& t : elements()) {
    if (covered.contains(t)) continue;
    reps.push_back(t);
    for (const auto& u : U.elements()) covered.insert(u * t);
  }
  return reps;
}

std::vector<Perm> reduce_generators(int degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::unordered_set<Perm> generated;
  generated.insert(Perm::identity(degree));
  for (const auto& e : elements) {
    if (generated.contains(e)) continue;
    gens.push_back(e);
    // re-close under the enlarged generating set
    std::vector<Perm> frontier(generated.begin(), generated.end());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (const auto& g : gens) {
        Perm next = frontier[i] * g;
        if (generated.insert(next).second) frontier.push_back(std::move(next));
      }
    }
  }
  return gens;
}

}  // namespace wreath
