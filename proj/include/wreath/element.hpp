#ifndef WREATH_ELEMENT_HPP
#define WREATH_ELEMENT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wreath/group_oracle.hpp"
#include "wreath/perm.hpp"
#include "wreath/perm_group.hpp"

namespace wreath {

/// Ambient wreath product: base group K acting on each of the points
/// {1..degree}, top group H <= Sym(degree) permuting the points.
///
/// Elements are pairs (f, h) with f: points -> K and h a permutation of the
/// points; h is not required to lie in H (the pair then lives in K wr Sym).
/// Conjugacy and centraliser searches constrain their witnesses to H.
struct WreathContext {
  std::shared_ptr<const GroupOracle> base;
  PermGroup top;
  bool full_symmetric_top = false;

  int degree() const { return top.degree(); }

  static std::shared_ptr<const WreathContext> make(
      std::shared_ptr<const GroupOracle> base, PermGroup top);

  // Top group Sym(degree), flagged so the closed-form top-group machinery is
  // used instead of enumeration.
  static std::shared_ptr<const WreathContext> make_full_symmetric(
      std::shared_ptr<const GroupOracle> base, int degree,
      std::size_t cap = kDefaultEnumerationCap);
};

using Ctx = std::shared_ptr<const WreathContext>;

class WreathElement {
public:
  WreathElement() = default;
  WreathElement(Ctx ctx, std::vector<GroupOracle::Elem> base, Perm top);

  static WreathElement identity(const Ctx& ctx);

  const Ctx& ctx() const { return ctx_; }
  const std::vector<GroupOracle::Elem>& base() const { return base_; }
  const Perm& top() const { return top_; }
  GroupOracle::Elem base_at(int point) const { return base_[point - 1]; }
  void set_base_at(int point, GroupOracle::Elem value);
  int degree() const { return static_cast<int>(base_.size()); }

  bool is_identity() const;
  WreathElement inverse() const;
  WreathElement power(long long k) const;
  WreathElement conjugated_by(const WreathElement& a) const;

  // Text form "( f1, f2, ..., fn ; h )".
  std::string str() const;

  friend WreathElement operator*(const WreathElement& w, const WreathElement& v);
  bool operator==(const WreathElement& other) const {
    return base_ == other.base_ && top_ == other.top_;
  }

private:
  Ctx ctx_;
  std::vector<GroupOracle::Elem> base_;
  Perm top_;
};

WreathElement parse_wreath_element(const std::string& text, const Ctx& ctx);

// Points moved by the top or carrying a nontrivial base entry, sorted.
std::vector<int> territory(const WreathElement& w);

// Either the top is a single nontrivial cycle covering the territory, or the
// top is trivial and the territory is a single point.
bool is_wreath_cycle(const WreathElement& w);

// (f|_Omega, h|_Omega); the support of h inside Omega must be a union of
// cycles of h.
WreathElement restrict_to(const WreathElement& w, const std::vector<int>& points);

/// Conjugacy-class label of a wreath cycle: K-class of its yade and the
/// order of its top. Ordered by (class, length).
struct Load {
  int yade_class = 0;
  int length = 1;
  auto operator<=>(const Load&) const = default;
};

struct WreathCycle {
  WreathElement element;
  std::vector<int> territory;  // sorted
  int anchor = 0;              // min of territory
  GroupOracle::Elem yade_at_anchor = 0;
  Load load;

  bool trivial_top() const { return load.length == 1; }
};

struct LoadStratum {
  Load load;
  std::vector<int> members;  // indices into cycles, ascending anchor
};

/// Canonical disjoint wreath-cycle decomposition: cycles sorted by anchor.
struct WreathCycleSet {
  std::vector<WreathCycle> cycles;
  std::vector<LoadStratum> strata;  // ascending load

  std::vector<Load> load_multiset() const;  // one entry per cycle, sorted
};

WreathCycleSet wreath_cycle_decomposition(const WreathElement& w);

// Product of the base entries along the top orbit of the point:
// [gamma]f * [gamma^h]f * ... * [gamma^(h^(len-1))]f.
GroupOracle::Elem yade(const WreathElement& cycle, int point);

// y with yade(cycle, alpha)^y = yade(cycle, beta); both points must lie in
// the territory.
GroupOracle::Elem yade_conjugator(const WreathElement& cycle, int alpha, int beta);

Load load_of(const WreathElement& cycle);

// lcm over the wreath cycles of |yade| * |top cycle|.
long long element_order(const WreathElement& w);

struct SparseDecomposition {
  WreathElement conjugator;  // trivial top
  WreathElement sparse;      // w conjugated by the conjugator
  WreathCycleSet cycles;     // decomposition of the sparse element
};

// Conjugate of w, by a base-only element, whose cycles each carry their yade
// as the single base entry at the anchor.
SparseDecomposition sparse_decomposition(const WreathElement& w);

// Faithful permutation action on K x points; point (k, gamma) has index
// (gamma - 1) * |K| + k + 1 and maps to (k * [gamma]f, gamma^h).
Perm embed_imprimitive(const WreathElement& w);

std::size_t hash_value(const WreathElement& w);

}  // namespace wreath

template <>
struct std::hash<wreath::WreathElement> {
  std::size_t operator()(const wreath::WreathElement& w) const noexcept {
    return wreath::hash_value(w);
  }
};

#endif
