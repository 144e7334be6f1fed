#ifndef WREATH_CLASSREPS_HPP
#define WREATH_CLASSREPS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "wreath/conjugacy.hpp"
#include "wreath/element.hpp"

namespace wreath {

inline constexpr std::uint64_t kDefaultLabellingCap = 10'000'000;

/// Assignment of K-classes to the parts of a fixed top: one class per
/// nontrivial top cycle (canonical cycle order), and per fixed point either
/// -1 (outside the territory) or a nonidentity class.
struct DecompositionLabelling {
  std::vector<int> cycle_class;
  std::vector<int> fixed_class;

  bool operator==(const DecompositionLabelling&) const = default;
};

/// All labellings of a given top over r = |R(K)| classes; there are
/// r^(#cycles + #fixed points) of them, mixed-radix encoded.
class LabellingSpace {
public:
  LabellingSpace(Perm h, int class_count,
                 std::uint64_t cap = kDefaultLabellingCap);

  const Perm& top() const { return h_; }
  const std::vector<std::vector<int>>& top_cycles() const { return cycles_; }
  const std::vector<int>& fixed_points() const { return fixed_; }
  int class_count() const { return r_; }
  std::size_t slots() const { return cycles_.size() + fixed_.size(); }
  std::uint64_t total() const { return total_; }

  DecompositionLabelling decode(std::uint64_t index) const;
  std::uint64_t encode(const DecompositionLabelling& l) const;

  TerritoryDecomposition decomposition_of(const DecompositionLabelling& l) const;
  DecompositionLabelling labelling_of(const TerritoryDecomposition& p) const;

  // Slot image map induced by a permutation centralising the top.
  std::vector<int> slot_action(const Perm& t) const;

private:
  friend std::uint64_t sweep_labelling_orbits(
      const LabellingSpace&, const std::vector<Perm>&,
      const std::function<bool(const DecompositionLabelling&)>&);

  Perm h_;
  std::vector<std::vector<int>> cycles_;
  std::vector<int> fixed_;
  std::vector<int> cycle_slot_of_;  // point -> cycle slot, -1 otherwise
  std::vector<int> fixed_slot_of_;  // point -> fixed slot, -1 otherwise
  int r_ = 1;
  std::uint64_t total_ = 1;
};

std::uint64_t labelling_count(const Perm& h, int class_count);

// Visits every orbit of the group generated by the centralising generators
// on the labelling space, in increasing encoded order of the orbit minima;
// emit may be empty (count only) and may return false to stop early.
// Returns the number of orbits visited.
std::uint64_t sweep_labelling_orbits(
    const LabellingSpace& space, const std::vector<Perm>& centralising_gens,
    const std::function<bool(const DecompositionLabelling&)>& emit);

// R(H): for the full symmetric top, one canonical permutation per cycle
// type; otherwise the enumeration-minimal representative of each class.
std::vector<Perm> top_class_representatives(const Ctx& ctx);

// Generators of C_H(h): closed form for the full symmetric top, a reduced
// generating set of the filtered subgroup otherwise.
std::vector<Perm> top_centralising_generators(const Ctx& ctx, const Perm& h);

// Orbit minima of the labellings of h under C_H(h), as decompositions.
std::vector<TerritoryDecomposition> orbit_representatives(
    const Ctx& ctx, const Perm& h, std::uint64_t cap = kDefaultLabellingCap);

// The sparse element of top h whose decomposition realises p: each part
// carries its class representative at its minimal point.
WreathElement phi_h(const Ctx& ctx, const Perm& h, const TerritoryDecomposition& p);

std::uint64_t class_count(const Ctx& ctx, std::uint64_t cap = kDefaultLabellingCap);

std::vector<std::pair<Perm, std::uint64_t>> class_count_by_top(
    const Ctx& ctx, std::uint64_t cap = kDefaultLabellingCap);

// Streams one representative per conjugacy class of K wr H, grouped by top
// representative, orbit minima in encoded order; stops when the callback
// returns false.
void for_each_class_representative(
    const Ctx& ctx, const std::function<bool(const WreathElement&)>& visit,
    std::uint64_t cap = kDefaultLabellingCap);

}  // namespace wreath

#endif
