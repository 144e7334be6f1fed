#ifndef WREATH_CENTRALISER_HPP
#define WREATH_CENTRALISER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "wreath/conjugacy.hpp"
#include "wreath/element.hpp"

namespace wreath {

struct CycleAnchor {
  Perm cycle;  // a single cycle, or the identity (anchor-only slot)
  int anchor;  // a point of the cycle's support, or the designated fixed point
};

// Embedding of a permutation sigma of the slot indices {1..m} into Sym(degree):
// anchor_i^(cycle_i^j) maps to anchor_{sigma(i)}^(cycle_{sigma(i)}^j).
// The slots must have pairwise disjoint supports and equal cycle orders.
Perm psi_embed(const std::vector<CycleAnchor>& slots, const Perm& sigma, int degree);

/// C_Sym(degree)(h) in closed form.
struct CentraliserInSym {
  std::vector<std::pair<int, std::vector<Perm>>> strata;  // by cycle length, cycles by min point
  std::vector<int> fixed_points;
  std::vector<Perm> generators;
  std::uint64_t order = 1;
};

CentraliserInSym centraliser_in_sym(const Perm& h);

/// Structural form of Stab_{C_Sym(degree)(h)}(P) for the decomposition of an
/// element with top h: the direct product over the load strata of
/// <h_z> wr Sym(stratum), times Sym of the off-territory points.
///
/// Anchors default to cycle minima; a frame built by CentraliserFrame uses
/// the sparse elements' designated points instead.
class TopStabFrame {
public:
  TopStabFrame() = default;
  TopStabFrame(const WreathCycleSet& cycles, int degree);
  TopStabFrame(const WreathCycleSet& cycles, int degree, std::vector<int> anchors);

  struct Slot {
    Perm top;    // full-degree single cycle, or identity for anchor-only slots
    int anchor;  // designated point of the territory
  };

  struct Stratum {
    Load load;
    std::vector<Slot> slots;
  };

  struct Coordinates {
    std::vector<std::vector<int>> exponents;  // per stratum, per member slot
    std::vector<std::vector<int>> sigma;      // per stratum, 0-based slot images
    Perm residual;                            // off-territory permutation
  };

  const std::vector<Stratum>& strata() const { return strata_; }
  const std::vector<Perm>& sym_generators() const { return generators_; }
  std::uint64_t sym_order() const { return order_; }
  const std::vector<int>& off_territory() const { return off_; }

  bool member(const Perm& t) const;
  Coordinates decompose(const Perm& t) const;  // throws DomainError if not a member
  Perm reassemble(const Coordinates& c) const;

private:
  std::optional<Coordinates> try_decompose(const Perm& t) const;
  void build();

  int degree_ = 0;
  std::vector<Stratum> strata_;
  std::vector<int> off_;
  std::vector<Perm> generators_;
  std::uint64_t order_ = 1;
  // point -> (stratum, slot within stratum, offset from anchor); -1 when off
  std::vector<std::array<int, 3>> locate_;
};

/// Parameterisation of the centraliser of a sparse element: base choices
/// (one element of C_K of the stratum reference entry per cycle, plus one K
/// element per off-territory point) and a top choice from the stabiliser map
/// onto commuting elements.
class CentraliserFrame {
public:
  // Canonical connectors, scanned from K.
  static CentraliserFrame make(const WreathElement& sparse);
  // Explicit connectors, one per cycle in canonical cycle order; each must
  // conjugate the stratum reference entry onto the cycle's entry.
  CentraliserFrame(WreathElement sparse, std::vector<GroupOracle::Elem> connectors);

  const WreathElement& sparse() const { return sparse_; }
  const WreathCycleSet& cycles() const { return cycles_; }
  const TopStabFrame& stab() const { return stab_; }
  int designated_point(int cycle_index) const { return designated_[cycle_index]; }
  int reference_cycle(int stratum) const { return reference_[stratum]; }
  GroupOracle::Elem reference_entry(int stratum) const;
  GroupOracle::Elem connector(int cycle_index) const { return connectors_[cycle_index]; }

  // c_per_cycle[i] must centralise the reference entry of cycle i's stratum;
  // c_off gives the base values on the off-territory points in ascending
  // point order; t must lie in the stabiliser.
  WreathElement phi(const std::vector<GroupOracle::Elem>& c_per_cycle,
                    const std::vector<GroupOracle::Elem>& c_off, const Perm& t) const;

private:
  CentraliserFrame(WreathElement sparse, std::optional<std::vector<GroupOracle::Elem>> conn);

  WreathElement sparse_;
  WreathCycleSet cycles_;
  std::vector<int> designated_;  // per cycle: the point carrying its entry
  std::vector<int> reference_;   // per stratum: cycle index of the reference
  std::vector<GroupOracle::Elem> connectors_;
  TopStabFrame stab_;
};

struct CentraliserDescription {
  std::uint64_t order = 1;
  std::uint64_t stab_order = 1;              // |Stab_{C_H(h)}(P(w))|
  std::uint64_t base_order = 1;              // order / stab_order
  WreathElement sparse_conjugator;
  std::vector<WreathElement> generators;     // of C_W(w), tops in H
};

std::uint64_t centraliser_order(const WreathElement& w);
CentraliserDescription centraliser_of(const WreathElement& w);

}  // namespace wreath

#endif
