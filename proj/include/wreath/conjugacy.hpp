#ifndef WREATH_CONJUGACY_HPP
#define WREATH_CONJUGACY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreath/element.hpp"

namespace wreath {

/// Load-indexed family of territories of a disjoint wreath-cycle
/// decomposition, in canonical form: rows sorted by load, territories of a
/// row sorted lexicographically.
class TerritoryDecomposition {
public:
  using Row = std::pair<Load, std::vector<std::vector<int>>>;

  TerritoryDecomposition() = default;
  static TerritoryDecomposition of(const WreathCycleSet& cycles);
  static TerritoryDecomposition from_rows(std::vector<Row> rows);

  // Pointwise image under t, re-canonicalised.
  TerritoryDecomposition mapped(const Perm& t) const;

  const std::vector<Row>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  std::vector<int> total_territory() const;  // sorted union

  bool operator==(const TerritoryDecomposition&) const = default;
  auto operator<=>(const TerritoryDecomposition&) const = default;

private:
  std::vector<Row> rows_;
};

// {t in G : P^t = P}, with its full element cache.
PermGroup stabiliser_of_partition(const PermGroup& g, const TerritoryDecomposition& p);

// Matrix rendering: one row per K-class, one column per cycle length,
// cell (k, j) lists the territories of load (k, j), '-' when empty.
std::string format_territory_matrix(const TerritoryDecomposition& p, int class_count,
                                    int degree);

// c_0, ..., c_l with c_i = a_{i-1}^-1 ... a_0^-1 * c_0 * b_0 ... b_{i-1};
// requires (a_0...a_{l-1})^(c_0) = b_0...b_{l-1}, which makes c_l = c_0 and
// b_i = c_i^-1 * a_i * c_{i+1}.
std::vector<GroupOracle::Elem> conjugate_chain(const GroupOracle& k,
                                               const std::vector<GroupOracle::Elem>& a,
                                               const std::vector<GroupOracle::Elem>& b,
                                               GroupOracle::Elem c0);

// Base map s, supported on the territory of w, with w^(s,t) = v; the yades
// must be K-conjugate for it to exist. A specific yade conjugator may be
// supplied instead of the scanned one.
std::optional<std::vector<GroupOracle::Elem>> conjugate_wreath_cycles(
    const WreathCycle& w, const WreathCycle& v, const Perm& t,
    std::optional<GroupOracle::Elem> yade_conjugator_override = std::nullopt);

// Conjugacy in the full wreath product K wr Sym: the load multisets decide.
bool is_conjugate_in_s(const WreathElement& w, const WreathElement& v);

// Witness a = (s, t) with t in the top group H and w^a = v, if one exists.
std::optional<WreathElement> conjugacy_witness_in_w(const WreathElement& w,
                                                    const WreathElement& v);

// Base map with the single entry x at the point.
std::vector<GroupOracle::Elem> map_e(const Ctx& ctx, int point, GroupOracle::Elem x);

// Base map of the wreath cycle with top h, designated point gamma0, yade x
// and off-anchor entries d (keys: support of h minus gamma0).
std::vector<GroupOracle::Elem> map_b(const Ctx& ctx, const Perm& h, int gamma0,
                                     GroupOracle::Elem x,
                                     const std::map<int, GroupOracle::Elem>& d);

// |{wreath cycles with top h, yade at gamma0 in P}| = |P| * |K|^(|h|-1).
std::uint64_t count_cycles_with_yade_in(const Ctx& ctx, const Perm& h, int gamma0,
                                        std::vector<GroupOracle::Elem> p);

struct ClassSizeParts {
  std::uint64_t top_class_size = 1;      // |h^H|
  std::uint64_t partition_orbit = 1;     // |P(w)^{C_H(h)}|
  std::uint64_t yade_class_product = 1;  // prod over cycles of |yade K-class|
  std::uint64_t base_freedom = 1;        // prod over nontrivial tops of |K|^(len-1)

  std::uint64_t total() const;
};

ClassSizeParts class_size_parts(const WreathElement& w);
std::uint64_t class_size(const WreathElement& w);

// |Stab_{C_Sym(h)}(P)| for the decomposition strata of an element of degree n.
std::uint64_t stab_order_in_full_sym(const WreathCycleSet& cycles, int degree);

/// One choice in the class-size parameterisation of the conjugates of w.
struct ClassPoint {
  GroupOracle::Elem yade_choice = 0;  // x_z, in the K-class of the cycle's yade
  std::vector<std::pair<int, GroupOracle::Elem>> base_choice;  // d_z off the anchor
};

struct ClassParameter {
  Perm top_coset_rep;                     // t_a, from a right transversal of C_H(h)
  Perm top_centraliser_elem;              // c in C_H(h)
  std::vector<ClassPoint> points;         // one per cycle, canonical cycle order
};

// Image of the parameter under the class bijection: a conjugate of w.
// Distinct valid parameters give distinct conjugates.
WreathElement class_element(const WreathElement& w, const ClassParameter& p);

std::size_t hash_value(const TerritoryDecomposition& p);

}  // namespace wreath

#endif
