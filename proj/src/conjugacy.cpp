#include "wreath/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "wreath/checked.hpp"

namespace wreath {

TerritoryDecomposition TerritoryDecomposition::of(const WreathCycleSet& cycles) {
  std::vector<Row> rows;
  for (const auto& s : cycles.strata) {
    Row r{s.load, {}};
    for (int i : s.members) r.second.push_back(cycles.cycles[i].territory);
    rows.push_back(std::move(r));
  }
  return from_rows(std::move(rows));
}

TerritoryDecomposition TerritoryDecomposition::from_rows(std::vector<Row> rows) {
  std::map<Load, std::vector<std::vector<int>>> merged;
  std::set<int> seen;
  for (auto& [load, terrs] : rows) {
    if (load.length < 1) throw DomainError("territory decomposition load length < 1");
    for (auto& t : terrs) {
      if (t.empty()) throw DomainError("empty territory");
      std::sort(t.begin(), t.end());
      for (int p : t) {
        if (p < 1) throw DomainError("territory point out of range");
        if (!seen.insert(p).second) throw DomainError("territories are not disjoint");
      }
      merged[load].push_back(std::move(t));
    }
  }
  TerritoryDecomposition out;
  for (auto& [load, terrs] : merged) {
    if (terrs.empty()) continue;
    std::sort(terrs.begin(), terrs.end());
    out.rows_.push_back({load, std::move(terrs)});
  }
  return out;
}

TerritoryDecomposition TerritoryDecomposition::mapped(const Perm& t) const {
  std::vector<Row> rows;
  for (const auto& [load, terrs] : rows_) {
    Row r{load, {}};
    for (const auto& terr : terrs) {
      std::vector<int> img;
      for (int p : terr) img.push_back(t.apply(p));
      r.second.push_back(std::move(img));
    }
    rows.push_back(std::move(r));
  }
  return from_rows(std::move(rows));
}

std::vector<int> TerritoryDecomposition::total_territory() const {
  std::vector<int> out;
  for (const auto& [load, terrs] : rows_)
    for (const auto& t : terrs) out.insert(out.end(), t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup stabiliser_of_partition(const PermGroup& g, const TerritoryDecomposition& p) {
  std::vector<Perm> kept;
  for (const auto& t : g.elements())
    if (p.mapped(t) == p) kept.push_back(t);
  return PermGroup::from_elements(g.degree(), std::move(kept), g.cap());
}

namespace {

std::string territory_str(const std::vector<int>& t) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << '}';
  return os.str();
}

}  // namespace

std::string format_territory_matrix(const TerritoryDecomposition& p, int class_count,
                                    int degree) {
  std::map<std::pair<int, int>, std::string> cell;
  for (const auto& [load, terrs] : p.rows()) {
    std::string s;
    for (std::size_t i = 0; i < terrs.size(); ++i) {
      if (i) s += ", ";
      s += territory_str(terrs[i]);
    }
    cell[{load.yade_class, load.length}] = std::move(s);
  }

  std::vector<std::size_t> width(degree + 1, 1);
  for (int j = 1; j <= degree; ++j) {
    width[j] = std::to_string(j).size();
    for (int k = 0; k < class_count; ++k) {
      auto it = cell.find({k, j});
      if (it != cell.end()) width[j] = std::max(width[j], it->second.size());
    }
  }
  std::size_t label_width = std::to_string(class_count).size() + 2;

  std::ostringstream os;
  os << std::string(label_width, ' ');
  for (int j = 1; j <= degree; ++j)
    os << "  " << j << std::string(width[j] - std::to_string(j).size(), ' ');
  os << '\n';
  for (int k = 0; k < class_count; ++k) {
    std::string label = "k_" + std::to_string(k + 1);
    os << label << std::string(label_width - label.size(), ' ');
    for (int j = 1; j <= degree; ++j) {
      auto it = cell.find({k, j});
      const std::string& s = it == cell.end() ? "-" : it->second;
      os << "  " << s << std::string(width[j] - s.size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

std::vector<GroupOracle::Elem> conjugate_chain(const GroupOracle& k,
                                               const std::vector<GroupOracle::Elem>& a,
                                               const std::vector<GroupOracle::Elem>& b,
                                               GroupOracle::Elem c0) {
  if (a.size() != b.size() || a.empty())
    throw DomainError("conjugate_chain needs nonempty factor lists of equal length");
  GroupOracle::Elem prod_a = 0, prod_b = 0;
  for (auto e : a) prod_a = k.product(prod_a, e);
  for (auto e : b) prod_b = k.product(prod_b, e);
  if (k.conjugate(prod_a, c0) != prod_b)
    throw DomainError("conjugate_chain: c0 does not conjugate the products");
  std::vector<GroupOracle::Elem> c{c0};
  for (std::size_t i = 1; i <= a.size(); ++i)
    c.push_back(k.product(k.product(k.inverse(a[i - 1]), c[i - 1]), b[i - 1]));
  if (c.back() != c0) throw Error("internal error: conjugate chain did not close");
  return c;
}

std::optional<std::vector<GroupOracle::Elem>> conjugate_wreath_cycles(
    const WreathCycle& w, const WreathCycle& v, const Perm& t,
    std::optional<GroupOracle::Elem> yade_conjugator_override) {
  const Ctx& ctx = w.element.ctx();
  const auto& k = *ctx->base;
  if (w.load.length != v.load.length)
    throw DomainError("wreath cycles have different top orders");
  // t must map the territory of w onto the territory of v, respecting tops
  for (int g : w.territory) {
    int img = t.apply(g);
    if (!std::binary_search(v.territory.begin(), v.territory.end(), img))
      throw DomainError("top conjugator does not map territory onto territory");
    if (t.apply(w.element.top().apply(g)) != v.element.top().apply(img))
      throw DomainError("top conjugator does not conjugate the top cycles");
  }

  const int len = w.load.length;
  const int n = w.element.degree();
  std::vector<GroupOracle::Elem> s(n, 0);

  std::vector<int> orbit_w{w.anchor};
  std::vector<int> orbit_v{t.apply(w.anchor)};
  for (int i = 1; i < len; ++i) {
    orbit_w.push_back(w.element.top().apply(orbit_w.back()));
    orbit_v.push_back(v.element.top().apply(orbit_v.back()));
  }

  std::vector<GroupOracle::Elem> a, b;
  for (int i = 0; i < len; ++i) {
    a.push_back(w.element.base_at(orbit_w[i]));
    b.push_back(v.element.base_at(orbit_v[i]));
  }

  GroupOracle::Elem yw = yade(w.element, orbit_w.front());
  GroupOracle::Elem yv = yade(v.element, orbit_v.front());
  GroupOracle::Elem c0;
  if (yade_conjugator_override) {
    c0 = *yade_conjugator_override;
    if (k.conjugate(yw, c0) != yv)
      throw DomainError("supplied element does not conjugate the yades");
  } else {
    auto found = k.conj_witness(yw, yv);
    if (!found) return std::nullopt;
    c0 = *found;
  }

  auto c = conjugate_chain(k, a, b, c0);
  for (int i = 0; i < len; ++i) s[orbit_w[i] - 1] = c[i];

  WreathElement conj(ctx, s, t);
  if (w.element.conjugated_by(conj) != v.element)
    throw Error("internal error: wreath cycle conjugation failed");
  return s;
}

bool is_conjugate_in_s(const WreathElement& w, const WreathElement& v) {
  if (w.ctx() != v.ctx()) throw DomainError("wreath elements belong to different contexts");
  return wreath_cycle_decomposition(w).load_multiset() ==
         wreath_cycle_decomposition(v).load_multiset();
}

namespace {

// Load-respecting top conjugator in Sym(degree), pairing cycles by anchor
// order within each stratum.
Perm structural_top_conjugator(const WreathCycleSet& cw, const WreathCycleSet& cv, int n) {
  std::vector<int> img(n + 1, 0);
  for (std::size_t si = 0; si < cw.strata.size(); ++si) {
    const auto& mw = cw.strata[si].members;
    const auto& mv = cv.strata[si].members;
    for (std::size_t i = 0; i < mw.size(); ++i) {
      const WreathCycle& z = cw.cycles[mw[i]];
      const WreathCycle& z2 = cv.cycles[mv[i]];
      int g = z.anchor, g2 = z2.anchor;
      for (int j = 0; j < z.load.length; ++j) {
        img[g] = g2;
        g = z.element.top().apply(g);
        g2 = z2.element.top().apply(g2);
      }
    }
  }
  std::vector<int> rest_w, rest_v;
  std::vector<char> hit(n + 1, 0);
  for (int g = 1; g <= n; ++g)
    if (img[g]) hit[img[g]] = 1;
  for (int g = 1; g <= n; ++g) {
    if (!img[g]) rest_w.push_back(g);
    if (!hit[g]) rest_v.push_back(g);
  }
  for (std::size_t i = 0; i < rest_w.size(); ++i) img[rest_w[i]] = rest_v[i];
  return Perm::from_images(std::vector<int>(img.begin() + 1, img.end()));
}

std::optional<Perm> find_top_conjugator(const WreathElement& w, const WreathElement& v,
                                        const WreathCycleSet& cw, const WreathCycleSet& cv) {
  const Ctx& ctx = w.ctx();
  if (ctx->full_symmetric_top) return structural_top_conjugator(cw, cv, w.degree());

  auto t0 = ctx->top.conjugating_element(w.top(), v.top());
  if (!t0) return std::nullopt;
  PermGroup ch = ctx->top.centraliser(w.top());
  TerritoryDecomposition pw = TerritoryDecomposition::of(cw);
  TerritoryDecomposition pv = TerritoryDecomposition::of(cv);
  for (const auto& c : ch.elements()) {
    Perm t = c * *t0;
    if (pw.mapped(t) == pv) return t;
  }
  return std::nullopt;
}

}  // namespace

std::optional<WreathElement> conjugacy_witness_in_w(const WreathElement& w,
                                                    const WreathElement& v) {
  if (w.ctx() != v.ctx()) throw DomainError("wreath elements belong to different contexts");
  const Ctx& ctx = w.ctx();
  const int n = w.degree();

  auto cw = wreath_cycle_decomposition(w);
  auto cv = wreath_cycle_decomposition(v);
  if (cw.load_multiset() != cv.load_multiset()) return std::nullopt;

  auto t = find_top_conjugator(w, v, cw, cv);
  if (!t) return std::nullopt;

  // pair each cycle of w with the cycle of v owning the image territory
  std::map<std::vector<int>, int> terr_to_cycle;
  for (std::size_t i = 0; i < cv.cycles.size(); ++i)
    terr_to_cycle[cv.cycles[i].territory] = static_cast<int>(i);

  std::vector<GroupOracle::Elem> s(n, 0);
  for (const auto& z : cw.cycles) {
    std::vector<int> img;
    for (int g : z.territory) img.push_back(t->apply(g));
    std::sort(img.begin(), img.end());
    auto it = terr_to_cycle.find(img);
    if (it == terr_to_cycle.end())
      throw Error("internal error: territory image missing from target decomposition");
    auto sz = conjugate_wreath_cycles(z, cv.cycles[it->second], *t);
    if (!sz) throw Error("internal error: paired cycles are not conjugate");
    for (int g : z.territory) s[g - 1] = (*sz)[g - 1];
  }

  WreathElement a(ctx, std::move(s), *t);
  if (w.conjugated_by(a) != v) throw Error("internal error: assembled witness failed");
  return a;
}

std::vector<GroupOracle::Elem> map_e(const Ctx& ctx, int point, GroupOracle::Elem x) {
  if (!ctx) throw DomainError("null wreath context");
  if (point < 1 || point > ctx->degree()) throw DomainError("point out of range");
  std::vector<GroupOracle::Elem> base(ctx->degree(), 0);
  base[point - 1] = x;
  return base;
}

std::vector<GroupOracle::Elem> map_b(const Ctx& ctx, const Perm& h, int gamma0,
                                     GroupOracle::Elem x,
                                     const std::map<int, GroupOracle::Elem>& d) {
  if (!ctx) throw DomainError("null wreath context");
  const auto& k = *ctx->base;
  auto cycles = h.cycles();
  if (cycles.size() != 1) throw DomainError("map_b needs a single nontrivial top cycle");
  if (h.apply(gamma0) == gamma0) throw DomainError("designated point not moved by the cycle");

  const int len = static_cast<int>(cycles.front().size());
  std::vector<int> orbit{gamma0};
  for (int i = 1; i < len; ++i) orbit.push_back(h.apply(orbit.back()));

  std::set<int> expected(orbit.begin() + 1, orbit.end());
  std::set<int> given;
  for (const auto& [p, val] : d) given.insert(p);
  if (given != expected)
    throw DomainError("map_b entries must cover exactly the off-anchor support");

  std::vector<GroupOracle::Elem> base(ctx->degree(), 0);
  GroupOracle::Elem head = x;
  for (int i = len - 1; i >= 1; --i) head = k.product(head, k.inverse(d.at(orbit[i])));
  base[gamma0 - 1] = head;
  for (int i = 1; i < len; ++i) base[orbit[i] - 1] = d.at(orbit[i]);
  return base;
}

std::uint64_t count_cycles_with_yade_in(const Ctx& ctx, const Perm& h, int gamma0,
                                        std::vector<GroupOracle::Elem> p) {
  if (!ctx) throw DomainError("null wreath context");
  auto cycles = h.cycles();
  if (cycles.size() != 1) throw DomainError("count needs a single nontrivial cycle");
  std::uint64_t len = cycles.front().size();
  bool moved = std::find(cycles.front().begin(), cycles.front().end(), gamma0) !=
               cycles.front().end();
  if (!moved) throw DomainError("designated point not on the cycle");
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return checked_mul(p.size(), checked_pow(ctx->base->size(), len - 1));
}

std::uint64_t stab_order_in_full_sym(const WreathCycleSet& cycles, int degree) {
  std::uint64_t order = 1;
  std::size_t terr_size = 0;
  for (const auto& s : cycles.strata) {
    std::uint64_t m = s.members.size();
    order = checked_mul(order, checked_pow(s.load.length, m));
    order = checked_mul(order, checked_factorial(m));
    terr_size += m * s.load.length;
  }
  return checked_mul(order, checked_factorial(degree - terr_size));
}

namespace {

std::uint64_t csym_order(const Perm& h) {
  std::map<std::size_t, std::uint64_t> mult;
  for (const auto& c : h.cycles()) ++mult[c.size()];
  std::uint64_t order = 1;
  for (const auto& [len, m] : mult)
    order = checked_mul(checked_mul(order, checked_pow(len, m)), checked_factorial(m));
  return checked_mul(order, checked_factorial(h.fixed_points().size()));
}

std::uint64_t exact_div(std::uint64_t a, std::uint64_t b, const char* what) {
  if (b == 0 || a % b != 0) throw Error(std::string("internal error: inexact division in ") + what);
  return a / b;
}

}  // namespace

std::uint64_t ClassSizeParts::total() const {
  return checked_mul(checked_mul(top_class_size, partition_orbit),
                     checked_mul(yade_class_product, base_freedom));
}

ClassSizeParts class_size_parts(const WreathElement& w) {
  const Ctx& ctx = w.ctx();
  const auto& k = *ctx->base;
  auto cw = wreath_cycle_decomposition(w);

  ClassSizeParts parts;
  for (const auto& z : cw.cycles) {
    parts.yade_class_product = checked_mul(parts.yade_class_product,
                                           k.class_size(z.load.yade_class));
    if (!z.trivial_top())
      parts.base_freedom = checked_mul(parts.base_freedom,
                                       checked_pow(k.size(), z.load.length - 1));
  }

  if (ctx->full_symmetric_top) {
    std::uint64_t sym = checked_factorial(ctx->degree());
    std::uint64_t c = csym_order(w.top());
    parts.top_class_size = exact_div(sym, c, "top class size");
    parts.partition_orbit =
        exact_div(c, stab_order_in_full_sym(cw, ctx->degree()), "partition orbit");
  } else {
    PermGroup ch = ctx->top.centraliser(w.top());
    parts.top_class_size = exact_div(ctx->top.size(), ch.size(), "top class size");
    PermGroup stab = stabiliser_of_partition(ch, TerritoryDecomposition::of(cw));
    parts.partition_orbit = exact_div(ch.size(), stab.size(), "partition orbit");
  }
  return parts;
}

std::uint64_t class_size(const WreathElement& w) { return class_size_parts(w).total(); }

WreathElement class_element(const WreathElement& w, const ClassParameter& p) {
  const Ctx& ctx = w.ctx();
  const auto& k = *ctx->base;
  auto cw = wreath_cycle_decomposition(w);
  if (p.points.size() != cw.cycles.size())
    throw DomainError("class parameter has wrong number of cycle choices");

  if (!ctx->full_symmetric_top) {
    if (!ctx->top.contains(p.top_coset_rep)) throw DomainError("coset representative not in H");
    if (!ctx->top.contains(p.top_centraliser_elem))
      throw DomainError("centraliser element not in H");
  }
  if (w.top().conjugated_by(p.top_centraliser_elem) != w.top())
    throw DomainError("class parameter element does not centralise the top");

  Perm ct = p.top_centraliser_elem * p.top_coset_rep;
  std::vector<GroupOracle::Elem> base(w.degree(), 0);
  for (std::size_t i = 0; i < cw.cycles.size(); ++i) {
    const WreathCycle& z = cw.cycles[i];
    const ClassPoint& cp = p.points[i];
    if (k.class_of(cp.yade_choice) != z.load.yade_class)
      throw DomainError("yade choice lies in the wrong conjugacy class");
    if (z.trivial_top()) {
      if (!cp.base_choice.empty())
        throw DomainError("trivial-top cycle takes no off-anchor entries");
      base[ct.apply(z.anchor) - 1] = cp.yade_choice;
      continue;
    }
    std::map<int, GroupOracle::Elem> d;
    for (const auto& [point, val] : cp.base_choice) d[ct.apply(point)] = val;
    Perm h_img = z.element.top().conjugated_by(ct);
    auto bmap = map_b(ctx, h_img, ct.apply(z.anchor), cp.yade_choice, d);
    for (int g = 1; g <= w.degree(); ++g)
      if (bmap[g - 1] != 0) base[g - 1] = bmap[g - 1];
  }
  return WreathElement(ctx, std::move(base), w.top().conjugated_by(ct));
}

std::size_t hash_value(const TerritoryDecomposition& p) {
  std::size_t h = 14695981039346656037ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& [load, terrs] : p.rows()) {
    mix(load.yade_class);
    mix(load.length);
    for (const auto& t : terrs) {
      mix(t.size());
      for (int v : t) mix(v);
    }
  }
  return h;
}

}  // namespace wreath
