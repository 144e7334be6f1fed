#include "wreath/centraliser.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wreath/checked.hpp"

namespace wreath {

namespace {

std::vector<int> orbit_from(const Perm& cycle, int anchor, int length) {
  std::vector<int> out{anchor};
  for (int i = 1; i < length; ++i) out.push_back(cycle.apply(out.back()));
  return out;
}

}  // namespace

Perm psi_embed(const std::vector<CycleAnchor>& slots, const Perm& sigma, int degree) {
  const int m = static_cast<int>(slots.size());
  if (sigma.degree() != m) throw DomainError("slot permutation degree mismatch");

  int order = -1;
  std::vector<char> seen(degree + 1, 0);
  for (const auto& [cycle, anchor] : slots) {
    if (cycle.degree() != degree) throw DomainError("slot cycle degree mismatch");
    auto cs = cycle.cycles();
    if (cs.size() > 1) throw DomainError("slot is not a single cycle");
    int o = cs.empty() ? 1 : static_cast<int>(cs.front().size());
    if (order < 0) order = o;
    if (o != order) throw DomainError("slots have different cycle orders");
    if (anchor < 1 || anchor > degree) throw DomainError("slot anchor out of range");
    if (!cs.empty() &&
        std::find(cs.front().begin(), cs.front().end(), anchor) == cs.front().end())
      throw DomainError("slot anchor not on its cycle");
    for (int i = 0, g = anchor; i < o; ++i, g = cycle.apply(g)) {
      if (seen[g]) throw DomainError("slot supports are not disjoint");
      seen[g] = 1;
    }
  }

  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  for (int i = 1; i <= m; ++i) {
    const auto& src = slots[i - 1];
    const auto& dst = slots[sigma.apply(i) - 1];
    int g = src.anchor, g2 = dst.anchor;
    for (int s = 0; s < order; ++s) {
      img[g - 1] = g2;
      g = src.cycle.apply(g);
      g2 = dst.cycle.apply(g2);
    }
  }
  return Perm::from_images(std::move(img));
}

CentraliserInSym centraliser_in_sym(const Perm& h) {
  CentraliserInSym out;
  const int n = h.degree();
  std::map<int, std::vector<Perm>> by_len;
  for (const auto& c : h.cycles())
    by_len[static_cast<int>(c.size())].push_back(Perm::from_cycle(c, n));
  for (auto& [len, cycles] : by_len) out.strata.push_back({len, std::move(cycles)});
  out.fixed_points = h.fixed_points();

  for (const auto& [len, cycles] : out.strata) {
    const int m = static_cast<int>(cycles.size());
    out.order = checked_mul(out.order, checked_pow(len, m));
    out.order = checked_mul(out.order, checked_factorial(m));
    std::vector<CycleAnchor> slots;
    for (const auto& c : cycles) slots.push_back({c, c.support().front()});
    for (const auto& c : cycles) out.generators.push_back(c);
    for (int i = 1; i < m; ++i)
      out.generators.push_back(
          psi_embed(slots, Perm::from_cycle({i, i + 1}, m), n));
  }
  out.order = checked_mul(out.order, checked_factorial(out.fixed_points.size()));
  const auto& fix = out.fixed_points;
  if (fix.size() >= 2)
    out.generators.push_back(Perm::from_cycle({fix[0], fix[1]}, n));
  if (fix.size() >= 3) out.generators.push_back(Perm::from_cycle(fix, n));
  return out;
}

TopStabFrame::TopStabFrame(const WreathCycleSet& cycles, int degree)
    : TopStabFrame(cycles, degree, {}) {}

TopStabFrame::TopStabFrame(const WreathCycleSet& cycles, int degree, std::vector<int> anchors)
    : degree_(degree) {
  if (anchors.empty()) {
    for (const auto& z : cycles.cycles) anchors.push_back(z.anchor);
  }
  if (anchors.size() != cycles.cycles.size())
    throw DomainError("anchor list does not match the cycle count");
  for (const auto& s : cycles.strata) {
    Stratum st{s.load, {}};
    for (int i : s.members) {
      const WreathCycle& z = cycles.cycles[i];
      int anchor = anchors[i];
      if (!std::binary_search(z.territory.begin(), z.territory.end(), anchor))
        throw DomainError("anchor not in its cycle's territory");
      st.slots.push_back({z.element.top(), anchor});
    }
    strata_.push_back(std::move(st));
  }
  build();
}

void TopStabFrame::build() {
  locate_.assign(degree_ + 1, {-1, -1, -1});
  for (std::size_t si = 0; si < strata_.size(); ++si) {
    const auto& st = strata_[si];
    for (std::size_t zi = 0; zi < st.slots.size(); ++zi) {
      auto orbit = orbit_from(st.slots[zi].top, st.slots[zi].anchor, st.load.length);
      for (int j = 0; j < st.load.length; ++j) {
        if (locate_[orbit[j]][0] >= 0) throw DomainError("territories are not disjoint");
        locate_[orbit[j]] = {static_cast<int>(si), static_cast<int>(zi), j};
      }
    }
  }
  for (int g = 1; g <= degree_; ++g)
    if (locate_[g][0] < 0) off_.push_back(g);

  order_ = 1;
  for (const auto& st : strata_) {
    const int m = static_cast<int>(st.slots.size());
    order_ = checked_mul(order_, checked_pow(st.load.length, m));
    order_ = checked_mul(order_, checked_factorial(m));
    for (const auto& slot : st.slots)
      if (!slot.top.is_identity()) generators_.push_back(slot.top);
    std::vector<CycleAnchor> slots;
    for (const auto& slot : st.slots) slots.push_back({slot.top, slot.anchor});
    for (int i = 1; i < m; ++i)
      generators_.push_back(psi_embed(slots, Perm::from_cycle({i, i + 1}, m), degree_));
  }
  order_ = checked_mul(order_, checked_factorial(off_.size()));
  if (off_.size() >= 2)
    generators_.push_back(Perm::from_cycle({off_[0], off_[1]}, degree_));
  if (off_.size() >= 3) generators_.push_back(Perm::from_cycle(off_, degree_));
}

std::optional<TopStabFrame::Coordinates> TopStabFrame::try_decompose(const Perm& t) const {
  if (t.degree() != degree_) return std::nullopt;
  Coordinates out;
  for (const auto& st : strata_) {
    const int m = static_cast<int>(st.slots.size());
    std::vector<int> sigma(m, -1), expo(m, 0);
    std::vector<char> used(m, 0);
    for (int zi = 0; zi < m; ++zi) {
      const auto& slot = st.slots[zi];
      auto loc = locate_[t.apply(slot.anchor)];
      if (loc[0] < 0 || strata_[loc[0]].load != st.load) return std::nullopt;
      if (&strata_[loc[0]] != &st) return std::nullopt;
      int yi = loc[1], e = loc[2];
      if (used[yi]) return std::nullopt;
      used[yi] = 1;
      sigma[zi] = yi;
      expo[zi] = e;
      // the whole orbit must follow
      const auto& dst = st.slots[yi];
      int g = slot.anchor;
      int g2 = t.apply(slot.anchor);
      for (int s = 0; s < st.load.length; ++s) {
        if (t.apply(g) != g2) return std::nullopt;
        g = slot.top.apply(g);
        g2 = dst.top.apply(g2);
      }
    }
    out.sigma.push_back(std::move(sigma));
    out.exponents.push_back(std::move(expo));
  }
  std::vector<int> img(degree_);
  std::iota(img.begin(), img.end(), 1);
  for (int g : off_) {
    int d = t.apply(g);
    if (locate_[d][0] >= 0) return std::nullopt;
    img[g - 1] = d;
  }
  out.residual = Perm::from_images(std::move(img));
  return out;
}

bool TopStabFrame::member(const Perm& t) const { return try_decompose(t).has_value(); }

TopStabFrame::Coordinates TopStabFrame::decompose(const Perm& t) const {
  auto c = try_decompose(t);
  if (!c) throw DomainError("permutation is not in the partition stabiliser");
  return *std::move(c);
}

Perm TopStabFrame::reassemble(const Coordinates& c) const {
  if (c.sigma.size() != strata_.size() || c.exponents.size() != strata_.size())
    throw DomainError("coordinate shape mismatch");
  std::vector<int> img(degree_);
  std::iota(img.begin(), img.end(), 1);
  for (std::size_t si = 0; si < strata_.size(); ++si) {
    const auto& st = strata_[si];
    const int m = static_cast<int>(st.slots.size());
    if (static_cast<int>(c.sigma[si].size()) != m ||
        static_cast<int>(c.exponents[si].size()) != m)
      throw DomainError("coordinate shape mismatch");
    for (int zi = 0; zi < m; ++zi) {
      int yi = c.sigma[si][zi];
      int e = c.exponents[si][zi];
      if (yi < 0 || yi >= m || e < 0 || e >= st.load.length)
        throw DomainError("coordinate out of range");
      auto src = orbit_from(st.slots[zi].top, st.slots[zi].anchor, st.load.length);
      auto dst = orbit_from(st.slots[yi].top, st.slots[yi].anchor, st.load.length);
      for (int s = 0; s < st.load.length; ++s)
        img[src[s] - 1] = dst[(s + e) % st.load.length];
    }
  }
  if (c.residual.degree() != degree_) throw DomainError("residual degree mismatch");
  for (int g : off_) {
    int d = c.residual.apply(g);
    if (locate_[d][0] >= 0) throw DomainError("residual moves territory points");
    img[g - 1] = d;
  }
  return Perm::from_images(std::move(img));
}

CentraliserFrame CentraliserFrame::make(const WreathElement& sparse) {
  return CentraliserFrame(sparse, std::nullopt);
}

CentraliserFrame::CentraliserFrame(WreathElement sparse,
                                   std::vector<GroupOracle::Elem> connectors)
    : CentraliserFrame(std::move(sparse),
                       std::optional<std::vector<GroupOracle::Elem>>(std::move(connectors))) {}

CentraliserFrame::CentraliserFrame(WreathElement sparse,
                                   std::optional<std::vector<GroupOracle::Elem>> conn)
    : sparse_(std::move(sparse)) {
  const auto& k = *sparse_.ctx()->base;
  cycles_ = wreath_cycle_decomposition(sparse_);

  designated_.resize(cycles_.cycles.size());
  for (std::size_t i = 0; i < cycles_.cycles.size(); ++i) {
    const auto& z = cycles_.cycles[i];
    int designated = 0;
    for (int g : z.territory) {
      if (z.element.base_at(g) == 0) continue;
      if (designated) throw DomainError("element is not sparse");
      designated = g;
    }
    designated_[i] = designated ? designated : z.anchor;
  }

  reference_.resize(cycles_.strata.size());
  for (std::size_t si = 0; si < cycles_.strata.size(); ++si)
    reference_[si] = cycles_.strata[si].members.front();

  std::vector<int> stratum_of(cycles_.cycles.size());
  for (std::size_t si = 0; si < cycles_.strata.size(); ++si)
    for (int z : cycles_.strata[si].members) stratum_of[z] = static_cast<int>(si);

  if (conn) {
    connectors_ = std::move(*conn);
    if (connectors_.size() != cycles_.cycles.size())
      throw DomainError("connector list does not match the cycle count");
    for (std::size_t z = 0; z < cycles_.cycles.size(); ++z) {
      GroupOracle::Elem ref = reference_entry(stratum_of[z]);
      GroupOracle::Elem entry = sparse_.base_at(designated_[z]);
      if (k.conjugate(ref, connectors_[z]) != entry)
        throw DomainError("connector does not conjugate the reference entry");
      if (static_cast<int>(z) == reference_[stratum_of[z]] && connectors_[z] != 0)
        throw DomainError("reference connector must be the identity");
    }
  } else {
    connectors_.resize(cycles_.cycles.size());
    for (std::size_t z = 0; z < cycles_.cycles.size(); ++z) {
      GroupOracle::Elem ref = reference_entry(stratum_of[z]);
      GroupOracle::Elem entry = sparse_.base_at(designated_[z]);
      auto x = k.conj_witness(ref, entry);
      if (!x) throw Error("internal error: entries of one load are not conjugate");
      connectors_[z] = *x;
    }
  }

  stab_ = TopStabFrame(cycles_, sparse_.degree(), designated_);
}

GroupOracle::Elem CentraliserFrame::reference_entry(int stratum) const {
  int z = reference_[stratum];
  return sparse_.base_at(designated_[z]);
}

WreathElement CentraliserFrame::phi(const std::vector<GroupOracle::Elem>& c_per_cycle,
                                    const std::vector<GroupOracle::Elem>& c_off,
                                    const Perm& t) const {
  const auto& k = *sparse_.ctx()->base;
  if (c_per_cycle.size() != cycles_.cycles.size())
    throw DomainError("one base choice per cycle required");
  if (c_off.size() != stab_.off_territory().size())
    throw DomainError("one base choice per off-territory point required");

  auto coords = stab_.decompose(t);

  std::vector<GroupOracle::Elem> s(sparse_.degree(), 0);
  for (std::size_t si = 0; si < cycles_.strata.size(); ++si) {
    const auto& members = cycles_.strata[si].members;
    const int len = cycles_.strata[si].load.length;
    GroupOracle::Elem ref = reference_entry(static_cast<int>(si));
    for (std::size_t zi = 0; zi < members.size(); ++zi) {
      int z = members[zi];
      int y = members[coords.sigma[si][zi]];
      int e = coords.exponents[si][zi];
      GroupOracle::Elem c = c_per_cycle[z];
      if (k.product(c, ref) != k.product(ref, c))
        throw DomainError("base choice does not centralise the reference entry");
      GroupOracle::Elem core =
          k.product(k.product(k.inverse(connectors_[z]), c), connectors_[y]);
      GroupOracle::Elem entry_y = sparse_.base_at(designated_[y]);
      const Perm& top_z = cycles_.cycles[z].element.top();
      int g = designated_[z];
      // walk j - e steps forward from the designated point, wrapping
      for (int s0 = 0; s0 < ((0 - e) % len + len) % len; ++s0) g = top_z.apply(g);
      for (int j = 0; j < len; ++j) {
        GroupOracle::Elem val = core;
        if (j >= 1 && j <= e) val = k.product(val, entry_y);
        s[g - 1] = val;
        g = top_z.apply(g);
      }
    }
  }
  const auto& off = stab_.off_territory();
  for (std::size_t i = 0; i < off.size(); ++i) s[off[i] - 1] = c_off[i];

  WreathElement out(sparse_.ctx(), std::move(s), t);
  if (out * sparse_ != sparse_ * out)
    throw Error("internal error: centraliser image does not commute");
  return out;
}

std::uint64_t centraliser_order(const WreathElement& w) {
  const Ctx& ctx = w.ctx();
  const auto& k = *ctx->base;
  auto dec = wreath_cycle_decomposition(w);

  std::uint64_t base = 1;
  std::size_t terr = 0;
  for (const auto& st : dec.strata) {
    std::uint64_t ck = k.size() / k.class_size(st.load.yade_class);
    base = checked_mul(base, checked_pow(ck, st.members.size()));
    terr += st.members.size() * st.load.length;
  }
  base = checked_mul(base, checked_pow(k.size(), ctx->degree() - terr));

  std::uint64_t stab;
  if (ctx->full_symmetric_top) {
    stab = stab_order_in_full_sym(dec, ctx->degree());
  } else {
    PermGroup ch = ctx->top.centraliser(w.top());
    stab = stabiliser_of_partition(ch, TerritoryDecomposition::of(dec)).size();
  }
  return checked_mul(base, stab);
}

CentraliserDescription centraliser_of(const WreathElement& w) {
  const Ctx& ctx = w.ctx();
  const auto& k = *ctx->base;
  auto sd = sparse_decomposition(w);
  CentraliserFrame frame = CentraliserFrame::make(sd.sparse);
  const auto& cycles = frame.cycles();

  CentraliserDescription out;
  out.sparse_conjugator = sd.conjugator;

  std::vector<GroupOracle::Elem> c_id(cycles.cycles.size(), 0);
  std::vector<GroupOracle::Elem> off_id(frame.stab().off_territory().size(), 0);
  Perm t_id = Perm::identity(ctx->degree());

  std::vector<WreathElement> gens;
  for (std::size_t si = 0; si < cycles.strata.size(); ++si) {
    auto kgens = k.centraliser_generators(frame.reference_entry(static_cast<int>(si)));
    for (int z : cycles.strata[si].members) {
      for (auto g : kgens) {
        auto c = c_id;
        c[z] = g;
        gens.push_back(frame.phi(c, off_id, t_id));
      }
    }
  }
  auto kgens = k.group_generators();
  for (std::size_t i = 0; i < off_id.size(); ++i) {
    for (auto g : kgens) {
      auto c = off_id;
      c[i] = g;
      gens.push_back(frame.phi(c_id, c, t_id));
    }
  }

  std::vector<Perm> top_gens;
  std::uint64_t stab_order;
  if (ctx->full_symmetric_top) {
    top_gens = frame.stab().sym_generators();
    stab_order = frame.stab().sym_order();
  } else {
    PermGroup ch = ctx->top.centraliser(sd.sparse.top());
    PermGroup stab = stabiliser_of_partition(ch, TerritoryDecomposition::of(cycles));
    top_gens = stab.generators();
    stab_order = stab.size();
  }
  for (const auto& t : top_gens) gens.push_back(frame.phi(c_id, off_id, t));

  // carry the generators of the centraliser of the sparse form back to w
  WreathElement a_inv = sd.conjugator.inverse();
  for (auto& g : gens) {
    WreathElement back = sd.conjugator * g * a_inv;
    if (back * w != w * back)
      throw Error("internal error: centraliser generator does not commute");
    out.generators.push_back(std::move(back));
  }

  out.stab_order = stab_order;
  std::uint64_t base = 1;
  std::size_t terr = 0;
  for (const auto& st : cycles.strata) {
    std::uint64_t ck = k.size() / k.class_size(st.load.yade_class);
    base = checked_mul(base, checked_pow(ck, st.members.size()));
    terr += st.members.size() * st.load.length;
  }
  base = checked_mul(base, checked_pow(k.size(), ctx->degree() - terr));
  out.base_order = base;
  out.order = checked_mul(base, stab_order);
  return out;
}

}  // namespace wreath
