#include "wreath/classreps.hpp"

#include <algorithm>
#include <limits>

#include "wreath/centraliser.hpp"
#include "wreath/checked.hpp"

namespace wreath {

LabellingSpace::LabellingSpace(Perm h, int class_count, std::uint64_t cap)
    : h_(std::move(h)), r_(class_count) {
  if (r_ < 1) throw DomainError("labelling space needs at least one class");
  cycles_ = h_.cycles();
  fixed_ = h_.fixed_points();
  cycle_slot_of_.assign(h_.degree() + 1, -1);
  fixed_slot_of_.assign(h_.degree() + 1, -1);
  for (std::size_t i = 0; i < cycles_.size(); ++i)
    for (int p : cycles_[i]) cycle_slot_of_[p] = static_cast<int>(i);
  for (std::size_t i = 0; i < fixed_.size(); ++i)
    fixed_slot_of_[fixed_[i]] = static_cast<int>(i);
  total_ = checked_pow(r_, slots());
  if (total_ > cap)
    throw CapExceeded("labelling space of size " + std::to_string(total_) +
                      " exceeds cap of " + std::to_string(cap));
}

std::uint64_t labelling_count(const Perm& h, int class_count) {
  std::size_t slots = h.cycles().size() + h.fixed_points().size();
  return checked_pow(class_count, slots);
}

DecompositionLabelling LabellingSpace::decode(std::uint64_t index) const {
  if (index >= total_) throw DomainError("labelling index out of range");
  DecompositionLabelling l;
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    l.cycle_class.push_back(static_cast<int>(index % r_));
    index /= r_;
  }
  for (std::size_t i = 0; i < fixed_.size(); ++i) {
    int v = static_cast<int>(index % r_);
    index /= r_;
    l.fixed_class.push_back(v == 0 ? -1 : v);
  }
  return l;
}

std::uint64_t LabellingSpace::encode(const DecompositionLabelling& l) const {
  if (l.cycle_class.size() != cycles_.size() || l.fixed_class.size() != fixed_.size())
    throw DomainError("labelling shape mismatch");
  std::uint64_t code = 0;
  for (std::size_t i = fixed_.size(); i-- > 0;) {
    int v = l.fixed_class[i];
    if (v == 0 || v >= r_ || v < -1) throw DomainError("fixed-point label out of range");
    code = code * r_ + (v < 0 ? 0 : v);
  }
  for (std::size_t i = cycles_.size(); i-- > 0;) {
    int v = l.cycle_class[i];
    if (v < 0 || v >= r_) throw DomainError("cycle label out of range");
    code = code * r_ + v;
  }
  return code;
}

TerritoryDecomposition LabellingSpace::decomposition_of(const DecompositionLabelling& l) const {
  if (l.cycle_class.size() != cycles_.size() || l.fixed_class.size() != fixed_.size())
    throw DomainError("labelling shape mismatch");
  std::vector<TerritoryDecomposition::Row> rows;
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    Load load{l.cycle_class[i], static_cast<int>(cycles_[i].size())};
    rows.push_back({load, {cycles_[i]}});
  }
  for (std::size_t i = 0; i < fixed_.size(); ++i) {
    if (l.fixed_class[i] < 0) continue;
    rows.push_back({Load{l.fixed_class[i], 1}, {{fixed_[i]}}});
  }
  return TerritoryDecomposition::from_rows(std::move(rows));
}

DecompositionLabelling LabellingSpace::labelling_of(const TerritoryDecomposition& p) const {
  DecompositionLabelling l;
  l.cycle_class.assign(cycles_.size(), -1);
  l.fixed_class.assign(fixed_.size(), -1);
  for (const auto& [load, terrs] : p.rows()) {
    for (const auto& terr : terrs) {
      if (load.length == 1) {
        if (terr.size() != 1) throw DomainError("length-1 load with non-singleton territory");
        if (load.yade_class == 0)
          throw DomainError("identity-class fixed point cannot appear in a decomposition");
        int slot = terr[0] <= h_.degree() ? fixed_slot_of_[terr[0]] : -1;
        if (slot < 0) throw DomainError("territory point is not fixed by the top");
        if (l.fixed_class[slot] != -1) throw DomainError("fixed point labelled twice");
        l.fixed_class[slot] = load.yade_class;
        continue;
      }
      int slot = terr[0] <= h_.degree() ? cycle_slot_of_[terr[0]] : -1;
      if (slot < 0) throw DomainError("territory does not match a top cycle");
      std::vector<int> expected = cycles_[slot];
      std::sort(expected.begin(), expected.end());
      if (expected != terr) throw DomainError("territory does not match a top cycle");
      if (static_cast<int>(cycles_[slot].size()) != load.length)
        throw DomainError("load length does not match the top cycle");
      if (l.cycle_class[slot] != -1) throw DomainError("top cycle labelled twice");
      l.cycle_class[slot] = load.yade_class;
    }
  }
  for (int v : l.cycle_class)
    if (v < 0) throw DomainError("decomposition does not cover every top cycle");
  return l;
}

std::vector<int> LabellingSpace::slot_action(const Perm& t) const {
  if (t.degree() != h_.degree()) throw DomainError("degree mismatch in slot action");
  std::vector<int> action(slots());
  const std::size_t c = cycles_.size();
  for (std::size_t i = 0; i < c; ++i) {
    int image = t.apply(cycles_[i][0]);
    int slot = cycle_slot_of_[image];
    if (slot < 0 || cycles_[slot].size() != cycles_[i].size())
      throw DomainError("permutation does not centralise the top");
    action[i] = slot;
  }
  for (std::size_t i = 0; i < fixed_.size(); ++i) {
    int slot = fixed_slot_of_[t.apply(fixed_[i])];
    if (slot < 0) throw DomainError("permutation does not centralise the top");
    action[c + i] = static_cast<int>(c) + slot;
  }
  return action;
}

std::uint64_t sweep_labelling_orbits(
    const LabellingSpace& space, const std::vector<Perm>& centralising_gens,
    const std::function<bool(const DecompositionLabelling&)>& emit) {
  const std::uint64_t total = space.total();
  const int r = space.r_;
  const std::size_t slots = space.slots();

  std::vector<std::vector<int>> actions;
  for (const auto& t : centralising_gens) actions.push_back(space.slot_action(t));

  auto decode_values = [&](std::uint64_t code, std::vector<int>& vals) {
    vals.resize(slots);
    for (std::size_t i = 0; i < slots; ++i) {
      vals[i] = static_cast<int>(code % r);
      code /= r;
    }
  };
  auto encode_values = [&](const std::vector<int>& vals) {
    std::uint64_t code = 0;
    for (std::size_t i = slots; i-- > 0;) code = code * r + vals[i];
    return code;
  };

  std::vector<bool> visited(total, false);
  std::uint64_t count = 0;
  std::vector<std::uint64_t> stack;
  std::vector<int> vals, img(slots);
  for (std::uint64_t start = 0; start < total; ++start) {
    if (visited[start]) continue;
    ++count;
    if (emit && !emit(space.decode(start))) return count;
    visited[start] = true;
    stack.assign(1, start);
    while (!stack.empty()) {
      std::uint64_t cur = stack.back();
      stack.pop_back();
      decode_values(cur, vals);
      for (const auto& action : actions) {
        for (std::size_t i = 0; i < slots; ++i) img[action[i]] = vals[i];
        std::uint64_t code = encode_values(img);
        if (!visited[code]) {
          visited[code] = true;
          stack.push_back(code);
        }
      }
    }
  }
  return count;
}

namespace {

void partitions_desc(int n, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_desc(n - part, part, current, out);
    current.pop_back();
  }
}

Perm partition_representative(const std::vector<int>& parts, int degree) {
  Perm p = Perm::identity(degree);
  int next = 1;
  for (int part : parts) {
    if (part >= 2) {
      std::vector<int> cyc(part);
      for (int i = 0; i < part; ++i) cyc[i] = next + i;
      p = p * Perm::from_cycle(cyc, degree);
    }
    next += part;
  }
  return p;
}

}  // namespace

std::vector<Perm> top_class_representatives(const Ctx& ctx) {
  if (!ctx) throw DomainError("null wreath context");
  const int n = ctx->degree();
  if (ctx->full_symmetric_top) {
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    partitions_desc(n, n, current, parts);
    std::vector<Perm> reps;
    for (const auto& p : parts) reps.push_back(partition_representative(p, n));
    return reps;
  }
  const auto& elems = ctx->top.elements();
  std::vector<int> cls(elems.size(), -1);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (cls[i] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(elems[i]);
    std::vector<int> orbit{static_cast<int>(i)};
    cls[i] = c;
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      for (const auto& g : ctx->top.generators()) {
        int img = ctx->top.index_of(elems[orbit[j]].conjugated_by(g));
        if (cls[img] < 0) {
          cls[img] = c;
          orbit.push_back(img);
        }
      }
    }
  }
  return reps;
}

std::vector<Perm> top_centralising_generators(const Ctx& ctx, const Perm& h) {
  if (!ctx) throw DomainError("null wreath context");
  if (ctx->full_symmetric_top) return centraliser_in_sym(h).generators;
  return ctx->top.centraliser(h).generators();
}

std::vector<TerritoryDecomposition> orbit_representatives(const Ctx& ctx, const Perm& h,
                                                          std::uint64_t cap) {
  LabellingSpace space(h, static_cast<int>(ctx->base->class_count()), cap);
  auto gens = top_centralising_generators(ctx, h);
  std::vector<TerritoryDecomposition> out;
  sweep_labelling_orbits(space, gens, [&](const DecompositionLabelling& l) {
    out.push_back(space.decomposition_of(l));
    return true;
  });
  return out;
}

namespace {

WreathElement element_of_labelling(const Ctx& ctx, const LabellingSpace& space,
                                   const DecompositionLabelling& l) {
  const auto& reps = ctx->base->class_representatives();
  std::vector<GroupOracle::Elem> base(ctx->degree(), 0);
  const auto& cycles = space.top_cycles();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    int anchor = *std::min_element(cycles[i].begin(), cycles[i].end());
    base[anchor - 1] = reps[l.cycle_class[i]];
  }
  const auto& fixed = space.fixed_points();
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (l.fixed_class[i] >= 0) base[fixed[i] - 1] = reps[l.fixed_class[i]];
  return WreathElement(ctx, std::move(base), space.top());
}

}  // namespace

WreathElement phi_h(const Ctx& ctx, const Perm& h, const TerritoryDecomposition& p) {
  if (!ctx) throw DomainError("null wreath context");
  LabellingSpace space(h, static_cast<int>(ctx->base->class_count()),
                       std::numeric_limits<std::uint64_t>::max());
  return element_of_labelling(ctx, space, space.labelling_of(p));
}

std::vector<std::pair<Perm, std::uint64_t>> class_count_by_top(const Ctx& ctx,
                                                               std::uint64_t cap) {
  std::vector<std::pair<Perm, std::uint64_t>> out;
  for (const auto& h : top_class_representatives(ctx)) {
    LabellingSpace space(h, static_cast<int>(ctx->base->class_count()), cap);
    auto gens = top_centralising_generators(ctx, h);
    out.push_back({h, sweep_labelling_orbits(space, gens, nullptr)});
  }
  return out;
}

std::uint64_t class_count(const Ctx& ctx, std::uint64_t cap) {
  std::uint64_t total = 0;
  for (const auto& [h, count] : class_count_by_top(ctx, cap)) total += count;
  return total;
}

void for_each_class_representative(const Ctx& ctx,
                                   const std::function<bool(const WreathElement&)>& visit,
                                   std::uint64_t cap) {
  for (const auto& h : top_class_representatives(ctx)) {
    LabellingSpace space(h, static_cast<int>(ctx->base->class_count()), cap);
    auto gens = top_centralising_generators(ctx, h);
    bool keep_going = true;
    sweep_labelling_orbits(space, gens, [&](const DecompositionLabelling& l) {
      keep_going = visit(element_of_labelling(ctx, space, l));
      return keep_going;
    });
    if (!keep_going) return;
  }
}

}  // namespace wreath
