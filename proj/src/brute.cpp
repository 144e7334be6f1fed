#include "wreath/brute.hpp"

#include <algorithm>
#include <queue>

#include "wreath/checked.hpp"

namespace wreath {

EnumeratedWreathGroup::EnumeratedWreathGroup(Ctx ctx, std::uint64_t cap)
    : ctx_(std::move(ctx)) {
  const auto k = static_cast<std::uint64_t>(ctx_->base->size());
  base_block_ = 1;
  for (int i = 0; i < ctx_->degree(); ++i) base_block_ = checked_mul(base_block_, k);
  size_ = checked_mul(base_block_, ctx_->top.size());
  if (cap != 0 && size_ > cap)
    throw CapExceeded("wreath product has " + std::to_string(size_) +
                      " elements, above cap " + std::to_string(cap));
}

WreathElement EnumeratedWreathGroup::element(std::uint64_t index) const {
  if (index >= size_) throw DomainError("element index out of range");
  const auto k = static_cast<std::uint64_t>(ctx_->base->size());
  std::vector<GroupOracle::Elem> base(ctx_->degree());
  std::uint64_t rest = index % base_block_;
  for (int i = 0; i < ctx_->degree(); ++i) {
    base[i] = static_cast<GroupOracle::Elem>(rest % k);
    rest /= k;
  }
  const Perm& top = ctx_->top.elements()[index / base_block_];
  return WreathElement(ctx_, std::move(base), top);
}

std::uint64_t EnumeratedWreathGroup::index_of(const WreathElement& w) const {
  const auto k = static_cast<std::uint64_t>(ctx_->base->size());
  std::uint64_t idx = 0;
  std::uint64_t mult = 1;
  for (int i = 0; i < ctx_->degree(); ++i) {
    idx += mult * static_cast<std::uint64_t>(w.base()[i]);
    mult *= k;
  }
  return idx + base_block_ * static_cast<std::uint64_t>(ctx_->top.index_of(w.top()));
}

std::vector<WreathElement> EnumeratedWreathGroup::generators() const {
  std::vector<WreathElement> gens;
  const auto& k_gens = ctx_->base->group_generators();
  for (int point = 1; point <= ctx_->degree(); ++point)
    for (auto g : k_gens) {
      auto w = WreathElement::identity(ctx_);
      w.set_base_at(point, g);
      gens.push_back(std::move(w));
    }
  for (const auto& h : ctx_->top.generators())
    gens.emplace_back(ctx_, std::vector<GroupOracle::Elem>(ctx_->degree(), 0), h);
  return gens;
}

bool bf_is_conjugate(const EnumeratedWreathGroup& w_group, const WreathElement& w,
                     const WreathElement& v) {
  return bf_conjugacy_witness(w_group, w, v).has_value();
}

std::optional<WreathElement> bf_conjugacy_witness(const EnumeratedWreathGroup& w_group,
                                                  const WreathElement& w,
                                                  const WreathElement& v) {
  for (std::uint64_t i = 0; i < w_group.size(); ++i) {
    WreathElement a = w_group.element(i);
    if (w.conjugated_by(a) == v) return a;
  }
  return std::nullopt;
}

std::vector<WreathElement> bf_centraliser(const EnumeratedWreathGroup& w_group,
                                          const WreathElement& w) {
  std::vector<WreathElement> out;
  for (std::uint64_t i = 0; i < w_group.size(); ++i) {
    WreathElement a = w_group.element(i);
    if (a * w == w * a) out.push_back(std::move(a));
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> bf_conjugacy_classes(
    const EnumeratedWreathGroup& w_group) {
  const std::uint64_t n = w_group.size();
  std::vector<WreathElement> gens = w_group.generators();
  std::vector<WreathElement> gen_invs;
  gen_invs.reserve(gens.size());
  for (const auto& g : gens) gen_invs.push_back(g.inverse());

  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint64_t>> classes;
  for (std::uint64_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint64_t> cls;
    std::queue<std::uint64_t> queue;
    seen[start] = true;
    queue.push(start);
    while (!queue.empty()) {
      std::uint64_t cur = queue.front();
      queue.pop();
      cls.push_back(cur);
      WreathElement x = w_group.element(cur);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        std::uint64_t img = w_group.index_of(gen_invs[j] * x * gens[j]);
        if (!seen[img]) {
          seen[img] = true;
          queue.push(img);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

long long bf_order(const WreathElement& w) {
  const WreathElement id = WreathElement::identity(w.ctx());
  WreathElement cur = w;
  long long ord = 1;
  while (!(cur == id)) {
    cur = cur * w;
    ++ord;
    if (ord > 100'000'000) throw DomainError("element order exceeds iteration bound");
  }
  return ord;
}

}  // namespace wreath
