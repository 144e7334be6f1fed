#include "wreath/element.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wreath {

std::shared_ptr<const WreathContext> WreathContext::make(
    std::shared_ptr<const GroupOracle> base, PermGroup top) {
  if (!base) throw DomainError("null base group");
  auto ctx = std::make_shared<WreathContext>();
  ctx->base = std::move(base);
  ctx->top = std::move(top);
  return ctx;
}

std::shared_ptr<const WreathContext> WreathContext::make_full_symmetric(
    std::shared_ptr<const GroupOracle> base, int degree, std::size_t cap) {
  auto ctx = std::make_shared<WreathContext>();
  if (!base) throw DomainError("null base group");
  ctx->base = std::move(base);
  ctx->top = PermGroup::symmetric(degree, cap);
  ctx->full_symmetric_top = true;
  return ctx;
}

namespace {

void check_same_ctx(const WreathElement& w, const WreathElement& v) {
  if (w.ctx() != v.ctx()) throw DomainError("wreath elements belong to different contexts");
}

}  // namespace

WreathElement::WreathElement(Ctx ctx, std::vector<GroupOracle::Elem> base, Perm top)
    : ctx_(std::move(ctx)), base_(std::move(base)), top_(std::move(top)) {
  if (!ctx_) throw DomainError("null wreath context");
  if (static_cast<int>(base_.size()) != ctx_->degree() || top_.degree() != ctx_->degree())
    throw DomainError("wreath element does not match context degree");
  const auto n = static_cast<GroupOracle::Elem>(ctx_->base->size());
  for (auto e : base_)
    if (e < 0 || e >= n) throw DomainError("base entry out of range");
}

void WreathElement::set_base_at(int point, GroupOracle::Elem value) {
  if (point < 1 || point > degree()) throw DomainError("point out of range");
  if (value < 0 || value >= static_cast<GroupOracle::Elem>(ctx_->base->size()))
    throw DomainError("base entry out of range");
  base_[point - 1] = value;
}

WreathElement WreathElement::identity(const Ctx& ctx) {
  if (!ctx) throw DomainError("null wreath context");
  return WreathElement(ctx, std::vector<GroupOracle::Elem>(ctx->degree(), 0),
                       Perm::identity(ctx->degree()));
}

bool WreathElement::is_identity() const {
  if (!top_.is_identity()) return false;
  return std::all_of(base_.begin(), base_.end(), [](auto e) { return e == 0; });
}

WreathElement operator*(const WreathElement& w, const WreathElement& v) {
  check_same_ctx(w, v);
  const auto& K = *w.ctx()->base;
  std::vector<GroupOracle::Elem> base(w.base_.size());
  for (int g = 1; g <= w.degree(); ++g)
    base[g - 1] = K.product(w.base_at(g), v.base_at(w.top_.apply(g)));
  return WreathElement(w.ctx(), std::move(base), w.top_ * v.top_);
}

WreathElement WreathElement::inverse() const {
  const auto& K = *ctx_->base;
  Perm tinv = top_.inverse();
  std::vector<GroupOracle::Elem> base(base_.size());
  for (int g = 1; g <= degree(); ++g) base[g - 1] = K.inverse(base_at(tinv.apply(g)));
  return WreathElement(ctx_, std::move(base), std::move(tinv));
}

WreathElement WreathElement::power(long long k) const {
  WreathElement b = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  WreathElement acc = identity(ctx_);
  while (k > 0) {
    if (k & 1) acc = acc * b;
    b = b * b;
    k >>= 1;
  }
  return acc;
}

WreathElement WreathElement::conjugated_by(const WreathElement& a) const {
  return a.inverse() * (*this) * a;
}

std::string WreathElement::str() const {
  std::ostringstream os;
  os << '(';
  for (int g = 1; g <= degree(); ++g) {
    if (g > 1) os << ", ";
    os << ctx_->base->describe(base_at(g));
  }
  os << " ; " << top_.str() << ')';
  return os.str();
}

WreathElement parse_wreath_element(const std::string& text, const Ctx& ctx) {
  if (!ctx) throw DomainError("null wreath context");
  auto first = text.find_first_not_of(" \t\n\r");
  auto last = text.find_last_not_of(" \t\n\r");
  if (first == std::string::npos || text[first] != '(' || text[last] != ')')
    throw ParseError("wreath element must be parenthesised: " + text);
  std::string inner = text.substr(first + 1, last - first - 1);

  // split base part and top part at the depth-0 semicolon
  int depth = 0;
  std::size_t semi = std::string::npos;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    else if (inner[i] == ')') --depth;
    else if (inner[i] == ';' && depth == 0) {
      if (semi != std::string::npos) throw ParseError("multiple ';' in wreath element: " + text);
      semi = i;
    }
  }
  if (semi == std::string::npos) throw ParseError("missing ';' in wreath element: " + text);

  std::string base_part = inner.substr(0, semi);
  std::string top_part = inner.substr(semi + 1);

  std::vector<std::string> tokens;
  depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= base_part.size(); ++i) {
    if (i == base_part.size() || (base_part[i] == ',' && depth == 0)) {
      tokens.push_back(base_part.substr(start, i - start));
      start = i + 1;
      continue;
    }
    if (base_part[i] == '(') ++depth;
    else if (base_part[i] == ')') --depth;
  }
  if (static_cast<int>(tokens.size()) != ctx->degree())
    throw ParseError("wreath element has " + std::to_string(tokens.size()) +
                     " base entries, expected " + std::to_string(ctx->degree()));

  std::vector<GroupOracle::Elem> base;
  for (auto& tok : tokens) base.push_back(ctx->base->parse(tok));
  Perm top = Perm::parse(top_part, ctx->degree());
  return WreathElement(ctx, std::move(base), std::move(top));
}

std::vector<int> territory(const WreathElement& w) {
  std::vector<int> out;
  for (int g = 1; g <= w.degree(); ++g)
    if (w.top().apply(g) != g || w.base_at(g) != 0) out.push_back(g);
  return out;
}

bool is_wreath_cycle(const WreathElement& w) {
  auto terr = territory(w);
  if (w.top().is_identity()) return terr.size() == 1;
  auto cycles = w.top().cycles();
  return cycles.size() == 1 && terr == w.top().support();
}

WreathElement restrict_to(const WreathElement& w, const std::vector<int>& points) {
  std::vector<char> in(w.degree() + 1, 0);
  for (int p : points) {
    if (p < 1 || p > w.degree()) throw DomainError("restriction point out of range");
    in[p] = 1;
  }
  std::vector<int> img(w.degree());
  std::iota(img.begin(), img.end(), 1);
  for (int g = 1; g <= w.degree(); ++g) {
    if (!in[g]) continue;
    int image = w.top().apply(g);
    if (image != g && !in[image])
      throw DomainError("restriction set is not a union of top cycles");
    img[g - 1] = image;
  }
  std::vector<GroupOracle::Elem> base(w.degree(), 0);
  for (int g = 1; g <= w.degree(); ++g)
    if (in[g]) base[g - 1] = w.base_at(g);
  return WreathElement(w.ctx(), std::move(base), Perm::from_images(std::move(img)));
}

WreathCycleSet wreath_cycle_decomposition(const WreathElement& w) {
  const auto& K = *w.ctx()->base;
  WreathCycleSet out;

  for (const auto& cyc : w.top().cycles()) {
    WreathCycle z;
    z.territory = cyc;
    std::sort(z.territory.begin(), z.territory.end());
    z.anchor = z.territory.front();
    z.element = restrict_to(w, cyc);
    z.load.length = static_cast<int>(cyc.size());
    out.cycles.push_back(std::move(z));
  }
  for (int g = 1; g <= w.degree(); ++g) {
    if (w.top().apply(g) != g || w.base_at(g) == 0) continue;
    WreathCycle z;
    z.territory = {g};
    z.anchor = g;
    std::vector<GroupOracle::Elem> base(w.degree(), 0);
    base[g - 1] = w.base_at(g);
    z.element = WreathElement(w.ctx(), std::move(base), Perm::identity(w.degree()));
    z.load.length = 1;
    out.cycles.push_back(std::move(z));
  }

  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const WreathCycle& a, const WreathCycle& b) { return a.anchor < b.anchor; });
  for (auto& z : out.cycles) {
    z.yade_at_anchor = yade(z.element, z.anchor);
    z.load.yade_class = K.class_of(z.yade_at_anchor);
  }

  for (int i = 0; i < static_cast<int>(out.cycles.size()); ++i) {
    const Load& l = out.cycles[i].load;
    auto it = std::find_if(out.strata.begin(), out.strata.end(),
                           [&](const LoadStratum& s) { return s.load == l; });
    if (it == out.strata.end()) {
      out.strata.push_back({l, {i}});
    } else {
      it->members.push_back(i);
    }
  }
  std::sort(out.strata.begin(), out.strata.end(),
            [](const LoadStratum& a, const LoadStratum& b) { return a.load < b.load; });
  return out;
}

std::vector<Load> WreathCycleSet::load_multiset() const {
  std::vector<Load> out;
  for (const auto& s : strata)
    out.insert(out.end(), s.members.size(), s.load);
  return out;
}

GroupOracle::Elem yade(const WreathElement& cycle, int point) {
  const auto& K = *cycle.ctx()->base;
  long long len = cycle.top().order();
  GroupOracle::Elem acc = 0;
  int g = point;
  for (long long i = 0; i < len; ++i) {
    acc = K.product(acc, cycle.base_at(g));
    g = cycle.top().apply(g);
  }
  return acc;
}

GroupOracle::Elem yade_conjugator(const WreathElement& cycle, int alpha, int beta) {
  const auto& K = *cycle.ctx()->base;
  long long len = cycle.top().order();
  GroupOracle::Elem acc = 0;
  int g = alpha;
  for (long long i = 0; i < len; ++i) {
    if (g == beta) return acc;
    acc = K.product(acc, cycle.base_at(g));
    g = cycle.top().apply(g);
  }
  throw DomainError("points lie in different top orbits of the wreath cycle");
}

Load load_of(const WreathElement& cycle) {
  if (!is_wreath_cycle(cycle)) throw DomainError("element is not a wreath cycle");
  auto terr = territory(cycle);
  return Load{cycle.ctx()->base->class_of(yade(cycle, terr.front())),
              static_cast<int>(cycle.top().order())};
}

long long element_order(const WreathElement& w) {
  const auto& K = *w.ctx()->base;
  long long ord = 1;
  for (const auto& z : wreath_cycle_decomposition(w).cycles)
    ord = std::lcm(ord, K.element_order(z.yade_at_anchor) * static_cast<long long>(z.load.length));
  return ord;
}

SparseDecomposition sparse_decomposition(const WreathElement& w) {
  const auto& K = *w.ctx()->base;
  const int n = w.degree();
  auto dec = wreath_cycle_decomposition(w);

  std::vector<GroupOracle::Elem> s(n, 0);
  std::vector<GroupOracle::Elem> sparse_base(n, 0);
  for (const auto& z : dec.cycles) {
    sparse_base[z.anchor - 1] = z.yade_at_anchor;
    if (z.trivial_top()) continue;
    // tail products of the base entries along the top orbit conjugate the
    // cycle onto its sparse form
    int g = z.anchor;
    std::vector<int> orbit;
    for (int i = 0; i < z.load.length; ++i) {
      orbit.push_back(g);
      g = z.element.top().apply(g);
    }
    GroupOracle::Elem tail = 0;  // empty tail at the anchor
    for (int i = z.load.length - 1; i >= 1; --i) {
      tail = K.product(z.element.base_at(orbit[i]), tail);
      s[orbit[i] - 1] = tail;
    }
  }

  SparseDecomposition out;
  out.conjugator = WreathElement(w.ctx(), std::move(s), Perm::identity(n));
  out.sparse = WreathElement(w.ctx(), std::move(sparse_base), w.top());
  if (w.conjugated_by(out.conjugator) != out.sparse)
    throw Error("internal error: sparse conjugation failed");
  out.cycles = wreath_cycle_decomposition(out.sparse);
  return out;
}

Perm embed_imprimitive(const WreathElement& w) {
  const auto& K = *w.ctx()->base;
  const int m = static_cast<int>(K.size());
  std::vector<int> img(static_cast<std::size_t>(m) * w.degree());
  for (int g = 1; g <= w.degree(); ++g) {
    int gh = w.top().apply(g);
    for (int k = 0; k < m; ++k)
      img[static_cast<std::size_t>(g - 1) * m + k] =
          (gh - 1) * m + K.product(k, w.base_at(g)) + 1;
  }
  return Perm::from_images(std::move(img));
}

std::size_t hash_value(const WreathElement& w) {
  std::size_t h = 14695981039346656037ull;
  for (auto e : w.base()) {
    h ^= static_cast<std::size_t>(e);
    h *= 1099511628211ull;
  }
  for (int v : w.top().images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace wreath
