#include "wreath/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "wreath/brute.hpp"
#include "wreath/centraliser.hpp"
#include "wreath/checked.hpp"
#include "wreath/classreps.hpp"
#include "wreath/conjugacy.hpp"
#include "wreath/io.hpp"

namespace wreath {

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::uint64_t product_size(const Ctx& ctx) {
  std::uint64_t s = ctx->top.size();
  for (int i = 0; i < ctx->degree(); ++i) s = checked_mul(s, ctx->base->size());
  return s;
}

struct Instance {
  std::string name;
  Ctx ctx;
};

Ctx sym_wr_sym(int base_degree, int top_degree) {
  return WreathContext::make_full_symmetric(
      make_perm_oracle(PermGroup::symmetric(base_degree)), top_degree);
}

Ctx c2_wr_sym(int top_degree) {
  return WreathContext::make_full_symmetric(
      make_perm_oracle(PermGroup(2, {Perm::parse("(1,2)", 2)})), top_degree);
}

void bench_instance(std::vector<BenchResult>& results, const Instance& inst,
                    std::mt19937_64& rng, std::uint64_t cap) {
  const std::uint64_t size = product_size(inst.ctx);
  const bool brute_ok = size <= cap;
  std::optional<EnumeratedWreathGroup> brute;
  if (brute_ok) brute.emplace(inst.ctx, cap);

  WreathElement w = random_element(inst.ctx, rng);
  WreathElement a = random_element(inst.ctx, rng);
  WreathElement v = w.conjugated_by(a);

  {
    BenchResult r{inst.name, "conjugacy-witness", 0.0, -1.0, ""};
    std::optional<WreathElement> fast;
    r.fast_ms = time_ms([&] { fast = conjugacy_witness_in_w(w, v); });
    if (!fast || w.conjugated_by(*fast) != v) throw Error("bench: fast witness failed");
    if (brute_ok) {
      std::optional<WreathElement> slow;
      r.brute_ms = time_ms([&] { slow = bf_conjugacy_witness(*brute, w, v); });
      if (!slow) throw Error("bench: brute-force witness missed a conjugate pair");
      r.note = "both verified";
    } else {
      r.note = "oracle skipped (|W| = " + format_count(size) + " above cap)";
    }
    results.push_back(std::move(r));
  }

  {
    BenchResult r{inst.name, "centraliser", 0.0, -1.0, ""};
    CentraliserDescription fast;
    r.fast_ms = time_ms([&] { fast = centraliser_of(w); });
    if (brute_ok) {
      std::size_t slow_size = 0;
      r.brute_ms = time_ms([&] { slow_size = bf_centraliser(*brute, w).size(); });
      if (fast.order != slow_size) throw Error("bench: centraliser order mismatch");
      r.note = "order " + format_count(fast.order) + " agrees";
    } else {
      r.note = "order " + format_count(fast.order) + "; oracle skipped";
    }
    results.push_back(std::move(r));
  }

  {
    BenchResult r{inst.name, "class-count", 0.0, -1.0, ""};
    std::uint64_t fast_count = 0;
    r.fast_ms = time_ms([&] { fast_count = class_count(inst.ctx); });
    if (brute_ok) {
      std::size_t slow_count = 0;
      r.brute_ms = time_ms([&] { slow_count = bf_conjugacy_classes(*brute).size(); });
      if (fast_count != slow_count) throw Error("bench: class count mismatch");
      r.note = format_count(fast_count) + " classes, agree";
    } else {
      r.note = format_count(fast_count) + " classes; oracle skipped";
    }
    results.push_back(std::move(r));
  }
}

}  // namespace

WreathElement random_element(const Ctx& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<GroupOracle::Elem> pick_base(
      0, static_cast<GroupOracle::Elem>(ctx->base->size()) - 1);
  std::vector<GroupOracle::Elem> base(ctx->degree());
  for (auto& e : base) e = pick_base(rng);

  Perm top;
  if (ctx->full_symmetric_top) {
    std::vector<int> img(ctx->degree());
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    top = Perm::from_images(std::move(img));
  } else {
    std::uniform_int_distribution<std::size_t> pick_top(0, ctx->top.size() - 1);
    top = ctx->top.elements()[pick_top(rng)];
  }
  return WreathElement(ctx, std::move(base), std::move(top));
}

std::vector<BenchResult> run_bench_suite(const std::string& suite, std::uint64_t seed,
                                         std::uint64_t cap) {
  std::mt19937_64 rng(seed);
  std::vector<BenchResult> results;

  if (suite == "oracle") {
    std::vector<Instance> instances;
    for (int n = 3; n <= 7; ++n)
      instances.push_back({"C2 wr Sym(" + std::to_string(n) + ")", c2_wr_sym(n)});
    for (int n = 3; n <= 5; ++n)
      instances.push_back({"Sym(3) wr Sym(" + std::to_string(n) + ")", sym_wr_sym(3, n)});
    for (const auto& inst : instances) bench_instance(results, inst, rng, cap);
    return results;
  }

  if (suite == "large") {
    Instance inst{"Sym(4) wr Sym(8)", sym_wr_sym(4, 8)};
    WreathElement w = random_element(inst.ctx, rng);
    WreathElement a = random_element(inst.ctx, rng);
    WreathElement v = w.conjugated_by(a);

    BenchResult witness{inst.name, "conjugacy-witness", 0.0, -1.0, ""};
    std::optional<WreathElement> found;
    witness.fast_ms = time_ms([&] { found = conjugacy_witness_in_w(w, v); });
    if (!found || w.conjugated_by(*found) != v) throw Error("bench: fast witness failed");
    witness.note = "verified; oracle skipped";
    results.push_back(std::move(witness));

    BenchResult cent{inst.name, "centraliser", 0.0, -1.0, ""};
    CentraliserDescription desc;
    cent.fast_ms = time_ms([&] { desc = centraliser_of(w); });
    cent.note = "order " + format_count(desc.order) + "; oracle skipped";
    results.push_back(std::move(cent));

    BenchResult size_r{inst.name, "class-size", 0.0, -1.0, ""};
    std::uint64_t sz = 0;
    size_r.fast_ms = time_ms([&] { sz = class_size(w); });
    size_r.note = format_count(sz) + " elements; oracle skipped";
    results.push_back(std::move(size_r));

    BenchResult count_r{inst.name, "class-count", 0.0, -1.0, ""};
    std::uint64_t classes = 0;
    count_r.fast_ms = time_ms([&] { classes = class_count(inst.ctx); });
    count_r.note = format_count(classes) + " classes; oracle skipped";
    results.push_back(std::move(count_r));
    return results;
  }

  throw DomainError("unknown bench suite: " + suite + " (expected \"oracle\" or \"large\")");
}

void print_bench_table(std::ostream& os, const std::vector<BenchResult>& results) {
  std::size_t name_w = 8, op_w = 9;
  for (const auto& r : results) {
    name_w = std::max(name_w, r.instance.size());
    op_w = std::max(op_w, r.operation.size());
  }
  os << std::left << std::setw(static_cast<int>(name_w) + 2) << "instance"
     << std::setw(static_cast<int>(op_w) + 2) << "operation" << std::right
     << std::setw(12) << "fast ms" << std::setw(12) << "oracle ms" << std::setw(10)
     << "speedup"
     << "  note\n";
  for (const auto& r : results) {
    os << std::left << std::setw(static_cast<int>(name_w) + 2) << r.instance
       << std::setw(static_cast<int>(op_w) + 2) << r.operation << std::right
       << std::fixed << std::setprecision(3) << std::setw(12) << r.fast_ms;
    if (r.brute_ms < 0) {
      os << std::setw(12) << "-" << std::setw(10) << "-";
    } else {
      os << std::setw(12) << r.brute_ms << std::setw(9) << std::setprecision(1)
         << r.speedup() << "x";
    }
    os << "  " << r.note << "\n";
  }
}

void print_bench_csv(std::ostream& os, const std::vector<BenchResult>& results) {
  os << "instance,operation,fast_ms,oracle_ms,speedup,note\n";
  for (const auto& r : results) {
    os << '"' << r.instance << "\"," << r.operation << ',' << std::fixed
       << std::setprecision(6) << r.fast_ms << ',';
    if (r.brute_ms < 0)
      os << ",,";
    else
      os << r.brute_ms << ',' << std::setprecision(2) << r.speedup() << ',';
    os << '"' << r.note << "\"\n";
  }
}

}  // namespace wreath
