#ifndef WREATH_BENCH_HPP
#define WREATH_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "wreath/element.hpp"

namespace wreath {

struct BenchResult {
  std::string instance;
  std::string operation;
  double fast_ms = 0.0;
  double brute_ms = -1.0;  // < 0: no brute-force baseline was run
  std::string note;

  double speedup() const { return brute_ms < 0 ? 0.0 : brute_ms / fast_ms; }
};

// Uniformly random element of the ambient product (random entry per point,
// random top from H's enumeration or a shuffled word for a symmetric top).
WreathElement random_element(const Ctx& ctx, std::mt19937_64& rng);

/// "oracle": graded products, decomposition-based results timed against full
/// enumeration; the brute column is skipped once |K wr H| exceeds the cap.
/// "large": closed-form runs on Sym(4) wr Sym(8), far beyond enumeration.
std::vector<BenchResult> run_bench_suite(const std::string& suite, std::uint64_t seed,
                                         std::uint64_t cap = 1'000'000);

void print_bench_table(std::ostream& os, const std::vector<BenchResult>& results);
void print_bench_csv(std::ostream& os, const std::vector<BenchResult>& results);

}  // namespace wreath

#endif
