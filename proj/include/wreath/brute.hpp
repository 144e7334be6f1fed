#ifndef WREATH_BRUTE_HPP
#define WREATH_BRUTE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wreath/element.hpp"

namespace wreath {

/// Index-addressed enumeration of the full wreath product K wr H, used as an
/// independent oracle. Element index = sum base[i] * |K|^i + |K|^n * top index.
class EnumeratedWreathGroup {
public:
  explicit EnumeratedWreathGroup(Ctx ctx, std::uint64_t cap = 1'000'000);

  const Ctx& ctx() const { return ctx_; }
  std::uint64_t size() const { return size_; }
  WreathElement element(std::uint64_t index) const;
  std::uint64_t index_of(const WreathElement& w) const;
  std::vector<WreathElement> generators() const;

private:
  Ctx ctx_;
  std::uint64_t size_ = 0;
  std::uint64_t base_block_ = 1;  // |K|^n
};

bool bf_is_conjugate(const EnumeratedWreathGroup& w_group, const WreathElement& w,
                     const WreathElement& v);

// First conjugator in index order.
std::optional<WreathElement> bf_conjugacy_witness(const EnumeratedWreathGroup& w_group,
                                                  const WreathElement& w,
                                                  const WreathElement& v);

std::vector<WreathElement> bf_centraliser(const EnumeratedWreathGroup& w_group,
                                          const WreathElement& w);

// Conjugacy classes as sorted index lists, ordered by minimal index.
std::vector<std::vector<std::uint64_t>> bf_conjugacy_classes(
    const EnumeratedWreathGroup& w_group);

long long bf_order(const WreathElement& w);

}  // namespace wreath

#endif
