#ifndef WREATH_CHECKED_HPP
#define WREATH_CHECKED_HPP

#include <cstdint>

#include "wreath/perm.hpp"

namespace wreath {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CapExceeded("64-bit overflow in exact count");
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline std::uint64_t checked_factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

}  // namespace wreath

#endif
