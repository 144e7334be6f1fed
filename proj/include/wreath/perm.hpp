#ifndef WREATH_PERM_HPP
#define WREATH_PERM_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

/// Permutation of {1,...,n}. Products compose left to right: gamma^(p*q) = (gamma^p)^q.
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);
  static Perm identity(int degree) { return Perm(degree); }

  // images[i] is the image of point i+1; must be a bijection of {1..n}.
  static Perm from_images(std::vector<int> images);

  // Disjoint cycle notation, e.g. "(1,2)(3,4)" or "()" for the identity.
  static Perm parse(const std::string& text, int degree);

  static Perm random(int degree, std::mt19937_64& rng);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_[point - 1]; }
  int apply_inverse(int point) const;

  bool is_identity() const;
  Perm inverse() const;
  Perm power(long long k) const;

  // t^-1 * (*this) * t
  Perm conjugated_by(const Perm& t) const;

  long long order() const;

  std::vector<int> support() const;
  std::vector<int> fixed_points() const;

  // Nontrivial cycles, each starting at its minimal point, sorted by that point.
  std::vector<std::vector<int>> cycles() const;

  // Single-cycle permutations multiplying to *this, sorted by minimal moved point.
  std::vector<Perm> cycle_decomposition() const;

  static Perm from_cycle(const std::vector<int>& cycle, int degree);

  std::string str() const;

  const std::vector<int>& images() const { return img_; }

  friend Perm operator*(const Perm& p, const Perm& q);
  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> img_;
};

std::size_t hash_value(const Perm& p);

}  // namespace wreath

template <>
struct std::hash<wreath::Perm> {
  std::size_t operator()(const wreath::Perm& p) const noexcept {
    return wreath::hash_value(p);
  }
};

#endif
