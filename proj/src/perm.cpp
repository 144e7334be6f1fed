#include "wreath/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace wreath {

Perm::Perm(int degree) {
  if (degree < 0) throw DomainError("permutation degree must be nonnegative");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 1);
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1]) throw DomainError("image list is not a bijection");
    seen[v - 1] = 1;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::random(int degree, std::mt19937_64& rng) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return from_images(std::move(img));
}

int Perm::apply_inverse(int point) const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] == point) return i + 1;
  throw DomainError("point out of range");
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i] - 1] = i + 1;
  return from_images(std::move(inv));
}

Perm Perm::power(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  Perm acc = identity(degree());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Perm Perm::conjugated_by(const Perm& t) const {
  if (t.degree() != degree()) throw DomainError("degree mismatch in conjugation");
  std::vector<int> img(degree());
  for (int i = 1; i <= degree(); ++i) img[t.apply(i) - 1] = t.apply(apply(i));
  return from_images(std::move(img));
}

long long Perm::order() const {
  long long ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<long long>(c.size()));
  return ord;
}

std::vector<int> Perm::support() const {
  std::vector<int> s;
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) s.push_back(i);
  return s;
}

std::vector<int> Perm::fixed_points() const {
  std::vector<int> s;
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) == i) s.push_back(i);
  return s;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree(), 0);
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i - 1] || apply(i) == i) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      cyc.push_back(j);
      seen[j - 1] = 1;
      j = apply(j);
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<Perm> Perm::cycle_decomposition() const {
  std::vector<Perm> out;
  for (const auto& c : cycles()) out.push_back(from_cycle(c, degree()));
  return out;
}

Perm Perm::from_cycle(const std::vector<int>& cycle, int degree) {
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  for (int point : cycle) {
    if (point < 1 || point > degree) throw DomainError("cycle point out of range");
    if (seen[point - 1]) throw DomainError("repeated point in cycle");
    seen[point - 1] = 1;
  }
  Perm p = identity(degree);
  if (cycle.size() < 2) return p;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    p.img_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  return p;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw DomainError("degree mismatch in product");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q.apply(p.img_[i]);
  return Perm::from_images(std::move(img));
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

Perm Perm::parse(const std::string& text, int degree) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '(' in permutation: " + text);

  std::vector<std::vector<int>> cycs;
  std::vector<char> used(degree, 0);
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in permutation: " + text);
    ++pos;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      // "()" is only valid as the whole identity permutation
      ++pos;
      if (!cycs.empty()) throw ParseError("empty cycle in permutation: " + text);
      skip_ws();
      if (pos != text.size()) throw ParseError("trailing input after identity: " + text);
      return identity(degree);
    }
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("expected point in permutation: " + text);
      int v = std::stoi(text.substr(start, pos - start));
      if (v < 1 || v > degree) throw ParseError("point out of range in permutation: " + text);
      if (used[v - 1]) throw ParseError("repeated point in permutation: " + text);
      used[v - 1] = 1;
      cyc.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')' in permutation: " + text);
    }
    if (cyc.size() < 2) throw ParseError("cycle of length 1 in permutation: " + text);
    cycs.push_back(std::move(cyc));
    skip_ws();
    if (pos >= text.size()) break;
  }
  if (cycs.empty()) throw ParseError("malformed permutation: " + text);
  Perm p = identity(degree);
  for (const auto& c : cycs) p = p * from_cycle(c, degree);
  return p;
}

std::size_t hash_value(const Perm& p) {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace wreath
