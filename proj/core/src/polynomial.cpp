#include "cechkit/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace cechkit {

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

int Monomial::total_degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : m.exps) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.nvars() == b.nvars());
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out.exps[i] = a.exps[i] + b.exps[i];
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  assert(divides(a, b));
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out.exps[i] = b.exps[i] - a.exps[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out.exps[i] = std::max(a.exps[i], b.exps[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out.exps[i] = std::min(a.exps[i], b.exps[i]);
  return out;
}

Monomial power(const Monomial& m, int e) {
  Monomial out(m.nvars());
  for (std::size_t i = 0; i < m.nvars(); ++i) out.exps[i] = m.exps[i] * e;
  return out;
}

}  // namespace cechkit
