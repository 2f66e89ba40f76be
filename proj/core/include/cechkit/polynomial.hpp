#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cechkit/field.hpp"

namespace cechkit {

/// Exponent vector. The number of variables is fixed by the owning Ring.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  std::size_t nvars() const { return exps.size(); }
  bool is_one() const;
  /// Unweighted total degree.
  int total_degree() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// True iff a divides b.
bool divides(const Monomial& a, const Monomial& b);
/// b / a; a must divide b.
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial power(const Monomial& m, int e);

struct Term {
  Monomial mono;
  Scalar coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms sorted strictly decreasing in the owning ring's
/// monomial order, no zero coefficients. Only Ring constructs non-trivial
/// values, which keeps that invariant in one place.
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  bool is_monomial() const { return terms_.size() == 1; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class Ring;
  explicit Polynomial(std::vector<Term> sorted) : terms_(std::move(sorted)) {}

  std::vector<Term> terms_;
};

}  // namespace cechkit
