#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cechkit/groebner.hpp"
#include "cechkit/matrix.hpp"
#include "cechkit/ring.hpp"

namespace cechkit {

/// Standard monomials of one internal degree, in decreasing graded-lex order.
struct DegreePiece {
  int degree = 0;
  std::vector<Monomial> basis;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;

  std::size_t dim() const { return basis.size(); }
  std::optional<std::size_t> find(const Monomial& m) const {
    auto it = index.find(m);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

/// A = F_p[x_1..x_s] / Q for a homogeneous ideal Q (possibly zero).
///
/// Polynomials handed to and returned from the arithmetic here are in normal
/// form modulo Q. The Gröbner basis of Q is computed once at construction;
/// degree pieces and monomial normal forms are memoised behind a mutex, so a
/// GradedRing may be shared freely between threads.
class GradedRing {
 public:
  explicit GradedRing(Ring base, std::vector<Polynomial> quotient_generators = {});

  const Ring& base() const { return base_; }
  const PrimeField& field() const { return base_.field(); }
  const IdealBasis& quotient() const { return quotient_; }
  bool has_quotient() const { return !quotient_.is_zero(); }

  Polynomial normal_form(const Polynomial& f) const;
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return base_.add(a, b); }
  Polynomial sub(const Polynomial& a, const Polynomial& b) const { return base_.sub(a, b); }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial pow(const Polynomial& a, int e) const;

  std::shared_ptr<const DegreePiece> degree_piece(int d) const;
  std::vector<Monomial> degree_piece_basis(int d) const { return degree_piece(d)->basis; }

  /// Adds c·NF(f·m), expressed in `target`, into column `col` of `out`
  /// starting at row `row_offset`. Throws NonHomogeneous if a term of the
  /// product does not live in the target degree.
  void accumulate(const Polynomial& f, const Monomial& m, Scalar c, const DegreePiece& target,
                  Mat& out, std::size_t row_offset, std::size_t col) const;

  /// Matrix of multiplication by a homogeneous f from degree d to d + deg f.
  Mat mult_matrix(const Polynomial& f, int d) const;

  /// The polynomial ring this one is a quotient of.
  GradedRing without_quotient() const { return GradedRing(base_); }

 private:
  struct Cache;

  const Polynomial& monomial_normal_form(const Monomial& m) const;

  Ring base_;
  IdealBasis quotient_;
  bool monomial_quotient_ = true;
  std::shared_ptr<Cache> cache_;
};

}  // namespace cechkit
