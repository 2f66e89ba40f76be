#pragma once

#include <optional>
#include <vector>

#include "cechkit/ring.hpp"

namespace cechkit {

/// An ideal given by generators together with its reduced Gröbner basis
/// (monic, autoreduced, sorted by increasing leading monomial).
class IdealBasis {
 public:
  IdealBasis() = default;
  IdealBasis(std::vector<Polynomial> generators, std::vector<Polynomial> groebner)
      : generators_(std::move(generators)), groebner_(std::move(groebner)) {}

  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& groebner() const { return groebner_; }

  bool is_zero() const { return groebner_.empty(); }
  bool is_unit() const;
  /// True iff the Gröbner basis consists of monomials, i.e. the ideal is a
  /// monomial ideal.
  bool is_monomial() const;

 private:
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> groebner_;
};

/// Buchberger's algorithm with the product and chain criteria. Pairs are
/// processed by increasing degree of their lcm (the normal strategy), which
/// for homogeneous input proceeds degree by degree. Works for inhomogeneous
/// input too; the elimination routines below rely on that.
IdealBasis buchberger(const Ring& ring, std::vector<Polynomial> generators);

/// Fully reduced remainder of f modulo a Gröbner basis.
Polynomial normal_form(const Ring& ring, const Polynomial& f,
                       const std::vector<Polynomial>& groebner);
Polynomial normal_form(const Ring& ring, const Polynomial& f, const IdealBasis& ideal);

bool ideal_member(const Ring& ring, const Polynomial& f, const IdealBasis& ideal);

/// Whether J ⊆ I. Note the argument order: the container comes first.
bool ideal_contains(const Ring& ring, const IdealBasis& I, const IdealBasis& J);

/// q with q·f = g, or nullopt when f does not divide g.
std::optional<Polynomial> exact_divide(const Ring& ring, const Polynomial& g,
                                       const Polynomial& f);

/// I ∩ (f) = elim_t(t·I + (1−t)·f).
IdealBasis intersect_principal(const Ring& ring, const IdealBasis& I, const Polynomial& f);

/// (I : f) = {g : g·f ∈ I}. Uses the monomial formula when both I and f are
/// monomial and elimination otherwise.
IdealBasis colon_ideal(const Ring& ring, const IdealBasis& I, const Polynomial& f);
/// Generators m / gcd(m, f) over the minimal monomial generators m of I.
IdealBasis colon_ideal_monomial(const Ring& ring, const IdealBasis& I, const Polynomial& f);
/// (I ∩ (f)) / f.
IdealBasis colon_ideal_elimination(const Ring& ring, const IdealBasis& I, const Polynomial& f);

}  // namespace cechkit
