#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cechkit/field.hpp"
#include "cechkit/polynomial.hpp"

namespace cechkit {

enum class MonomialOrder {
  /// Weighted degree first, ties broken lexicographically with the first
  /// variable largest.
  GradedLex,
  /// The first variable's exponent decides; ties fall back to GradedLex on
  /// the remaining variables. An elimination order for variable 0.
  EliminateFirst,
};

/// The polynomial ring F_p[x_1..x_s] with positive variable weights and a
/// fixed monomial order. Immutable.
class Ring {
 public:
  Ring(PrimeField field, std::vector<std::string> names, std::vector<int> weights = {},
       MonomialOrder order = MonomialOrder::GradedLex);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  MonomialOrder order() const { return order_; }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  int degree(const Monomial& m) const;
  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  Monomial one() const { return Monomial(nvars()); }
  Polynomial constant(Scalar c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial monomial(Monomial m, Scalar c = 1) const;
  /// Sorts, merges equal monomials and drops zeros.
  Polynomial from_terms(std::vector<Term> terms) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, Scalar c) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  /// c·m·a.
  Polynomial mul_term(const Polynomial& a, Scalar c, const Monomial& m) const;
  Polynomial pow(const Polynomial& a, int e) const;
  Polynomial make_monic(const Polynomial& a) const;

  /// Zero counts as homogeneous.
  bool is_homogeneous(const Polynomial& f) const;
  /// Degree of a nonzero homogeneous polynomial, nullopt otherwise.
  std::optional<int> degree(const Polynomial& f) const;

  std::string format(const Monomial& m) const;
  std::string format(const Polynomial& f) const;
  /// Parses `3*x^2*y - y^2`-style text; throws ParseError.
  Polynomial parse(std::string_view text) const;

  /// A copy with a fresh variable prepended (index 0), ordered by
  /// MonomialOrder::EliminateFirst.
  Ring with_elimination_variable(std::string name, int weight = 1) const;
  /// Embeds a polynomial of this ring into with_elimination_variable().
  Polynomial embed_after_first(const Ring& target, const Polynomial& f) const;
  /// Drops variable 0 of `source`; f must not involve it.
  Polynomial restrict_from_first(const Ring& source, const Polynomial& f) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  int compare_graded_lex(const Monomial& a, const Monomial& b, std::size_t from) const;

  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
};

}  // namespace cechkit
