#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cechkit/matrix.hpp"

namespace cechkit {

/// A projective system of graded finite-dimensional spaces X_1 ← X_2 ← …
/// truncated at max_level(). Degrees below min_degree() are zero.
class ProSystem {
 public:
  virtual ~ProSystem() = default;

  virtual const PrimeField& field() const = 0;
  virtual int max_level() const = 0;
  virtual int min_degree() const = 0;
  virtual std::size_t dim(int level, int degree) const = 0;
  /// X_{level+1} → X_level in one degree.
  virtual Mat step(int level, int degree) const = 0;

  /// The composite X_m → X_n (m ≥ n) in one degree.
  Mat transition(int m, int n, int degree) const;
};

/// Explicit data: dims[n−1][d − min_degree] and steps[n−1][d − min_degree]
/// (the step from level n+1 to n) for degrees min_degree..max_degree.
class FiniteProSystem : public ProSystem {
 public:
  FiniteProSystem(PrimeField field, int min_degree, std::vector<std::vector<std::size_t>> dims,
                  std::vector<std::vector<Mat>> steps);
  /// The system that is zero in every level and degree.
  static FiniteProSystem zero(PrimeField field, int levels, int min_degree = 0,
                              int max_degree = 0);

  const PrimeField& field() const override { return field_; }
  int max_level() const override { return static_cast<int>(dims_.size()); }
  int min_degree() const override { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(dims_.front().size()) - 1; }
  std::size_t dim(int level, int degree) const override;
  Mat step(int level, int degree) const override;

 private:
  PrimeField field_;
  int min_degree_;
  std::vector<std::vector<std::size_t>> dims_;
  std::vector<std::vector<Mat>> steps_;
};

/// Smallest m in [n, m_max] whose transition X_m → X_n vanishes in every
/// degree from min_degree() to degree_bound, or nullopt.
std::optional<int> essentially_zero(const ProSystem& p, int n, int m_max, int degree_bound);

/// 0 → X →f Y →g Z → 0, levelwise and degreewise, compatible with steps.
/// f[n−1][d − min_degree]: X_n → Y_n, likewise g.
struct FiniteProSES {
  FiniteProSystem x, y, z;
  std::vector<std::vector<Mat>> f, g;
};

struct TwoOfThreeViolation {
  int n = 0;
  std::string implication;
  std::string detail;
};

struct TwoOfThreeReport {
  bool exact = true;
  std::size_t decidable = 0;
  std::size_t undecidable = 0;
  std::vector<TwoOfThreeViolation> violations;

  bool ok() const { return exact && violations.empty(); }
};

/// Checks, for every level n, the two bounded implications behind "Y is
/// essentially zero iff X and Z are":
///  (Y ⇒ X, Z) a witness m for Y at n bounds the witnesses of X and Z at n;
///  (X, Z ⇒ Y) a witness m for X at n and a witness l for Z at m give a
///             witness ≤ l for Y at n.
/// Premises whose witnesses fall outside the truncation are counted as
/// undecidable. Exactness of each level and compatibility with the steps are
/// verified first; a failure there sets exact = false.
TwoOfThreeReport two_out_of_three_check(const FiniteProSES& ses);

}  // namespace cechkit
