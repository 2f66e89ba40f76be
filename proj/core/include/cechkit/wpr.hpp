#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "cechkit/homology.hpp"
#include "cechkit/koszul.hpp"
#include "cechkit/prosystem.hpp"

namespace cechkit {

/// The projective system n ↦ H_i(K_•(aⁿ) ⊗ M) with the maps induced by
/// e_I ↦ a_I e_I. Homology pieces and step maps are memoised per
/// (level, degree); queries are thread-safe.
class KoszulHomologySystem : public ProSystem {
 public:
  KoszulHomologySystem(const GradedRing& ring, const Sequence& a, FPGradedModule module, int spot,
                       int max_level);

  const PrimeField& field() const override { return ring_.field(); }
  int max_level() const override { return max_level_; }
  int min_degree() const override { return min_degree_; }
  std::size_t dim(int level, int degree) const override;
  Mat step(int level, int degree) const override;

 private:
  struct Level;
  const Level& level(int n, int degree) const;

  GradedRing ring_;
  int spot_;
  int max_level_;
  int min_degree_;
  KoszulTower tower_;
  std::vector<FPComplex> complexes_;
  std::vector<FPComplexMap> steps_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const Level>> levels_;
};

struct WprWitness {
  int n = 0;
  std::optional<int> m;
};

struct WprIndexReport {
  int index = 0;
  std::vector<WprWitness> witnesses;
};

/// Witness search results for H_1..H_r. Certified means every (i, n) found a
/// witness: the transitions then vanish in all degrees ≤ degree_bound.
struct WprReport {
  std::vector<WprIndexReport> indices;
  int degree_bound = 0;
  int m_max = 0;

  bool certified() const;
};

/// m_max·Σ deg a_j + max_generator_degree. A heuristic, not a proven bound on
/// where homology generators live.
int default_degree_bound(const Sequence& a, int m_max, int max_generator_degree = 0);

/// Searches, for i = 1..r and each n in n_list, the smallest m ≤ m_max with
/// H_i(a^m) → H_i(aⁿ) zero in degrees ≤ degree_bound (default as above).
WprReport is_weakly_proregular(const GradedRing& ring, const Sequence& a,
                               const std::vector<int>& n_list, int m_max,
                               std::optional<int> degree_bound = std::nullopt,
                               unsigned threads = 1);

struct LesIdentityViolation {
  int spot = 0;
  int degree = 0;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
};

/// Checks dim H_i(aⁿ)_d = dim coker(a_rⁿ on H_i(a'ⁿ))_d + dim ker(a_rⁿ on
/// H_{i−1}(a'ⁿ))_d for every i and every d in [lo, hi], where a' drops the
/// last element. Homology is taken with coefficients in A.
std::vector<LesIdentityViolation> koszul_les_identity(const GradedRing& ring, const Sequence& a,
                                                      int n, int lo, int hi);

}  // namespace cechkit
