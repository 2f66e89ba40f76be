#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cechkit/homology.hpp"
#include "cechkit/koszul.hpp"

namespace cechkit {

struct ColimitParams {
  int degree_lo = -6;
  int degree_hi = 2;
  int n_max = 8;
  int window = 3;
  unsigned threads = 1;
};

/// One internal degree of a stabilized colimit. ranks[n−1] is the rank of the
/// composite transition from level n into level n_max (so ranks.back() is the
/// dimension at n_max); level_dims[n−1] is the dimension at level n.
struct ColimitEntry {
  int degree = 0;
  std::size_t stabilized_dim = 0;
  int stabilization_level = 0;
  bool certified = false;
  std::vector<std::size_t> level_dims;
  std::vector<std::size_t> ranks;
};

struct ColimitReport {
  int spot = 0;
  ColimitParams params;
  std::vector<ColimitEntry> entries;

  bool all_certified() const;
  const ColimitEntry& at(int degree) const;
};

/// Levels 1..n_max of an inductive system of FP complexes, with
/// steps[n−1]: level n → level n+1 (all degree 0).
struct FPTower {
  std::vector<FPComplex> levels;
  std::vector<FPComplexMap> steps;
};

/// Tensors levels 1..n_max of `tower` with M.
FPTower tensor_tower(const GradedRing& ring, const KoszulTower& tower, const FPGradedModule& module,
                     int n_max);

/// For every degree in the window: homology at `spot` on each level, ranks of
/// the composites into the top level, and the stabilization verdict. An entry
/// is certified when the ranks from levels n_max−W+1..n_max agree.
ColimitReport stabilized_colimit(const GradedRing& ring, const FPTower& tower, int spot,
                                 const ColimitParams& params);

/// Ȟ^i(a, M) as colim_n H^i(K^•(aⁿ) ⊗ M).
ColimitReport cech_cohomology(const GradedRing& ring, const Sequence& a,
                              const FPGradedModule& module, int spot, const ColimitParams& params);
/// All spots 0..r.
std::vector<ColimitReport> cech_cohomology(const GradedRing& ring, const Sequence& a,
                                           const FPGradedModule& module,
                                           const ColimitParams& params);

void validate(const ColimitParams& params);

}  // namespace cechkit
