#pragma once

#include <cstddef>
#include <vector>

#include "cechkit/complex.hpp"

namespace cechkit {

/// dims[n−1] = dim {v ∈ M_d : Iⁿ v = 0}; stabilized when the last two agree.
struct TorsionEntry {
  int degree = 0;
  std::vector<std::size_t> dims;
  std::size_t stabilized_dim = 0;
  bool stabilized = false;
};

struct TorsionReport {
  int n_max = 0;
  std::vector<TorsionEntry> entries;

  const TorsionEntry& at(int degree) const;
};

/// Γ_I(M) degreewise: the kernel of M_d → ⊕ M_{d+deg u} over all products u
/// of n ideal generators, for n = 1..n_max (n_max ≥ 2).
TorsionReport gamma_torsion(const GradedRing& ring, const FPGradedModule& module,
                            const std::vector<Polynomial>& ideal, int degree_lo, int degree_hi,
                            int n_max, unsigned threads = 1);

}  // namespace cechkit
