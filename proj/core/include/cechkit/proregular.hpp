#pragma once

#include <vector>

#include "cechkit/koszul.hpp"
#include "cechkit/wpr.hpp"

namespace cechkit {

/// Witnesses m for the colon inclusions, per index i = 1..r and n in n_list.
struct ProregularReport {
  std::vector<WprIndexReport> indices;
  int m_max = 0;

  bool certified() const;
};

/// For each i and n, the smallest m in [n, m_max] with
///   ((a_1^m..a_{i−1}^m) : a_i^m) ⊆ ((a_1^n..a_{i−1}^n) : a_i^{m−n})
/// in A. Ideals of A are handled through their preimages in the polynomial
/// ring (the quotient generators are added to both sides).
ProregularReport is_proregular(const GradedRing& ring, const Sequence& a,
                               const std::vector<int>& n_list, int m_max, unsigned threads = 1);

}  // namespace cechkit
