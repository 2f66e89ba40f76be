#include "cechkit/proregular.hpp"

#include "cechkit/errors.hpp"
#include "cechkit/parallel.hpp"

namespace cechkit {

bool ProregularReport::certified() const {
  for (const auto& idx : indices)
    for (const auto& w : idx.witnesses)
      if (!w.m) return false;
  return true;
}

namespace {

IdealBasis prefix_ideal(const GradedRing& ring, const Sequence& a, std::size_t count, int power) {
  const Ring& base = ring.base();
  std::vector<Polynomial> gens = ring.quotient().groebner();
  for (std::size_t j = 0; j < count; ++j) gens.push_back(base.pow(a[j], power));
  return buchberger(base, std::move(gens));
}

bool inclusion_holds(const GradedRing& ring, const Sequence& a, std::size_t i, int n, int m) {
  const Ring& base = ring.base();
  const IdealBasis lhs = colon_ideal(base, prefix_ideal(ring, a, i, m), base.pow(a[i], m));
  const IdealBasis rhs = colon_ideal(base, prefix_ideal(ring, a, i, n), base.pow(a[i], m - n));
  return ideal_contains(base, rhs, lhs);
}

}  // namespace

ProregularReport is_proregular(const GradedRing& ring, const Sequence& a,
                               const std::vector<int>& n_list, int m_max, unsigned threads) {
  for (int n : n_list)
    if (n < 1 || n > m_max) throw Error("every n must satisfy 1 ≤ n ≤ m_max");
  ProregularReport report;
  report.m_max = m_max;
  for (std::size_t i = 0; i < a.size(); ++i) {
    report.indices.push_back(WprIndexReport{static_cast<int>(i) + 1, {}});
    for (int n : n_list) report.indices.back().witnesses.push_back(WprWitness{n, std::nullopt});
  }
  const std::size_t per_index = n_list.size();
  parallel_for(a.size() * per_index, threads, [&](std::size_t task) {
    const std::size_t i = task / per_index, k = task % per_index;
    const int n = n_list[k];
    for (int m = n; m <= m_max; ++m) {
      if (inclusion_holds(ring, a, i, n, m)) {
        report.indices[i].witnesses[k].m = m;
        break;
      }
    }
  });
  return report;
}

}  // namespace cechkit
