#include "cechkit/wpr.hpp"

#include <numeric>
#include <optional>

#include "cechkit/errors.hpp"
#include "cechkit/parallel.hpp"

namespace cechkit {

struct KoszulHomologySystem::Level {
  HomologyPiece homology;
  Mat step_down;  // H(level) → H(level − 1); empty at level 1
};

KoszulHomologySystem::KoszulHomologySystem(const GradedRing& ring, const Sequence& a,
                                           FPGradedModule module, int spot, int max_level)
    : ring_(ring),
      spot_(spot),
      max_level_(max_level),
      min_degree_(module.min_generator_degree()),
      tower_(ring, a, Direction::Chain) {
  if (max_level < 1) throw Error("a homology system needs at least one level");
  for (int n = 1; n <= max_level; ++n) {
    complexes_.push_back(tensor(ring_, tower_.level(n), module));
    if (n > 1) steps_.push_back(tensor(tower_.step(n - 1), module));
  }
}

// Slices are large, so only homology pieces and steps are memoised. Missing
// levels are filled upwards from the highest cached one, rebuilding its
// slice once to map into.
const KoszulHomologySystem::Level& KoszulHomologySystem::level(int n, int degree) const {
  std::shared_ptr<const Level> below;
  int have = 0;
  {
    std::lock_guard lock(mutex_);
    for (int k = n; k >= 1; --k) {
      auto it = levels_.find({k, degree});
      if (it == levels_.end()) continue;
      if (k == n) return *it->second;
      below = it->second;
      have = k;
      break;
    }
  }
  std::optional<DegreeSlice> below_slice;
  if (have > 0) below_slice.emplace(ring_, complexes_.at(have - 1), degree);
  for (int k = have + 1; k <= n; ++k) {
    DegreeSlice slice(ring_, complexes_.at(k - 1), degree);
    HomologyPiece homology = slice.homology(ring_.field(), spot_);
    Mat down;
    if (below) {
      const Mat chain = slice_map(ring_, steps_[k - 2], spot_, slice, *below_slice);
      down = homology_map(ring_.field(), homology, below->homology, chain);
    }
    auto made = std::make_shared<const Level>(Level{std::move(homology), std::move(down)});
    {
      std::lock_guard lock(mutex_);
      auto& slot = levels_[{k, degree}];
      if (!slot) slot = std::move(made);
      below = slot;
    }
    below_slice.emplace(std::move(slice));
  }
  return *below;
}

std::size_t KoszulHomologySystem::dim(int n, int degree) const {
  if (degree < min_degree_) return 0;
  return level(n, degree).homology.dim();
}

Mat KoszulHomologySystem::step(int n, int degree) const {
  if (degree < min_degree_) return Mat(0, 0);
  return level(n + 1, degree).step_down;
}

bool WprReport::certified() const {
  for (const auto& idx : indices)
    for (const auto& w : idx.witnesses)
      if (!w.m) return false;
  return true;
}

int default_degree_bound(const Sequence& a, int m_max, int max_generator_degree) {
  const int total = std::accumulate(a.degrees().begin(), a.degrees().end(), 0);
  return m_max * total + max_generator_degree;
}

WprReport is_weakly_proregular(const GradedRing& ring, const Sequence& a,
                               const std::vector<int>& n_list, int m_max,
                               std::optional<int> degree_bound, unsigned threads) {
  for (int n : n_list)
    if (n < 1 || n > m_max) throw Error("every n must satisfy 1 ≤ n ≤ m_max");
  WprReport report;
  report.m_max = m_max;
  report.degree_bound = degree_bound.value_or(default_degree_bound(a, m_max));
  const FPGradedModule module = FPGradedModule::free(GradedFreeModule{{0}});
  const int r = static_cast<int>(a.size());
  std::vector<std::unique_ptr<KoszulHomologySystem>> systems;
  for (int i = 1; i <= r; ++i) {
    systems.push_back(std::make_unique<KoszulHomologySystem>(ring, a, module, i, m_max));
    report.indices.push_back(WprIndexReport{i, {}});
    for (int n : n_list) report.indices.back().witnesses.push_back(WprWitness{n, std::nullopt});
  }
  const std::size_t per_index = n_list.size();
  parallel_for(systems.size() * per_index, threads, [&](std::size_t task) {
    const std::size_t i = task / per_index, k = task % per_index;
    report.indices[i].witnesses[k].m =
        essentially_zero(*systems[i], n_list[k], m_max, report.degree_bound);
  });
  return report;
}

std::vector<LesIdentityViolation> koszul_les_identity(const GradedRing& ring, const Sequence& a,
                                                      int n, int lo, int hi) {
  const auto& field = ring.field();
  const std::size_t r = a.size();
  std::vector<Polynomial> powers;
  for (const auto& e : a.elements()) powers.push_back(ring.pow(e, n));
  const Polynomial last = powers.back();
  const int shift = n * a.degrees().back();
  std::vector<int> degrees;
  for (int d : a.degrees()) degrees.push_back(n * d);

  const FPGradedModule module = FPGradedModule::free(GradedFreeModule{{0}});
  const FPComplex full = tensor(ring, koszul_chain(ring, powers, degrees), module);
  const FPComplex prime =
      tensor(ring,
             koszul_chain(ring, std::span<const Polynomial>(powers).first(r - 1),
                          std::span<const int>(degrees).first(r - 1)),
             module);

  FPComplexMap times_last{prime.layout.lo, shift, {}};
  for (const auto& spot : prime.spots) {
    const std::size_t k = spot.ambient().rank();
    times_last.components.push_back(scale(ring, PolyMatrix::identity(ring, k), last));
  }

  std::vector<LesIdentityViolation> violations;
  for (int d = lo; d <= hi; ++d) {
    const DegreeSlice f(ring, full, d);
    const DegreeSlice p_hi(ring, prime, d);
    const DegreeSlice p_lo(ring, prime, d - shift);
    // dim H_j(a')_d and rank of a_rⁿ: H_j(a')_{d−e} → H_j(a')_d
    auto prime_data = [&](int j) -> std::pair<std::size_t, std::size_t> {
      if (!prime.layout.has_spot(j)) return {0, 0};
      const HomologyPiece top = p_hi.homology(field, j);
      const HomologyPiece bottom = p_lo.homology(field, j);
      const Mat chain = slice_map(ring, times_last, j, p_lo, p_hi);
      return {top.dim(), rank(field, homology_map(field, bottom, top, chain))};
    };
    for (int i = 0; i <= static_cast<int>(r); ++i) {
      const std::size_t lhs = f.homology(field, i).dim();
      const auto [dim_i, rank_i] = prime_data(i);
      std::size_t kernel = 0;
      if (prime.layout.has_spot(i - 1)) {
        const auto [dim_lo, rank_lo] = [&] {
          const HomologyPiece bottom = p_lo.homology(field, i - 1);
          const HomologyPiece top = p_hi.homology(field, i - 1);
          const Mat chain = slice_map(ring, times_last, i - 1, p_lo, p_hi);
          return std::pair{bottom.dim(), rank(field, homology_map(field, bottom, top, chain))};
        }();
        kernel = dim_lo - rank_lo;
      }
      const std::size_t rhs = dim_i - rank_i + kernel;
      if (lhs != rhs) violations.push_back({i, d, lhs, rhs});
    }
  }
  return violations;
}

}  // namespace cechkit
