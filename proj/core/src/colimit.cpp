#include "cechkit/colimit.hpp"

#include <stdexcept>
#include <string>

#include "cechkit/errors.hpp"
#include "cechkit/parallel.hpp"

namespace cechkit {

bool ColimitReport::all_certified() const {
  for (const auto& e : entries)
    if (!e.certified) return false;
  return true;
}

const ColimitEntry& ColimitReport::at(int degree) const {
  for (const auto& e : entries)
    if (e.degree == degree) return e;
  throw std::out_of_range("degree " + std::to_string(degree) + " outside the report window");
}

void validate(const ColimitParams& params) {
  if (params.window < 2 || params.n_max < params.window)
    throw Error("stabilization needs n_max ≥ window ≥ 2");
  if (params.degree_lo > params.degree_hi) throw Error("empty degree window");
}

FPTower tensor_tower(const GradedRing& ring, const KoszulTower& tower, const FPGradedModule& module,
                     int n_max) {
  FPTower out;
  for (int n = 1; n <= n_max; ++n) {
    out.levels.push_back(tensor(ring, tower.level(n), module));
    if (n < n_max) {
      // Chain towers run the other way; only inductive systems are colimits.
      if (tower.direction() != Direction::Cochain)
        throw Error("colimits are taken over cochain towers");
      out.steps.push_back(tensor(tower.step(n), module));
    }
  }
  return out;
}

namespace {

ColimitEntry colimit_entry(const GradedRing& ring, const FPTower& tower, int spot, int degree,
                           const ColimitParams& params) {
  const auto& field = ring.field();
  const int n_max = params.n_max;
  std::vector<DegreeSlice> slices;
  std::vector<HomologyPiece> homology;
  slices.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    slices.emplace_back(ring, tower.levels[n - 1], degree);
    homology.push_back(slices.back().homology(field, spot));
  }

  ColimitEntry entry;
  entry.degree = degree;
  entry.level_dims.resize(n_max);
  entry.ranks.resize(n_max);
  Mat composite = Mat::identity(homology.back().dim());
  for (int n = n_max; n >= 1; --n) {
    if (n < n_max) {
      const Mat chain = slice_map(ring, tower.steps[n - 1], spot, slices[n - 1], slices[n]);
      const Mat step = homology_map(field, homology[n - 1], homology[n], chain);
      composite = multiply(field, composite, step);
    }
    entry.level_dims[n - 1] = homology[n - 1].dim();
    entry.ranks[n - 1] = rank(field, composite);
  }
  entry.stabilized_dim = entry.ranks.back();
  int level = n_max;
  while (level > 1 && entry.ranks[level - 2] == entry.stabilized_dim) --level;
  entry.stabilization_level = level;
  entry.certified = level <= n_max - params.window + 1;
  return entry;
}

}  // namespace

ColimitReport stabilized_colimit(const GradedRing& ring, const FPTower& tower, int spot,
                                 const ColimitParams& params) {
  validate(params);
  if (static_cast<int>(tower.levels.size()) < params.n_max)
    throw Error("tower has fewer levels than n_max");
  ColimitReport report;
  report.spot = spot;
  report.params = params;
  const std::size_t count = static_cast<std::size_t>(params.degree_hi - params.degree_lo + 1);
  report.entries.resize(count);
  parallel_for(count, params.threads, [&](std::size_t k) {
    report.entries[k] =
        colimit_entry(ring, tower, spot, params.degree_lo + static_cast<int>(k), params);
  });
  return report;
}

ColimitReport cech_cohomology(const GradedRing& ring, const Sequence& a,
                              const FPGradedModule& module, int spot, const ColimitParams& params) {
  validate(params);
  const KoszulTower tower(ring, a, Direction::Cochain);
  return stabilized_colimit(ring, tensor_tower(ring, tower, module, params.n_max), spot, params);
}

std::vector<ColimitReport> cech_cohomology(const GradedRing& ring, const Sequence& a,
                                           const FPGradedModule& module,
                                           const ColimitParams& params) {
  validate(params);
  const KoszulTower tower(ring, a, Direction::Cochain);
  const FPTower levels = tensor_tower(ring, tower, module, params.n_max);
  std::vector<ColimitReport> out;
  for (int i = 0; i <= static_cast<int>(a.size()); ++i)
    out.push_back(stabilized_colimit(ring, levels, i, params));
  return out;
}

}  // namespace cechkit
