#include "cechkit/torsion.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "cechkit/errors.hpp"
#include "cechkit/homology.hpp"
#include "cechkit/koszul.hpp"
#include "cechkit/parallel.hpp"

namespace cechkit {

const TorsionEntry& TorsionReport::at(int degree) const {
  for (const auto& e : entries)
    if (e.degree == degree) return e;
  throw std::out_of_range("degree " + std::to_string(degree) + " outside the report window");
}

namespace {

struct Product {
  Polynomial value;
  int degree = 0;
};

// Products of n generators, one per multiset of indices.
std::vector<Product> products(const GradedRing& ring, const std::vector<Polynomial>& gens,
                              const std::vector<int>& degrees, int n) {
  std::vector<Product> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    Product p{ring.base().constant(1), 0};
    for (std::size_t j : pick) {
      p.value = ring.mul(p.value, gens[j]);
      p.degree += degrees[j];
    }
    out.push_back(std::move(p));
    int k = n - 1;
    while (k >= 0 && pick[k] + 1 == gens.size()) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < n; ++j) pick[j] = pick[k];
  }
  return out;
}

}  // namespace

TorsionReport gamma_torsion(const GradedRing& ring, const FPGradedModule& module,
                            const std::vector<Polynomial>& ideal, int degree_lo, int degree_hi,
                            int n_max, unsigned threads) {
  if (n_max < 2) throw Error("gamma_torsion needs n_max ≥ 2");
  if (ideal.empty()) throw Error("gamma_torsion needs at least one ideal generator");
  const Sequence gens(ring, ideal);
  const FPComplex single{SpotLayout{Direction::Chain, 0, 1}, {module}, {}};
  const std::size_t rank_m = module.ambient().rank();

  std::vector<std::vector<Product>> by_level;
  std::vector<std::vector<FPComplexMap>> maps;
  for (int n = 1; n <= n_max; ++n) {
    by_level.push_back(products(ring, gens.elements(), gens.degrees(), n));
    maps.emplace_back();
    for (const auto& p : by_level.back())
      maps.back().push_back(FPComplexMap{0, p.degree, {scale(ring, PolyMatrix::identity(ring, rank_m), p.value)}});
  }

  TorsionReport report;
  report.n_max = n_max;
  const std::size_t count = static_cast<std::size_t>(degree_hi - degree_lo + 1);
  report.entries.resize(count);
  parallel_for(count, threads, [&](std::size_t k) {
    const int d = degree_lo + static_cast<int>(k);
    std::map<int, DegreeSlice> slices;
    auto slice = [&](int degree) -> const DegreeSlice& {
      auto it = slices.find(degree);
      if (it == slices.end()) it = slices.emplace(degree, DegreeSlice(ring, single, degree)).first;
      return it->second;
    };
    const DegreeSlice& source = slice(d);
    TorsionEntry entry;
    entry.degree = d;
    for (int n = 1; n <= n_max; ++n) {
      std::vector<Mat> blocks;
      std::size_t rows = 0;
      for (std::size_t j = 0; j < maps[n - 1].size(); ++j) {
        const int target = d + by_level[n - 1][j].degree;
        blocks.push_back(slice_map(ring, maps[n - 1][j], 0, source, slice(target)));
        rows += blocks.back().rows();
      }
      Mat stacked(rows, source.dim(0));
      std::size_t r0 = 0;
      for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
          for (std::size_t c = 0; c < b.cols(); ++c) stacked(r0 + r, c) = b(r, c);
        r0 += b.rows();
      }
      entry.dims.push_back(source.dim(0) - rank(ring.field(), stacked));
    }
    entry.stabilized_dim = entry.dims.back();
    entry.stabilized = entry.dims[n_max - 1] == entry.dims[n_max - 2];
    report.entries[k] = std::move(entry);
  });
  return report;
}

}  // namespace cechkit
