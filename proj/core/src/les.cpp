#include "cechkit/les.hpp"

#include <stdexcept>

#include "cechkit/errors.hpp"

namespace cechkit {

namespace {

std::string node_name(int which, int spot) {
  return "H[" + std::to_string(spot) + "](M" + std::to_string(which) + ")";
}

}  // namespace

SESSlice::SESSlice(const GradedRing& ring, const SESOfModules& ses,
                   const GradedFreeComplex& complex, int degree)
    : degree_(degree), layout_(complex.layout()) {
  const auto& field = ring.field();
  const FPComplex c1 = tensor(ring, complex, ses.m1);
  const FPComplex c2 = tensor(ring, complex, ses.m2);
  const FPComplex c3 = tensor(ring, complex, ses.m3);
  slices_.emplace_back(ring, c1, degree);
  slices_.emplace_back(ring, c2, degree);
  slices_.emplace_back(ring, c3, degree);
  const FPComplexMap fmap = tensor(complex, ses.f);
  const FPComplexMap gmap = tensor(complex, ses.g);
  for (int i = layout_.lo; i <= layout_.hi(); ++i) {
    f_.push_back(slice_map(ring, fmap, i, slices_[0], slices_[1]));
    g_.push_back(slice_map(ring, gmap, i, slices_[1], slices_[2]));
    const Mat& f = f_.back();
    const Mat& g = g_.back();
    const std::size_t d1 = slices_[0].dim(i), d2 = slices_[1].dim(i), d3 = slices_[2].dim(i);
    const std::string where = " at spot " + std::to_string(i) + ", degree " + std::to_string(degree);
    if (rank(field, f) != d1) throw NotExact("f is not injective" + where);
    if (rank(field, g) != d3) throw NotExact("g is not surjective" + where);
    if (d1 + d3 != d2 || (d1 != 0 && d3 != 0 && !multiply(field, g, f).is_zero()))
      throw NotExact("im f ≠ ker g" + where);
  }
  homology_.resize(3);
  for (int w = 0; w < 3; ++w)
    for (int i = layout_.lo; i <= layout_.hi(); ++i)
      homology_[w].push_back(slices_[w].homology(field, i));
}

Mat SESSlice::connecting(const PrimeField& field, int spot) const {
  const int next = spot + step(layout_.direction);
  const HomologyPiece& h3 = homology(3, spot);
  if (!layout_.has_spot(next)) return Mat(0, h3.dim());
  const HomologyPiece& h1 = homology(1, next);
  if (h3.dim() == 0 || h1.dim() == 0) return Mat(h1.dim(), h3.dim());

  const auto lifted = solve(field, g(spot), h3.representatives());
  if (!lifted) throw NotExact("connecting map: cycle does not lift through g");
  const Mat pushed = multiply(field, slice(2).out(spot), *lifted);
  const auto pulled = solve(field, f(next), pushed);
  if (!pulled) throw NotExact("connecting map: boundary does not come from m1");
  return h1.coordinates(field, *pulled);
}

Mat snake_connecting(const GradedRing& ring, const SESOfModules& ses,
                     const GradedFreeComplex& complex, int spot, int degree) {
  return SESSlice(ring, ses, complex, degree).connecting(ring.field(), spot);
}

namespace {

void fail(LesReport& report, bool& flag, int degree, std::string node, std::string reason) {
  flag = false;
  if (!report.first_failure) report.first_failure = LesFailure{degree, std::move(node), std::move(reason)};
}

LesDegreeSummary check_degree(const PrimeField& field, const SESSlice& s, LesReport& report) {
  const SpotLayout& layout = s.layout();
  const int st = step(layout.direction);
  LesDegreeSummary summary;
  summary.degree = s.degree();

  // Walk the spots in the order the long sequence visits them.
  std::vector<int> order;
  for (int i = st > 0 ? layout.lo : layout.hi(); layout.has_spot(i); i += st) order.push_back(i);

  std::vector<Mat> maps;  // maps[k]: node k → node k+1
  std::vector<std::size_t> dims;
  for (int i : order) {
    for (int w = 1; w <= 3; ++w) {
      summary.nodes.push_back(node_name(w, i));
      dims.push_back(s.homology(w, i).dim());
    }
    maps.push_back(homology_map(field, s.homology(1, i), s.homology(2, i), s.f(i)));
    maps.push_back(homology_map(field, s.homology(2, i), s.homology(3, i), s.g(i)));
    Mat delta = s.connecting(field, i);
    summary.connecting_ranks.push_back(rank(field, delta));
    if (layout.has_spot(i + st)) maps.push_back(std::move(delta));
  }

  for (std::size_t k = 0; k < dims.size(); ++k) {
    const std::size_t in_rank = k == 0 ? 0 : rank(field, maps[k - 1]);
    const std::size_t out_rank = k < maps.size() ? rank(field, maps[k]) : 0;
    ++report.nodes_checked;
    if (k > 0 && k < maps.size() && !maps[k].empty() && !maps[k - 1].empty() &&
        !multiply(field, maps[k], maps[k - 1]).is_zero()) {
      fail(report, report.exact, s.degree(), summary.nodes[k], "composite of consecutive maps is nonzero");
    } else if (in_rank + out_rank != dims[k]) {
      fail(report, report.exact, s.degree(), summary.nodes[k],
           "rank(in) + rank(out) = " + std::to_string(in_rank + out_rank) + " but dim = " +
               std::to_string(dims[k]));
    }
  }
  summary.node_dims = std::move(dims);
  for (const auto& m : maps) summary.map_ranks.push_back(rank(field, m));
  return summary;
}

}  // namespace

LesReport les_exactness_check(const GradedRing& ring, const SESOfModules& ses,
                              const GradedFreeComplex& complex, int lo, int hi) {
  LesReport report;
  for (int d = lo; d <= hi; ++d) {
    const SESSlice s(ring, ses, complex, d);
    report.degrees.push_back(check_degree(ring.field(), s, report));
  }
  return report;
}

LesReport les_exactness_check(const GradedRing& ring, const SESOfModules& ses,
                              const GradedFreeComplex& complex, int lo, int hi,
                              const SESMorphism& morphism, const SESOfModules& target) {
  const auto& field = ring.field();
  LesReport report;
  const FPComplexMap alpha = tensor(complex, morphism.alpha, morphism.degree);
  const FPComplexMap beta = tensor(complex, morphism.beta, morphism.degree);
  const FPComplexMap gamma = tensor(complex, morphism.gamma, morphism.degree);
  const int st = step(complex.direction());
  for (int d = lo; d <= hi; ++d) {
    const SESSlice s(ring, ses, complex, d);
    const SESSlice t(ring, target, complex, d + morphism.degree);
    report.degrees.push_back(check_degree(field, s, report));

    for (int i = complex.lo(); i <= complex.hi(); ++i) {
      const Mat a = slice_map(ring, alpha, i, s.slice(1), t.slice(1));
      const Mat b = slice_map(ring, beta, i, s.slice(2), t.slice(2));
      const Mat c = slice_map(ring, gamma, i, s.slice(3), t.slice(3));
      ++report.squares_checked;
      if (!(multiply(field, b, s.f(i)) == multiply(field, t.f(i), a)) ||
          !(multiply(field, c, s.g(i)) == multiply(field, t.g(i), b))) {
        fail(report, report.natural, d, node_name(2, i), "morphism of sequences does not commute");
        continue;
      }
      const int next = i + st;
      if (!complex.has_spot(next)) continue;
      const Mat a_next = slice_map(ring, alpha, next, s.slice(1), t.slice(1));
      const Mat h_gamma = homology_map(field, s.homology(3, i), t.homology(3, i), c);
      const Mat h_alpha = homology_map(field, s.homology(1, next), t.homology(1, next), a_next);
      ++report.squares_checked;
      const Mat lhs = multiply(field, t.connecting(field, i), h_gamma);
      const Mat rhs = multiply(field, h_alpha, s.connecting(field, i));
      if (!(lhs == rhs))
        fail(report, report.natural, d, node_name(3, i), "connecting map is not natural");
    }
  }
  return report;
}

}  // namespace cechkit
