#include "cechkit/homology.hpp"

#include <stdexcept>

namespace cechkit {

HomologyPiece::HomologyPiece(const PrimeField& field, const Mat& incoming, const Mat& outgoing)
    : space_dim_(outgoing.cols()), outgoing_(outgoing) {
  Kernel cycles = kernel(field, outgoing);
  cycle_cols_ = std::move(cycles.free_cols);
  if (incoming.rows() != space_dim_)
    throw std::invalid_argument("HomologyPiece: incoming/outgoing dimensions disagree");
  if (incoming.cols() != 0 && outgoing.rows() != 0 &&
      !multiply(field, outgoing, incoming).is_zero())
    throw std::logic_error("HomologyPiece: composite of differentials is nonzero");
  const Mat boundary_coords = incoming.rows_subset(cycle_cols_);
  classes_ = QuotientSpace(field, cycle_dim(), boundary_coords);
  representatives_ = multiply(field, cycles.basis, classes_.lift());
}

Mat HomologyPiece::coordinates(const PrimeField& field, const Mat& cycles) const {
  if (cycles.rows() != space_dim_)
    throw std::invalid_argument("HomologyPiece::coordinates: wrong vector length");
  if (outgoing_.rows() != 0 && !multiply(field, outgoing_, cycles).is_zero())
    throw std::logic_error("HomologyPiece::coordinates: vector is not a cycle");
  return multiply(field, classes_.projection(), cycles.rows_subset(cycle_cols_));
}

DegreeSlice::DegreeSlice(const GradedRing& ring, const FPComplex& complex, int degree)
    : degree_(degree), layout_(complex.layout) {
  const auto& field = ring.field();
  for (int i = layout_.lo; i <= layout_.hi(); ++i) {
    const FPGradedModule& m = complex.spot(i);
    ambients_.emplace_back(ring, m.ambient(), degree);
    const Mat rel = degree_matrix(ring, m.relations(), FreeModulePiece(ring, m.relation_degrees(), degree),
                                  ambients_.back());
    spaces_.emplace_back(field, ambients_.back().dim(), rel);
  }
  outgoing_.resize(layout_.count);
  incoming_.resize(layout_.count);
  for (int i = layout_.lo; i <= layout_.hi(); ++i) {
    const std::size_t k = i - layout_.lo;
    const PolyMatrix* d = complex.out(i);
    if (d == nullptr) {
      outgoing_[k] = Mat(0, spaces_[k].dim());
      continue;
    }
    const int j = i + step(layout_.direction);
    const Mat raw = degree_matrix(ring, *d, ambients_[k], ambients_[j - layout_.lo]);
    outgoing_[k] = induced_map(field, raw, spaces_[k], spaces_[j - layout_.lo]);
  }
  for (int i = layout_.lo; i <= layout_.hi(); ++i) {
    const std::size_t k = i - layout_.lo;
    const int j = i - step(layout_.direction);
    incoming_[k] = layout_.has_spot(j) ? outgoing_[j - layout_.lo] : Mat(spaces_[k].dim(), 0);
  }
}

HomologyPiece DegreeSlice::homology(const PrimeField& field, int spot) const {
  return HomologyPiece(field, in(spot), out(spot));
}

Mat slice_map(const GradedRing& ring, const FPComplexMap& map, int spot,
              const DegreeSlice& source, const DegreeSlice& target) {
  if (target.degree() != source.degree() + map.degree)
    throw std::invalid_argument("slice_map: target slice has the wrong degree");
  const Mat raw =
      degree_matrix(ring, map.component(spot), source.ambient(spot), target.ambient(spot));
  return induced_map(ring.field(), raw, source.space(spot), target.space(spot));
}

Mat homology_map(const PrimeField& field, const HomologyPiece& source, const HomologyPiece& target,
                 const Mat& chain_level) {
  return target.coordinates(field, multiply(field, chain_level, source.representatives()));
}

std::size_t homology_dims(const GradedRing& ring, const GradedFreeComplex& complex,
                          const FPGradedModule& module, int spot, int degree) {
  if (!complex.has_spot(spot)) return 0;
  const DegreeSlice slice(ring, tensor(ring, complex, module), degree);
  return slice.homology(ring.field(), spot).dim();
}

Mat homology_transition(const GradedRing& ring, const GradedFreeComplex& source,
                        const GradedFreeComplex& target, const ChainMap& t,
                        const FPGradedModule& module, int spot, int degree) {
  const DegreeSlice s(ring, tensor(ring, source, module), degree);
  const DegreeSlice u(ring, tensor(ring, target, module), degree + t.degree());
  const Mat chain = slice_map(ring, tensor(t, module), spot, s, u);
  return homology_map(ring.field(), s.homology(ring.field(), spot), u.homology(ring.field(), spot),
                      chain);
}

}  // namespace cechkit
