#pragma once

#include <cstddef>
#include <vector>

#include "cechkit/complex.hpp"
#include "cechkit/quotient_space.hpp"

namespace cechkit {

/// Homology at one node of a finite-dimensional complex:
/// ker(outgoing) / im(incoming).
///
/// Cycles are coordinatised by the free columns of the echelon form of the
/// outgoing map; homology is the quotient of that cycle space by the
/// boundaries, with the deterministic complement chosen by QuotientSpace.
class HomologyPiece {
 public:
  /// incoming: dim × (previous node dim); outgoing: (next node dim) × dim.
  /// Pass 0-row / 0-column matrices at the ends of a complex.
  HomologyPiece(const PrimeField& field, const Mat& incoming, const Mat& outgoing);

  std::size_t space_dim() const { return space_dim_; }
  std::size_t cycle_dim() const { return cycle_cols_.size(); }
  std::size_t boundary_rank() const { return classes_.relation_rank(); }
  std::size_t dim() const { return classes_.dim(); }

  /// Homology classes of the given cycles (columns in space coordinates).
  /// Throws std::logic_error if a column is not a cycle.
  Mat coordinates(const PrimeField& field, const Mat& cycles) const;
  /// One representative cycle per homology basis vector, in space coordinates.
  const Mat& representatives() const { return representatives_; }

 private:
  std::size_t space_dim_;
  Mat outgoing_;
  std::vector<std::size_t> cycle_cols_;
  QuotientSpace classes_;
  Mat representatives_;
};

/// Everything about a complex of FP modules in one internal degree: the
/// quotient space at each spot and the induced differentials.
class DegreeSlice {
 public:
  DegreeSlice(const GradedRing& ring, const FPComplex& complex, int degree);

  int degree() const { return degree_; }
  const SpotLayout& layout() const { return layout_; }
  const FreeModulePiece& ambient(int spot) const { return ambients_.at(spot - layout_.lo); }
  const QuotientSpace& space(int spot) const { return spaces_.at(spot - layout_.lo); }
  std::size_t dim(int spot) const { return layout_.has_spot(spot) ? space(spot).dim() : 0; }
  /// Differential leaving `spot`, (dim of target) × dim(spot); 0 rows when the
  /// target lies outside the complex.
  const Mat& out(int spot) const { return outgoing_.at(spot - layout_.lo); }
  /// Differential entering `spot`; 0 columns when the source lies outside.
  const Mat& in(int spot) const { return incoming_.at(spot - layout_.lo); }

  HomologyPiece homology(const PrimeField& field, int spot) const;

 private:
  int degree_;
  SpotLayout layout_;
  std::vector<FreeModulePiece> ambients_;
  std::vector<QuotientSpace> spaces_;
  std::vector<Mat> outgoing_;
  std::vector<Mat> incoming_;
};

/// A map of FP complexes evaluated at one spot between two slices, in
/// quotient coordinates. `target.degree()` must equal source degree + map degree.
Mat slice_map(const GradedRing& ring, const FPComplexMap& map, int spot,
              const DegreeSlice& source, const DegreeSlice& target);

/// The map on homology induced by a chain-level map (in space coordinates).
Mat homology_map(const PrimeField& field, const HomologyPiece& source, const HomologyPiece& target,
                 const Mat& chain_level);

/// dim H at `spot` of C ⊗ M in internal degree d.
std::size_t homology_dims(const GradedRing& ring, const GradedFreeComplex& complex,
                          const FPGradedModule& module, int spot, int degree);

/// The map H(source ⊗ M) → H(target ⊗ M) induced by t at `spot`, from internal
/// degree d to d + t.degree(), in the deterministic homology bases.
Mat homology_transition(const GradedRing& ring, const GradedFreeComplex& source,
                        const GradedFreeComplex& target, const ChainMap& t,
                        const FPGradedModule& module, int spot, int degree);

}  // namespace cechkit
