#pragma once

#include <cstddef>
#include <vector>

#include "cechkit/matrix.hpp"

namespace cechkit {

/// The quotient V / span(relations) of V = F_p^ambient_dim.
///
/// Coordinates on the quotient are the non-pivot ambient coordinates of the
/// reduced column-echelon form of the relation span. `projection()` sends an
/// ambient vector to quotient coordinates; `lift()` picks the representative
/// supported on non-pivot coordinates, so projection·lift = id.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(const PrimeField& field, std::size_t ambient_dim, const Mat& relations);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return kept_.size(); }
  std::size_t relation_rank() const { return pivots_.size(); }

  /// dim × ambient_dim.
  const Mat& projection() const { return projection_; }
  /// ambient_dim × dim.
  const Mat& lift() const { return lift_; }
  /// ambient_dim × relation_rank, reduced: column k has a 1 in row pivots()[k]
  /// and zeros in every other pivot row.
  const Mat& relation_basis() const { return relation_basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> kept_;
  Mat projection_;
  Mat lift_;
  Mat relation_basis_;
};

QuotientSpace quotient_reduce(const PrimeField& field, std::size_t ambient_dim,
                              const Mat& relations);

/// The map on quotients induced by f: src ambient → dst ambient, i.e.
/// dst.projection · f · src.lift. Throws RelationNotPreserved if f does not
/// carry the source relations into the destination relations.
Mat induced_map(const PrimeField& field, const Mat& f, const QuotientSpace& src,
                const QuotientSpace& dst);

}  // namespace cechkit
