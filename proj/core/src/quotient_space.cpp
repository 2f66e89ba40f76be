#include "cechkit/quotient_space.hpp"

#include <stdexcept>

#include "cechkit/errors.hpp"

namespace cechkit {

QuotientSpace::QuotientSpace(const PrimeField& field, std::size_t ambient_dim,
                             const Mat& relations)
    : ambient_dim_(ambient_dim) {
  if (relations.rows() != ambient_dim && relations.cols() != 0)
    throw std::invalid_argument("quotient_reduce: relations must have ambient_dim rows");

  // Row-reducing the transpose gives a reduced basis of the column span whose
  // pivots are ambient coordinates.
  Mat rows_form(0, ambient_dim);
  if (relations.cols() != 0) {
    auto ech = row_reduce(field, relations.transpose());
    pivots_ = ech.pivot_cols;
    rows_form = std::move(ech.reduced);
  }
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (!is_pivot[j]) kept_.push_back(j);
  }

  relation_basis_ = Mat(ambient_dim, pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k)
    for (std::size_t j = 0; j < ambient_dim; ++j) relation_basis_(j, k) = rows_form(k, j);

  projection_ = Mat(kept_.size(), ambient_dim);
  lift_ = Mat(ambient_dim, kept_.size());
  for (std::size_t q = 0; q < kept_.size(); ++q) {
    projection_(q, kept_[q]) = 1;
    lift_(kept_[q], q) = 1;
  }
  // A pivot coordinate e_p is congruent to e_p - b_k, which lives on the kept
  // coordinates.
  for (std::size_t k = 0; k < pivots_.size(); ++k)
    for (std::size_t q = 0; q < kept_.size(); ++q)
      projection_(q, pivots_[k]) = field.neg(rows_form(k, kept_[q]));
}

QuotientSpace quotient_reduce(const PrimeField& field, std::size_t ambient_dim,
                              const Mat& relations) {
  return QuotientSpace(field, ambient_dim, relations);
}

Mat induced_map(const PrimeField& field, const Mat& f, const QuotientSpace& src,
                const QuotientSpace& dst) {
  if (f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim())
    throw std::invalid_argument("induced_map: shape mismatch");
  if (src.relation_rank() != 0) {
    const Mat image = multiply(field, f, src.relation_basis());
    if (!multiply(field, dst.projection(), image).is_zero())
      throw RelationNotPreserved("induced_map: image of a source relation is not a relation");
  }
  return multiply(field, dst.projection(), multiply(field, f, src.lift()));
}

}  // namespace cechkit
