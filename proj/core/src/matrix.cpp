#include "cechkit/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace cechkit {

Mat Mat::from_rows(const PrimeField& field,
                   const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows.front().size();
  Mat m(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    if (rows[r].size() != ncols)
      throw std::invalid_argument("Mat::from_rows: ragged rows");
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (Scalar s : data_)
    if (s != 0) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::column(std::size_t c) const {
  const std::size_t idx[] = {c};
  return columns(idx);
}

Mat Mat::columns(std::span<const std::size_t> idx) const {
  Mat out(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < idx.size(); ++k) out(r, k) = (*this)(r, idx[k]);
  return out;
}

Mat Mat::rows_subset(std::span<const std::size_t> idx) const {
  Mat out(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(idx[k], c);
  return out;
}

Mat multiply(const PrimeField& field, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  const std::uint64_t p = field.characteristic();
  Mat out(a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t x = a(r, k);
      if (x == 0) continue;
      auto brow = b.row(k);
      for (std::size_t c = 0; c < b.cols(); ++c) {
        // p < 2^31, so x * brow[c] < 2^62 and one reduction per product
        // keeps the accumulator below 2^63.
        acc[c] = (acc[c] + x * brow[c]) % p;
      }
    }
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = static_cast<Scalar>(acc[c]);
  }
  return out;
}

Mat add(const PrimeField& field, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("add: shape mismatch");
  Mat out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = field.add(a(r, c), b(r, c));
  return out;
}

Mat subtract(const PrimeField& field, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("subtract: shape mismatch");
  Mat out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = field.sub(a(r, c), b(r, c));
  return out;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Mat out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

EchelonForm row_reduce(const PrimeField& field, Mat m,
                       std::optional<std::size_t> pivot_limit) {
  const std::size_t limit = pivot_limit.value_or(m.cols());
  assert(limit <= m.cols());
  EchelonForm out;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < limit && next_row < m.rows(); ++c) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != next_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(next_row, k));
    const Scalar scale = field.inv(m(next_row, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(next_row, k) = field.mul(m(next_row, k), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next_row) continue;
      const Scalar factor = m(r, c);
      if (factor == 0) continue;
      for (std::size_t k = c; k < m.cols(); ++k)
        m(r, k) = field.sub(m(r, k), field.mul(factor, m(next_row, k)));
    }
    out.pivot_cols.push_back(c);
    ++next_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const PrimeField& field, const Mat& m) {
  if (m.empty()) return 0;
  // Eliminating along the shorter side is cheaper and gives the same rank.
  if (m.rows() > m.cols()) return row_reduce(field, m.transpose()).pivot_cols.size();
  return row_reduce(field, m).pivot_cols.size();
}

Kernel kernel(const PrimeField& field, const Mat& m) {
  const auto ech = row_reduce(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
  Kernel out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) out.free_cols.push_back(c);
  out.basis = Mat(m.cols(), out.free_cols.size());
  for (std::size_t k = 0; k < out.free_cols.size(); ++k) {
    const std::size_t f = out.free_cols[k];
    out.basis(f, k) = 1;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
      out.basis(ech.pivot_cols[r], k) = field.neg(ech.reduced(r, f));
  }
  return out;
}

Mat kernel_basis(const PrimeField& field, const Mat& m) { return kernel(field, m).basis; }

Mat image_basis(const PrimeField& field, const Mat& m) {
  const auto ech = row_reduce(field, m);
  return m.columns(ech.pivot_cols);
}

std::optional<Mat> solve(const PrimeField& field, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const auto ech = row_reduce(field, hstack(a, b), a.cols());
  const std::size_t rk = ech.pivot_cols.size();
  for (std::size_t r = rk; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (ech.reduced(r, a.cols() + c) != 0) return std::nullopt;
  Mat x(a.cols(), b.cols());
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      x(ech.pivot_cols[r], c) = ech.reduced(r, a.cols() + c);
  return x;
}

}  // namespace cechkit
