#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cechkit/field.hpp"

namespace cechkit {

/// Dense row-major matrix over a prime field. The field itself is not stored;
/// every operation that does arithmetic takes it explicitly.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Builds from nested rows; all rows must have the same length.
  static Mat from_rows(const PrimeField& field,
                       const std::vector<std::vector<std::int64_t>>& rows);
  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool is_zero() const;
  Mat transpose() const;
  Mat column(std::size_t c) const;
  /// Columns selected by index, in the given order.
  Mat columns(std::span<const std::size_t> idx) const;
  Mat rows_subset(std::span<const std::size_t> idx) const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat multiply(const PrimeField& field, const Mat& a, const Mat& b);
Mat add(const PrimeField& field, const Mat& a, const Mat& b);
Mat subtract(const PrimeField& field, const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry in
/// row order, and only columns below `pivot_limit` are eligible.
struct EchelonForm {
  Mat reduced;
  std::vector<std::size_t> pivot_cols;
};
EchelonForm row_reduce(const PrimeField& field, Mat m,
                       std::optional<std::size_t> pivot_limit = std::nullopt);

std::size_t rank(const PrimeField& field, const Mat& m);

/// Kernel basis read off the reduced echelon form: one column per free
/// column f of m, with a 1 in row f and zeros in the other free rows. A kernel
/// vector's coordinates in this basis are its entries at `free_cols`.
struct Kernel {
  Mat basis;
  std::vector<std::size_t> free_cols;
};
Kernel kernel(const PrimeField& field, const Mat& m);
Mat kernel_basis(const PrimeField& field, const Mat& m);

/// Linearly independent columns of m spanning its column space.
Mat image_basis(const PrimeField& field, const Mat& m);

/// Some X with a·X = b, or nullopt if the system is inconsistent. The free
/// variables are set to zero, so the answer is deterministic.
std::optional<Mat> solve(const PrimeField& field, const Mat& a, const Mat& b);

}  // namespace cechkit
