#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "cechkit/graded_ring.hpp"

namespace cechkit {

/// ⊕_k A(−degrees[k]): generator k sits in internal degree degrees[k].
/// Degrees may be negative (duals).
struct GradedFreeModule {
  std::vector<int> degrees;

  std::size_t rank() const { return degrees.size(); }
  GradedFreeModule shifted(int s) const;
  GradedFreeModule dual() const;

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// rows × cols matrix of polynomials; column c is the image of source
/// generator c.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static PolyMatrix identity(const GradedRing& ring, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  bool is_zero() const;
  PolyMatrix transpose() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

PolyMatrix multiply(const GradedRing& ring, const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix add(const GradedRing& ring, const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix scale(const GradedRing& ring, const PolyMatrix& a, const Polynomial& f);
/// a ⊗ I_k: entry ((r,i),(c,i)) = a(r,c).
PolyMatrix kron_identity(const PolyMatrix& a, std::size_t k);
/// I_k ⊗ a: block diagonal with k copies of a.
PolyMatrix identity_kron(std::size_t k, const PolyMatrix& a);

/// Checks that every nonzero entry (r,c) is homogeneous of degree
/// src.degrees[c] + map_degree − tgt.degrees[r]; throws NonHomogeneous.
void check_homogeneous_map(const GradedRing& ring, const PolyMatrix& m,
                           const GradedFreeModule& src, const GradedFreeModule& tgt,
                           int map_degree = 0);

/// The degree-d piece of a graded free module: per generator k the piece of A
/// in degree d − degrees[k], concatenated.
class FreeModulePiece {
 public:
  FreeModulePiece(const GradedRing& ring, const GradedFreeModule& module, int d);

  int degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  std::size_t offset(std::size_t generator) const { return offsets_[generator]; }
  const DegreePiece& piece(std::size_t generator) const { return *pieces_[generator]; }
  /// (generator, monomial) pairs in coordinate order.
  std::vector<std::pair<std::size_t, Monomial>> basis() const;

 private:
  int degree_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::shared_ptr<const DegreePiece>> pieces_;
};

inline FreeModulePiece free_module_piece(const GradedRing& ring, const GradedFreeModule& m,
                                         int d) {
  return FreeModulePiece(ring, m, d);
}

/// Matrix of the homogeneous map `m` (of internal degree map_degree) from
/// src_d to tgt_{d + map_degree}.
Mat degree_matrix(const GradedRing& ring, const PolyMatrix& m, const FreeModulePiece& src,
                  const FreeModulePiece& tgt);
Mat degree_matrix(const GradedRing& ring, const PolyMatrix& m, const GradedFreeModule& src,
                  const GradedFreeModule& tgt, int d, int map_degree = 0);

}  // namespace cechkit
