#include "cechkit/free_module.hpp"

#include <algorithm>
#include <stdexcept>

#include "cechkit/errors.hpp"

namespace cechkit {

GradedFreeModule GradedFreeModule::shifted(int s) const {
  GradedFreeModule out = *this;
  for (int& d : out.degrees) d += s;
  return out;
}

GradedFreeModule GradedFreeModule::dual() const {
  GradedFreeModule out = *this;
  for (int& d : out.degrees) d = -d;
  return out;
}

PolyMatrix PolyMatrix::identity(const GradedRing& ring, std::size_t n) {
  PolyMatrix m(n, n);
  const Polynomial one = ring.normal_form(ring.base().constant(1));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix multiply(const GradedRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("PolyMatrix multiply: shape mismatch");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Polynomial acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
        acc = ring.base().add(acc, ring.base().mul(a(r, k), b(k, c)));
      }
      out(r, c) = ring.normal_form(acc);
    }
  }
  return out;
}

PolyMatrix add(const GradedRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("PolyMatrix add: shape mismatch");
  PolyMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = ring.add(a(r, c), b(r, c));
  return out;
}

PolyMatrix scale(const GradedRing& ring, const PolyMatrix& a, const Polynomial& f) {
  PolyMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = ring.mul(a(r, c), f);
  return out;
}

PolyMatrix kron_identity(const PolyMatrix& a, std::size_t k) {
  PolyMatrix out(a.rows() * k, a.cols() * k);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero())
        for (std::size_t i = 0; i < k; ++i) out(r * k + i, c * k + i) = a(r, c);
  return out;
}

PolyMatrix identity_kron(std::size_t k, const PolyMatrix& a) {
  PolyMatrix out(a.rows() * k, a.cols() * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        out(i * a.rows() + r, i * a.cols() + c) = a(r, c);
  return out;
}

void check_homogeneous_map(const GradedRing& ring, const PolyMatrix& m,
                           const GradedFreeModule& src, const GradedFreeModule& tgt,
                           int map_degree) {
  if (m.rows() != tgt.rank() || m.cols() != src.rank())
    throw std::invalid_argument("check_homogeneous_map: shape mismatch (" +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                " vs " + std::to_string(tgt.rank()) + "x" +
                                std::to_string(src.rank()) + ")");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Polynomial& f = m(r, c);
      if (f.is_zero()) continue;
      const int want = src.degrees[c] + map_degree - tgt.degrees[r];
      const auto got = ring.base().degree(f);
      if (!got || *got != want)
        throw NonHomogeneous("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                             ") = " + ring.base().format(f) + " is not homogeneous of degree " +
                             std::to_string(want));
    }
  }
}

FreeModulePiece::FreeModulePiece(const GradedRing& ring, const GradedFreeModule& module, int d)
    : degree_(d) {
  offsets_.reserve(module.rank());
  pieces_.reserve(module.rank());
  for (int g : module.degrees) {
    offsets_.push_back(dim_);
    pieces_.push_back(ring.degree_piece(d - g));
    dim_ += pieces_.back()->dim();
  }
}

std::vector<std::pair<std::size_t, Monomial>> FreeModulePiece::basis() const {
  std::vector<std::pair<std::size_t, Monomial>> out;
  out.reserve(dim_);
  for (std::size_t k = 0; k < pieces_.size(); ++k)
    for (const auto& m : pieces_[k]->basis) out.emplace_back(k, m);
  return out;
}

Mat degree_matrix(const GradedRing& ring, const PolyMatrix& m, const FreeModulePiece& src,
                  const FreeModulePiece& tgt) {
  Mat out(tgt.dim(), src.dim());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const DegreePiece& sp = src.piece(c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Polynomial& f = m(r, c);
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < sp.dim(); ++k)
        ring.accumulate(f, sp.basis[k], 1, tgt.piece(r), out, tgt.offset(r), src.offset(c) + k);
    }
  }
  return out;
}

Mat degree_matrix(const GradedRing& ring, const PolyMatrix& m, const GradedFreeModule& src,
                  const GradedFreeModule& tgt, int d, int map_degree) {
  return degree_matrix(ring, m, FreeModulePiece(ring, src, d),
                       FreeModulePiece(ring, tgt, d + map_degree));
}

}  // namespace cechkit
