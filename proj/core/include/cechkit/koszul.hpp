#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "cechkit/complex.hpp"

namespace cechkit {

/// a_1..a_r: homogeneous elements of positive degree, r ≥ 1.
class Sequence {
 public:
  Sequence(const GradedRing& ring, std::vector<Polynomial> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const Polynomial& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  bool is_monomial() const;
  /// The first k elements; k may be 0 only through koszul_chain(span).
  std::vector<Polynomial> prefix(std::size_t k) const {
    return {elements_.begin(), elements_.begin() + static_cast<std::ptrdiff_t>(k)};
  }

 private:
  std::vector<Polynomial> elements_;
  std::vector<int> degrees_;
};

/// Index sets of size k in {0..r−1}, as sorted index lists in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t r, std::size_t k);
/// (−1)^{#{k ∈ I : k < j}}.
int wedge_sign(std::size_t j, std::span<const std::size_t> subset);

/// K_•(b) for elements b exactly as given (no powers taken); spots 0..r.
/// An empty list yields A concentrated at spot 0. degrees[j] is the degree of
/// b_j; it has to be given because b_j may be zero in A.
GradedFreeComplex koszul_chain(const GradedRing& ring, std::span<const Polynomial> elements,
                               std::span<const int> degrees);

/// K_•(aⁿ): e_I in internal degree n·deg(a_I).
GradedFreeComplex koszul_chain(const GradedRing& ring, const Sequence& a, int n);
/// K^•(aⁿ) = Hom(K_•(aⁿ), A): (e_I)^* in internal degree −n·deg(a_I).
GradedFreeComplex koszul_cochain(const GradedRing& ring, const Sequence& a, int n);

/// K_•(a^m) → K_•(aⁿ), e_I ↦ a_I^{m−n} e_I.
ChainMap chain_transition(const GradedRing& ring, const Sequence& a, int n, int m);
/// K^•(aⁿ) → K^•(a^m), (e_I)^* ↦ a_I^{m−n} (e_I)^*.
ChainMap cochain_transition(const GradedRing& ring, const Sequence& a, int n, int m);

/// Levels K(aⁿ) and the transitions between consecutive levels, built on
/// first use. Safe to query from several threads.
class KoszulTower {
 public:
  KoszulTower(GradedRing ring, Sequence a, Direction direction);

  const GradedRing& ring() const { return ring_; }
  const Sequence& sequence() const { return sequence_; }
  Direction direction() const { return direction_; }

  const GradedFreeComplex& level(int n) const;
  /// Chain: K(a^{n+1}) → K(aⁿ). Cochain: K(aⁿ) → K(a^{n+1}).
  const ChainMap& step(int n) const;

 private:
  GradedRing ring_;
  Sequence sequence_;
  Direction direction_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<GradedFreeComplex>> levels_;
  mutable std::map<int, std::unique_ptr<ChainMap>> steps_;
};

}  // namespace cechkit
