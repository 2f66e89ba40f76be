#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cechkit/homology.hpp"

namespace cechkit {

/// 0 → m1 →f m2 →g m3 → 0, with f and g degree-0 maps of ambients that
/// respect relations. Exactness is checked degreewise when used.
struct SESOfModules {
  FPGradedModule m1, m2, m3;
  PolyMatrix f, g;
};

/// Vertical maps of a morphism between two short exact sequences, all of
/// internal degree `degree`.
struct SESMorphism {
  PolyMatrix alpha, beta, gamma;
  int degree = 0;
};

/// The short exact sequence of complexes C⊗m1 → C⊗m2 → C⊗m3 evaluated in
/// one internal degree, with its rank checks done.
class SESSlice {
 public:
  /// Throws NotExact if some spot fails injectivity, surjectivity or
  /// im f = ker g.
  SESSlice(const GradedRing& ring, const SESOfModules& ses, const GradedFreeComplex& complex,
           int degree);

  int degree() const { return degree_; }
  const SpotLayout& layout() const { return layout_; }
  const DegreeSlice& slice(int which) const { return slices_.at(which - 1); }
  const Mat& f(int spot) const { return f_.at(spot - layout_.lo); }
  const Mat& g(int spot) const { return g_.at(spot - layout_.lo); }
  const HomologyPiece& homology(int which, int spot) const {
    return homology_.at(which - 1).at(spot - layout_.lo);
  }

  /// δ: H(C⊗m3) at `spot` → H(C⊗m1) at spot + step, by the zig-zag lift.
  /// A 0-row matrix when spot + step lies outside the complex.
  Mat connecting(const PrimeField& field, int spot) const;

 private:
  int degree_;
  SpotLayout layout_;
  std::vector<DegreeSlice> slices_;
  std::vector<Mat> f_, g_;
  std::vector<std::vector<HomologyPiece>> homology_;
};

Mat snake_connecting(const GradedRing& ring, const SESOfModules& ses,
                     const GradedFreeComplex& complex, int spot, int degree);

struct LesFailure {
  int degree = 0;
  std::string node;
  std::string reason;
};

/// The long sequence in one degree: node dimensions and the ranks of the
/// maps between consecutive nodes (map k goes from node k to node k+1).
struct LesDegreeSummary {
  int degree = 0;
  std::vector<std::string> nodes;
  std::vector<std::size_t> node_dims;
  std::vector<std::size_t> map_ranks;
  std::vector<std::size_t> connecting_ranks;
};

struct LesReport {
  bool exact = true;
  bool natural = true;
  std::size_t nodes_checked = 0;
  std::size_t squares_checked = 0;
  std::vector<LesDegreeSummary> degrees;
  std::optional<LesFailure> first_failure;

  bool ok() const { return exact && natural; }
};

/// Assembles the long homology sequence of 0 → C⊗m1 → C⊗m2 → C⊗m3 → 0 in
/// every degree of [lo, hi] and checks exactness at every node.
LesReport les_exactness_check(const GradedRing& ring, const SESOfModules& ses,
                              const GradedFreeComplex& complex, int lo, int hi);

/// As above, and additionally checks that the connecting maps commute with
/// the maps induced by `morphism`: δ'∘H(γ) = H(α)∘δ.
LesReport les_exactness_check(const GradedRing& ring, const SESOfModules& ses,
                              const GradedFreeComplex& complex, int lo, int hi,
                              const SESMorphism& morphism, const SESOfModules& target);

}  // namespace cechkit
