#pragma once

#include <cstddef>
#include <vector>

#include "cechkit/free_module.hpp"

namespace cechkit {

/// Chain complexes lower the spot index, cochain complexes raise it.
enum class Direction { Chain, Cochain };

inline int step(Direction d) { return d == Direction::Chain ? -1 : 1; }
inline Direction opposite(Direction d) {
  return d == Direction::Chain ? Direction::Cochain : Direction::Chain;
}

/// Spots lo..lo+count-1 joined by `count - 1` links. Link k joins spot lo+k and
/// lo+k+1; it is the differential lo+k+1 → lo+k for a chain complex and
/// lo+k → lo+k+1 for a cochain complex.
struct SpotLayout {
  Direction direction = Direction::Chain;
  int lo = 0;
  std::size_t count = 0;

  int hi() const { return lo + static_cast<int>(count) - 1; }
  bool has_spot(int i) const { return count != 0 && i >= lo && i <= hi(); }
  /// Index of the link leaving spot i, or -1.
  int out_link(int i) const;
  /// Index of the link entering spot i, or -1.
  int in_link(int i) const;
};

/// A bounded complex of graded free modules with degree-0 homogeneous
/// differentials. The constructor verifies homogeneity and d∘d = 0 as
/// polynomial matrices.
class GradedFreeComplex {
 public:
  GradedFreeComplex(const GradedRing& ring, Direction direction, int lo,
                    std::vector<GradedFreeModule> spots, std::vector<PolyMatrix> links);

  const SpotLayout& layout() const { return layout_; }
  Direction direction() const { return layout_.direction; }
  int lo() const { return layout_.lo; }
  int hi() const { return layout_.hi(); }
  bool has_spot(int i) const { return layout_.has_spot(i); }
  const GradedFreeModule& spot(int i) const { return spots_.at(i - layout_.lo); }
  const std::vector<GradedFreeModule>& spots() const { return spots_; }
  const std::vector<PolyMatrix>& links() const { return links_; }
  /// Differential leaving spot i; nullptr if its target is outside the complex.
  const PolyMatrix* out(int i) const;
  const PolyMatrix* in(int i) const;

  /// Hom(−, A): spots dualised, links transposed, direction reversed.
  GradedFreeComplex dual(const GradedRing& ring) const;

 private:
  SpotLayout layout_;
  std::vector<GradedFreeModule> spots_;
  std::vector<PolyMatrix> links_;
};

/// coker(relations: ⊕ A(−relation_degrees) → ambient). Zero relation
/// columns are dropped; every relation column must be homogeneous.
class FPGradedModule {
 public:
  FPGradedModule() = default;
  FPGradedModule(const GradedRing& ring, GradedFreeModule ambient, const PolyMatrix& relations);

  static FPGradedModule free(GradedFreeModule ambient);
  /// A/J with its generator in internal degree `generator_degree`.
  static FPGradedModule cyclic(const GradedRing& ring, const std::vector<Polynomial>& ideal,
                               int generator_degree = 0);

  const GradedFreeModule& ambient() const { return ambient_; }
  const GradedFreeModule& relation_degrees() const { return relation_degrees_; }
  const PolyMatrix& relations() const { return relations_; }
  int max_generator_degree() const;
  int min_generator_degree() const;

  FPGradedModule direct_sum(const FPGradedModule& other) const;
  /// The same module viewed over the polynomial ring covering `ring`: adds
  /// q·e_k for every Gröbner basis element q of the quotient ideal.
  FPGradedModule over_polynomial_ring(const GradedRing& ring) const;

 private:
  GradedFreeModule ambient_;
  GradedFreeModule relation_degrees_;
  PolyMatrix relations_;
};

/// Per-spot homogeneous maps between two complexes over the same spot
/// layout, raising internal degree by `degree`. Verified to commute with the
/// differentials at construction.
class ChainMap {
 public:
  ChainMap(const GradedRing& ring, const GradedFreeComplex& source,
           const GradedFreeComplex& target, std::vector<PolyMatrix> components, int degree = 0);

  int lo() const { return lo_; }
  int degree() const { return degree_; }
  const PolyMatrix& component(int spot) const { return components_.at(spot - lo_); }
  const std::vector<PolyMatrix>& components() const { return components_; }

 private:
  int lo_;
  int degree_;
  std::vector<PolyMatrix> components_;
};

/// The map Hom(target, A) → Hom(source, A) induced by t.
ChainMap dual(const GradedRing& ring, const ChainMap& t, const GradedFreeComplex& source,
              const GradedFreeComplex& target);

/// A complex of finitely presented modules; links map ambients to ambients
/// and carry relations into relations.
struct FPComplex {
  SpotLayout layout;
  std::vector<FPGradedModule> spots;
  std::vector<PolyMatrix> links;

  const FPGradedModule& spot(int i) const { return spots.at(i - layout.lo); }
  const PolyMatrix* out(int i) const;
};

/// Maps between the ambients of two FPComplexes with the same layout.
struct FPComplexMap {
  int lo = 0;
  int degree = 0;
  std::vector<PolyMatrix> components;

  const PolyMatrix& component(int spot) const { return components.at(spot - lo); }
};

/// C ⊗ M for a free complex C. Spot i has generators (I, k) ordered I-major.
FPComplex tensor(const GradedRing& ring, const GradedFreeComplex& complex,
                 const FPGradedModule& module);
/// t ⊗ id_M.
FPComplexMap tensor(const ChainMap& t, const FPGradedModule& module);
/// id_C ⊗ f for a map f of module ambients of internal degree `degree`.
FPComplexMap tensor(const GradedFreeComplex& complex, const PolyMatrix& f, int degree = 0);

}  // namespace cechkit
