#pragma once

#include <span>
#include <vector>

#include "cechkit/colimit.hpp"

namespace cechkit {

/// The Taylor complex of monomials m_1..m_r: basis e_I, e_I in internal
/// degree deg lcm(m_I), d(e_I) = Σ_{j∈I} sign(j, I)·(lcm(I)/lcm(I∖j))·e_{I∖j}.
/// Coefficients of the m_j are ignored. Throws NonMonomial.
GradedFreeComplex taylor_chain(const GradedRing& ring, std::span<const Polynomial> monomials);
GradedFreeComplex taylor_chain(const GradedRing& ring, const Sequence& a, int n);

/// T(a^m) → T(aⁿ), e_I ↦ (lcm_m(I)/lcm_n(I))·e_I, covering A/(a^m) ↠ A/(aⁿ).
ChainMap taylor_transition(const GradedRing& ring, const Sequence& a, int n, int m);

/// Throws NotExact unless H_i(T) = 0 for every i ≥ 1 in internal degrees
/// 0..deg lcm(all generators). Meaningful over a polynomial ring only.
void verify_resolution(const GradedRing& ring, const GradedFreeComplex& taylor);

/// colim_n Ext^i(A/(aⁿ), M) computed from Hom(T(aⁿ), M). Over a quotient ring
/// S/Q the computation runs over S with M viewed as an S-module; local
/// cohomology does not depend on that choice of base.
ColimitReport ext_colimit_local_cohomology(const GradedRing& ring, const Sequence& a,
                                           const FPGradedModule& module, int spot,
                                           const ColimitParams& params);
/// All spots 0..r.
std::vector<ColimitReport> ext_colimit_local_cohomology(const GradedRing& ring,
                                                        const Sequence& a,
                                                        const FPGradedModule& module,
                                                        const ColimitParams& params);

}  // namespace cechkit
