#include "cechkit/taylor.hpp"

#include "cechkit/errors.hpp"

namespace cechkit {

namespace {

std::vector<Monomial> leading_monomials(std::span<const Polynomial> gens) {
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    if (!g.is_monomial()) throw NonMonomial("Taylor complexes need monomial generators");
    out.push_back(g.leading().mono);
  }
  return out;
}

Monomial subset_lcm(const Ring& ring, const std::vector<Monomial>& ms,
                    const std::vector<std::size_t>& subset) {
  Monomial l = ring.one();
  for (std::size_t j : subset) l = lcm(l, ms[j]);
  return l;
}

std::size_t position(const std::vector<std::vector<std::size_t>>& sets,
                     const std::vector<std::size_t>& s) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i] == s) return i;
  throw std::logic_error("subset not found");
}

std::vector<Polynomial> powers(const GradedRing& ring, const Sequence& a, int n) {
  if (n < 1) throw Error("Taylor level must be at least 1");
  std::vector<Polynomial> out;
  for (const auto& e : a.elements()) out.push_back(ring.base().pow(e, n));
  return out;
}

void require_monomial(const Sequence& a) {
  if (!a.is_monomial()) throw NonMonomial("the Ext pipeline needs a monomial sequence");
}

}  // namespace

GradedFreeComplex taylor_chain(const GradedRing& ring, std::span<const Polynomial> monomials) {
  const Ring& base = ring.base();
  const auto ms = leading_monomials(monomials);
  const std::size_t r = ms.size();
  std::vector<std::vector<std::vector<std::size_t>>> sets;
  std::vector<GradedFreeModule> spots;
  for (std::size_t k = 0; k <= r; ++k) {
    sets.push_back(subsets_of_size(r, k));
    GradedFreeModule m;
    for (const auto& s : sets.back()) m.degrees.push_back(base.degree(subset_lcm(base, ms, s)));
    spots.push_back(std::move(m));
  }
  std::vector<PolyMatrix> links;
  for (std::size_t k = 1; k <= r; ++k) {
    PolyMatrix d(sets[k - 1].size(), sets[k].size());
    for (std::size_t c = 0; c < sets[k].size(); ++c) {
      const auto& J = sets[k][c];
      const Monomial top = subset_lcm(base, ms, J);
      for (std::size_t j : J) {
        std::vector<std::size_t> rest;
        for (std::size_t x : J)
          if (x != j) rest.push_back(x);
        const Monomial ratio = quotient(top, subset_lcm(base, ms, rest));
        const Scalar sign = wedge_sign(j, J) > 0 ? 1 : base.field().neg(1);
        d(position(sets[k - 1], rest), c) = ring.normal_form(base.monomial(ratio, sign));
      }
    }
    links.push_back(std::move(d));
  }
  return GradedFreeComplex(ring, Direction::Chain, 0, std::move(spots), std::move(links));
}

GradedFreeComplex taylor_chain(const GradedRing& ring, const Sequence& a, int n) {
  require_monomial(a);
  const auto p = powers(ring, a, n);
  return taylor_chain(ring, std::span<const Polynomial>(p));
}

ChainMap taylor_transition(const GradedRing& ring, const Sequence& a, int n, int m) {
  require_monomial(a);
  if (n < 1 || m < n) throw Error("transition needs m ≥ n ≥ 1");
  const Ring& base = ring.base();
  const auto pm = powers(ring, a, m), pn = powers(ring, a, n);
  const auto ms = leading_monomials(pm), ns = leading_monomials(pn);
  std::vector<PolyMatrix> comps;
  for (std::size_t k = 0; k <= a.size(); ++k) {
    const auto sets = subsets_of_size(a.size(), k);
    PolyMatrix d(sets.size(), sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
      d(i, i) = ring.normal_form(
          base.monomial(quotient(subset_lcm(base, ms, sets[i]), subset_lcm(base, ns, sets[i]))));
    comps.push_back(std::move(d));
  }
  return ChainMap(ring, taylor_chain(ring, std::span<const Polynomial>(pm)),
                  taylor_chain(ring, std::span<const Polynomial>(pn)), std::move(comps));
}

void verify_resolution(const GradedRing& ring, const GradedFreeComplex& taylor) {
  int top = 0;
  for (int d : taylor.spot(taylor.hi()).degrees) top = std::max(top, d);
  const FPGradedModule a = FPGradedModule::free(GradedFreeModule{{0}});
  const FPComplex c = tensor(ring, taylor, a);
  for (int d = 0; d <= top; ++d) {
    const DegreeSlice slice(ring, c, d);
    for (int i = 1; i <= taylor.hi(); ++i)
      if (slice.homology(ring.field(), i).dim() != 0)
        throw NotExact("Taylor complex has homology at spot " + std::to_string(i) + " in degree " +
                       std::to_string(d));
  }
}

namespace {

FPTower ext_tower(const GradedRing& ring, const GradedRing& poly, const Sequence& a,
                  const FPGradedModule& module, int n_max) {
  require_monomial(a);
  const Sequence lifted(poly, a.elements());
  const FPGradedModule m = ring.has_quotient() ? module.over_polynomial_ring(ring) : module;
  FPTower tower;
  std::vector<GradedFreeComplex> chains;
  for (int n = 1; n <= n_max; ++n) {
    chains.push_back(taylor_chain(poly, lifted, n));
    verify_resolution(poly, chains.back());
    tower.levels.push_back(tensor(poly, chains.back().dual(poly), m));
  }
  for (int n = 1; n < n_max; ++n) {
    const ChainMap t = taylor_transition(poly, lifted, n, n + 1);
    const ChainMap back = dual(poly, t, chains[n], chains[n - 1]);
    tower.steps.push_back(tensor(back, m));
  }
  return tower;
}

}  // namespace

ColimitReport ext_colimit_local_cohomology(const GradedRing& ring, const Sequence& a,
                                           const FPGradedModule& module, int spot,
                                           const ColimitParams& params) {
  validate(params);
  const GradedRing poly = ring.without_quotient();
  return stabilized_colimit(poly, ext_tower(ring, poly, a, module, params.n_max), spot, params);
}

std::vector<ColimitReport> ext_colimit_local_cohomology(const GradedRing& ring,
                                                        const Sequence& a,
                                                        const FPGradedModule& module,
                                                        const ColimitParams& params) {
  validate(params);
  const GradedRing poly = ring.without_quotient();
  const FPTower tower = ext_tower(ring, poly, a, module, params.n_max);
  std::vector<ColimitReport> out;
  for (int i = 0; i <= static_cast<int>(a.size()); ++i)
    out.push_back(stabilized_colimit(poly, tower, i, params));
  return out;
}

}  // namespace cechkit
