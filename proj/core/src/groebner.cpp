#include "cechkit/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "cechkit/errors.hpp"

namespace cechkit {

bool IdealBasis::is_unit() const {
  return groebner_.size() == 1 && groebner_.front().is_monomial() &&
         groebner_.front().leading().mono.is_one();
}

bool IdealBasis::is_monomial() const {
  return std::all_of(groebner_.begin(), groebner_.end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

Polynomial normal_form(const Ring& ring, const Polynomial& f,
                       const std::vector<Polynomial>& groebner) {
  if (groebner.empty() || f.is_zero()) return f;
  const auto& field = ring.field();
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& g : groebner) {
      if (divides(g.leading().mono, lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lt);
      p = ring.sub(p, ring.monomial(lt.mono, lt.coeff));
      continue;
    }
    const Scalar c = field.mul(lt.coeff, field.inv(divisor->leading().coeff));
    p = ring.sub(p, ring.mul_term(*divisor, c, quotient(lt.mono, divisor->leading().mono)));
  }
  return ring.from_terms(std::move(remainder));
}

Polynomial normal_form(const Ring& ring, const Polynomial& f, const IdealBasis& ideal) {
  return normal_form(ring, f, ideal.groebner());
}

bool ideal_member(const Ring& ring, const Polynomial& f, const IdealBasis& ideal) {
  return normal_form(ring, f, ideal).is_zero();
}

bool ideal_contains(const Ring& ring, const IdealBasis& I, const IdealBasis& J) {
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const Polynomial& g) { return ideal_member(ring, g, I); });
}

namespace {

Polynomial s_polynomial(const Ring& ring, const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading().mono, g.leading().mono);
  return ring.sub(ring.mul_term(f, 1, quotient(l, f.leading().mono)),
                  ring.mul_term(g, 1, quotient(l, g.leading().mono)));
}

std::vector<Polynomial> reduce_basis(const Ring& ring, std::vector<Polynomial> g) {
  std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.leading().mono, b.leading().mono) < 0;
  });
  // Drop elements whose leading monomial is divisible by an earlier one.
  std::vector<Polynomial> minimal;
  for (auto& p : g) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return divides(q.leading().mono, p.leading().mono);
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term lt = minimal[i].leading();
    const Polynomial tail = ring.sub(minimal[i], ring.monomial(lt.mono, lt.coeff));
    reduced.push_back(ring.make_monic(
        ring.add(ring.monomial(lt.mono, lt.coeff), normal_form(ring, tail, others))));
  }
  return reduced;
}

}  // namespace

IdealBasis buchberger(const Ring& ring, std::vector<Polynomial> generators) {
  std::vector<Polynomial> basis;
  for (const auto& g : generators)
    if (!g.is_zero()) basis.push_back(ring.make_monic(g));

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto pair_lcm = [&](const Pair& p) {
    return lcm(basis[p.first].leading().mono, basis[p.second].leading().mono);
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first; ties by index for determinism.
    auto best = pending.begin();
    Monomial best_lcm = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = pair_lcm(*it);
      if (ring.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const Pair p = *best;
    pending.erase(best);

    const Monomial& a = basis[p.first].leading().mono;
    const Monomial& b = basis[p.second].leading().mono;
    if (gcd(a, b).is_one()) continue;  // product criterion

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.first || k == p.second) continue;
      chain = divides(basis[k].leading().mono, best_lcm) && !is_pending(p.first, k) &&
              !is_pending(p.second, k);
    }
    if (chain) continue;

    Polynomial r =
        normal_form(ring, s_polynomial(ring, basis[p.first], basis[p.second]), basis);
    if (r.is_zero()) continue;
    basis.push_back(ring.make_monic(r));
    const std::size_t n = basis.size() - 1;
    for (std::size_t i = 0; i < n; ++i) pending.insert({i, n});
  }
  return IdealBasis(std::move(generators), reduce_basis(ring, std::move(basis)));
}

std::optional<Polynomial> exact_divide(const Ring& ring, const Polynomial& g,
                                       const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  const auto& field = ring.field();
  const Scalar inv_lc = field.inv(f.leading().coeff);
  std::vector<Term> q;
  Polynomial p = g;
  while (!p.is_zero()) {
    const Term lt = p.leading();
    if (!divides(f.leading().mono, lt.mono)) return std::nullopt;
    Term t{quotient(lt.mono, f.leading().mono), field.mul(lt.coeff, inv_lc)};
    p = ring.sub(p, ring.mul_term(f, t.coeff, t.mono));
    q.push_back(std::move(t));
  }
  return ring.from_terms(std::move(q));
}

IdealBasis intersect_principal(const Ring& ring, const IdealBasis& I, const Polynomial& f) {
  if (f.is_zero() || I.is_zero()) return buchberger(ring, {});
  std::string tname = "t";
  while (ring.variable_index(tname)) tname += "_";
  const Ring ext = ring.with_elimination_variable(tname);
  const Polynomial t = ext.variable(0);
  const Polynomial one_minus_t = ext.sub(ext.constant(1), t);

  std::vector<Polynomial> gens;
  for (const auto& g : I.groebner()) gens.push_back(ext.mul(t, ring.embed_after_first(ext, g)));
  gens.push_back(ext.mul(one_minus_t, ring.embed_after_first(ext, f)));
  const IdealBasis big = buchberger(ext, std::move(gens));

  std::vector<Polynomial> eliminated;
  for (const auto& g : big.groebner())
    if (g.leading().mono.exps[0] == 0) eliminated.push_back(ring.restrict_from_first(ext, g));
  return buchberger(ring, std::move(eliminated));
}

IdealBasis colon_ideal_elimination(const Ring& ring, const IdealBasis& I, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("colon_ideal: f must be nonzero");
  if (ideal_member(ring, f, I)) return buchberger(ring, {ring.constant(1)});
  const IdealBasis meet = intersect_principal(ring, I, f);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.groebner()) {
    auto q = exact_divide(ring, g, f);
    if (!q) throw std::logic_error("colon_ideal: element of I ∩ (f) not divisible by f");
    gens.push_back(std::move(*q));
  }
  return buchberger(ring, std::move(gens));
}

IdealBasis colon_ideal_monomial(const Ring& ring, const IdealBasis& I, const Polynomial& f) {
  if (!I.is_monomial() || !f.is_monomial())
    throw NonMonomial("colon_ideal_monomial: monomial ideal and element required");
  const Monomial& m = f.leading().mono;
  std::vector<Polynomial> gens;
  for (const auto& g : I.groebner())
    gens.push_back(ring.monomial(quotient(g.leading().mono, gcd(g.leading().mono, m))));
  return buchberger(ring, std::move(gens));
}

IdealBasis colon_ideal(const Ring& ring, const IdealBasis& I, const Polynomial& f) {
  if (I.is_monomial() && f.is_monomial()) return colon_ideal_monomial(ring, I, f);
  return colon_ideal_elimination(ring, I, f);
}

}  // namespace cechkit
