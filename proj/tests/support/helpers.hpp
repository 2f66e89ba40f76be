#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "cechkit/graded_ring.hpp"
#include "oracle.hpp"

namespace testing {

inline cechkit::Ring ring(std::vector<std::string> vars, std::uint64_t p = 32003) {
  return cechkit::Ring(cechkit::PrimeField(p), std::move(vars));
}

inline std::vector<cechkit::Polynomial> polys(const cechkit::Ring& r,
                                              std::initializer_list<const char*> text) {
  std::vector<cechkit::Polynomial> out;
  for (const char* t : text) out.push_back(r.parse(t));
  return out;
}

inline std::map<oracle::Exps, std::int64_t> to_oracle(const cechkit::Polynomial& f) {
  std::map<oracle::Exps, std::int64_t> out;
  for (const auto& t : f.terms()) out[t.mono.exps] = t.coeff;
  return out;
}

inline cechkit::Polynomial from_exps(const cechkit::Ring& r, const oracle::Exps& e,
                                     cechkit::Scalar c = 1) {
  return r.monomial(cechkit::Monomial(e), c);
}

inline cechkit::Polynomial random_homogeneous(const cechkit::Ring& r, std::mt19937_64& g, int degree,
                                              int max_terms) {
  std::vector<cechkit::Term> terms;
  const auto mons = oracle::monomials(r.nvars(), degree);
  const int count = oracle::uniform(g, 1, max_terms);
  for (int k = 0; k < count; ++k) {
    const auto& e = mons[oracle::uniform(g, 0, static_cast<int>(mons.size()) - 1)];
    terms.push_back(cechkit::Term{cechkit::Monomial(e), r.field().from_int(oracle::uniform(g, -9, 9))});
  }
  return r.from_terms(std::move(terms));
}

inline cechkit::Polynomial random_monomial(const cechkit::Ring& r, std::mt19937_64& g, int lo, int hi) {
  const auto mons = oracle::monomials(r.nvars(), oracle::uniform(g, lo, hi));
  return from_exps(r, mons[oracle::uniform(g, 0, static_cast<int>(mons.size()) - 1)]);
}

}  // namespace testing
