#include "cechkit/ring.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace cechkit {

Ring::Ring(PrimeField field, std::vector<std::string> names, std::vector<int> weights,
           MonomialOrder order)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)), order_(order) {
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size())
    throw std::invalid_argument("Ring: one weight per variable required");
  if (std::any_of(weights_.begin(), weights_.end(), [](int w) { return w <= 0; }))
    throw std::invalid_argument("Ring: variable weights must be positive");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("Ring: duplicate variable name");
  if (order_ == MonomialOrder::EliminateFirst && names_.empty())
    throw std::invalid_argument("Ring: elimination order needs a variable");
}

std::optional<std::size_t> Ring::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int Ring::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) d += m.exps[i] * weights_[i];
  return d;
}

int Ring::compare_graded_lex(const Monomial& a, const Monomial& b, std::size_t from) const {
  int da = 0, db = 0;
  for (std::size_t i = from; i < a.nvars(); ++i) {
    da += a.exps[i] * weights_[i];
    db += b.exps[i] * weights_[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = from; i < a.nvars(); ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  return 0;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  if (order_ == MonomialOrder::EliminateFirst) {
    if (a.exps[0] != b.exps[0]) return a.exps[0] < b.exps[0] ? -1 : 1;
    return compare_graded_lex(a, b, 1);
  }
  return compare_graded_lex(a, b, 0);
}

Polynomial Ring::constant(Scalar c) const {
  if (c == 0) return {};
  return Polynomial({Term{one(), c}});
}

Polynomial Ring::variable(std::size_t i) const {
  Monomial m(nvars());
  m.exps.at(i) = 1;
  return Polynomial({Term{std::move(m), 1}});
}

Polynomial Ring::monomial(Monomial m, Scalar c) const {
  assert(m.nvars() == nvars());
  if (c == 0) return {};
  return Polynomial({Term{std::move(m), c}});
}

Polynomial Ring::from_terms(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(),
            [this](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Ring::add(const Polynomial& a, const Polynomial& b) const {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const int c = compare(x[i].mono, y[j].mono);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(y[j++]);
    } else {
      const Scalar s = field_.add(x[i].coeff, y[j].coeff);
      if (s != 0) out.push_back(Term{x[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) out.push_back(x[i]);
  for (; j < y.size(); ++j) out.push_back(y[j]);
  return Polynomial(std::move(out));
}

Polynomial Ring::neg(const Polynomial& a) const { return scale(a, field_.neg(1)); }

Polynomial Ring::sub(const Polynomial& a, const Polynomial& b) const { return add(a, neg(b)); }

Polynomial Ring::scale(const Polynomial& a, Scalar c) const {
  if (c == 0) return {};
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = field_.mul(t.coeff, c);
  return Polynomial(std::move(out));
}

Polynomial Ring::mul_term(const Polynomial& a, Scalar c, const Monomial& m) const {
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(a.size());
  // Multiplying by a monomial preserves the order of the terms.
  for (const auto& t : a.terms()) out.push_back(Term{t.mono * m, field_.mul(t.coeff, c)});
  return Polynomial(std::move(out));
}

Polynomial Ring::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> all;
  all.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      all.push_back(Term{s.mono * t.mono, field_.mul(s.coeff, t.coeff)});
  return from_terms(std::move(all));
}

Polynomial Ring::pow(const Polynomial& a, int e) const {
  if (e < 0) throw std::invalid_argument("Ring::pow: negative exponent");
  Polynomial result = constant(1);
  Polynomial base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Polynomial Ring::make_monic(const Polynomial& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(a.leading().coeff));
}

bool Ring::is_homogeneous(const Polynomial& f) const {
  if (f.is_zero()) return true;
  const int d = degree(f.leading().mono);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Term& t) { return degree(t.mono) == d; });
}

std::optional<int> Ring::degree(const Polynomial& f) const {
  if (f.is_zero() || !is_homogeneous(f)) return std::nullopt;
  return degree(f.leading().mono);
}

std::string Ring::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m.exps[i] > 1) out += '^' + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Ring::format(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = field_.to_signed(t.coeff);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    first = false;
    if (t.mono.is_one()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + '*';
      out += format(t.mono);
    }
  }
  return out;
}

Ring Ring::with_elimination_variable(std::string name, int weight) const {
  std::vector<std::string> names{std::move(name)};
  names.insert(names.end(), names_.begin(), names_.end());
  std::vector<int> weights{weight};
  weights.insert(weights.end(), weights_.begin(), weights_.end());
  return Ring(field_, std::move(names), std::move(weights), MonomialOrder::EliminateFirst);
}

Polynomial Ring::embed_after_first(const Ring& target, const Polynomial& f) const {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target.nvars());
    std::copy(t.mono.exps.begin(), t.mono.exps.end(), m.exps.begin() + 1);
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return target.from_terms(std::move(terms));
}

Polynomial Ring::restrict_from_first(const Ring& source, const Polynomial& f) const {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.mono.exps[0] != 0)
      throw std::invalid_argument("restrict_from_first: polynomial involves variable 0");
    terms.push_back(Term{Monomial(std::vector<int>(t.mono.exps.begin() + 1, t.mono.exps.end())),
                         t.coeff});
  }
  (void)source;
  return from_terms(std::move(terms));
}

}  // namespace cechkit
