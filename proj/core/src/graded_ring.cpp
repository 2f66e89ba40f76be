#include "cechkit/graded_ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cechkit/errors.hpp"

namespace cechkit {

struct GradedRing::Cache {
  std::mutex mutex;
  std::map<int, std::shared_ptr<const DegreePiece>> pieces;
  std::unordered_map<Monomial, Polynomial, MonomialHash> normal_forms;
};

namespace {

void enumerate(const Ring& ring, std::size_t var, int remaining, Monomial& current,
               std::vector<Monomial>& out) {
  if (var + 1 == ring.nvars()) {
    const int w = ring.weights()[var];
    if (remaining % w == 0) {
      current.exps[var] = remaining / w;
      out.push_back(current);
      current.exps[var] = 0;
    }
    return;
  }
  const int w = ring.weights()[var];
  for (int e = 0; e * w <= remaining; ++e) {
    current.exps[var] = e;
    enumerate(ring, var + 1, remaining - e * w, current, out);
  }
  current.exps[var] = 0;
}

}  // namespace

GradedRing::GradedRing(Ring base, std::vector<Polynomial> quotient_generators)
    : base_(std::move(base)), cache_(std::make_shared<Cache>()) {
  if (base_.order() != MonomialOrder::GradedLex)
    throw std::invalid_argument("GradedRing: base ring must use the graded-lex order");
  for (const auto& q : quotient_generators)
    if (!base_.is_homogeneous(q))
      throw NonHomogeneous("quotient generator " + base_.format(q) + " is not homogeneous");
  quotient_ = buchberger(base_, std::move(quotient_generators));
  monomial_quotient_ = quotient_.is_monomial();
}

const Polynomial& GradedRing::monomial_normal_form(const Monomial& m) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->normal_forms.find(m);
  if (it != cache_->normal_forms.end()) return it->second;
  Polynomial nf = cechkit::normal_form(base_, base_.monomial(m), quotient_);
  // unordered_map never invalidates references to elements on insert.
  return cache_->normal_forms.emplace(m, std::move(nf)).first->second;
}

Polynomial GradedRing::normal_form(const Polynomial& f) const {
  if (!has_quotient()) return f;
  return cechkit::normal_form(base_, f, quotient_);
}

Polynomial GradedRing::mul(const Polynomial& a, const Polynomial& b) const {
  return normal_form(base_.mul(a, b));
}

Polynomial GradedRing::pow(const Polynomial& a, int e) const {
  if (e < 0) throw std::invalid_argument("GradedRing::pow: negative exponent");
  Polynomial result = normal_form(base_.constant(1));
  for (int i = 0; i < e; ++i) result = mul(result, a);
  return result;
}

std::shared_ptr<const DegreePiece> GradedRing::degree_piece(int d) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->pieces.find(d);
    if (it != cache_->pieces.end()) return it->second;
  }
  auto piece = std::make_shared<DegreePiece>();
  piece->degree = d;
  if (d >= 0 && base_.nvars() > 0) {
    std::vector<Monomial> all;
    Monomial scratch(base_.nvars());
    enumerate(base_, 0, d, scratch, all);
    std::sort(all.begin(), all.end(),
              [&](const Monomial& a, const Monomial& b) { return base_.compare(a, b) > 0; });
    for (auto& m : all) {
      const bool standard = std::none_of(
          quotient_.groebner().begin(), quotient_.groebner().end(),
          [&](const Polynomial& g) { return divides(g.leading().mono, m); });
      if (standard) piece->basis.push_back(std::move(m));
    }
  } else if (d == 0 && !quotient_.is_unit()) {
    piece->basis.push_back(base_.one());
  }
  if (quotient_.is_unit()) piece->basis.clear();
  for (std::size_t i = 0; i < piece->basis.size(); ++i) piece->index.emplace(piece->basis[i], i);

  std::lock_guard lock(cache_->mutex);
  return cache_->pieces.emplace(d, std::move(piece)).first->second;
}

void GradedRing::accumulate(const Polynomial& f, const Monomial& m, Scalar c,
                            const DegreePiece& target, Mat& out, std::size_t row_offset,
                            std::size_t col) const {
  const auto& field = base_.field();
  auto place = [&](const Monomial& mono, Scalar coeff) {
    auto row = target.find(mono);
    if (!row)
      throw NonHomogeneous("term " + base_.format(mono) + " does not lie in degree " +
                           std::to_string(target.degree));
    Scalar& slot = out(row_offset + *row, col);
    slot = field.add(slot, coeff);
  };
  for (const auto& t : f.terms()) {
    const Scalar coeff = field.mul(c, t.coeff);
    const Monomial product = t.mono * m;
    if (!has_quotient()) {
      place(product, coeff);
      continue;
    }
    if (monomial_quotient_) {
      if (base_.degree(product) != target.degree)
        throw NonHomogeneous("term " + base_.format(product) + " does not lie in degree " +
                             std::to_string(target.degree));
      if (target.find(product)) place(product, coeff);
      continue;
    }
    for (const auto& r : monomial_normal_form(product).terms())
      place(r.mono, field.mul(coeff, r.coeff));
  }
}

Mat GradedRing::mult_matrix(const Polynomial& f, int d) const {
  const auto e = base_.degree(f);
  if (!f.is_zero() && !e) throw NonHomogeneous("mult_matrix: " + base_.format(f));
  const auto src = degree_piece(d);
  if (f.is_zero()) return Mat(0, src->dim());
  const auto dst = degree_piece(d + *e);
  Mat out(dst->dim(), src->dim());
  for (std::size_t c = 0; c < src->dim(); ++c) accumulate(f, src->basis[c], 1, *dst, out, 0, c);
  return out;
}

}  // namespace cechkit
