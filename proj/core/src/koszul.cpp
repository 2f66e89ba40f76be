#include "cechkit/koszul.hpp"

#include <stdexcept>

#include "cechkit/errors.hpp"

namespace cechkit {

Sequence::Sequence(const GradedRing& ring, std::vector<Polynomial> elements) {
  if (elements.empty()) throw Error("a sequence needs at least one element");
  for (auto& e : elements) {
    e = ring.normal_form(e);
    const auto d = ring.base().degree(e);
    if (!d) throw NonHomogeneous("sequence element " + ring.base().format(e) + " is not homogeneous");
    if (e.is_zero() || *d <= 0)
      throw NonHomogeneous("sequence element " + ring.base().format(e) + " must have positive degree");
    degrees_.push_back(*d);
  }
  elements_ = std::move(elements);
}

bool Sequence::is_monomial() const {
  for (const auto& e : elements_)
    if (!e.is_monomial()) return false;
  return true;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t r, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > r) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == r - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int wedge_sign(std::size_t j, std::span<const std::size_t> subset) {
  std::size_t before = 0;
  for (std::size_t k : subset)
    if (k < j) ++before;
  return before % 2 == 0 ? 1 : -1;
}

namespace {

std::size_t position(const std::vector<std::vector<std::size_t>>& sets,
                     const std::vector<std::size_t>& s) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i] == s) return i;
  throw std::logic_error("subset not found");
}

std::vector<Polynomial> powers(const GradedRing& ring, const Sequence& a, int n) {
  if (n < 1) throw Error("Koszul level must be at least 1");
  std::vector<Polynomial> out;
  for (const auto& e : a.elements()) out.push_back(ring.pow(e, n));
  return out;
}

Polynomial subset_product(const GradedRing& ring, const std::vector<Polynomial>& elements,
                          const std::vector<std::size_t>& subset) {
  Polynomial p = ring.base().constant(1);
  for (std::size_t j : subset) p = ring.mul(p, elements[j]);
  return p;
}

std::vector<PolyMatrix> diagonal_transition(const GradedRing& ring, const Sequence& a, int n,
                                            int m) {
  if (n < 1 || m < n) throw Error("transition needs m ≥ n ≥ 1");
  const auto lifts = powers(ring, a, m - n == 0 ? 1 : m - n);
  std::vector<PolyMatrix> comps;
  for (std::size_t k = 0; k <= a.size(); ++k) {
    const auto sets = subsets_of_size(a.size(), k);
    PolyMatrix d(sets.size(), sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
      d(i, i) = m == n ? ring.base().constant(1) : subset_product(ring, lifts, sets[i]);
    comps.push_back(std::move(d));
  }
  return comps;
}

}  // namespace

GradedFreeComplex koszul_chain(const GradedRing& ring, std::span<const Polynomial> elements,
                               std::span<const int> degrees) {
  const std::size_t r = elements.size();
  if (degrees.size() != r) throw Error("one degree per Koszul element is required");
  std::vector<std::vector<std::vector<std::size_t>>> sets;
  std::vector<GradedFreeModule> spots;
  for (std::size_t k = 0; k <= r; ++k) {
    sets.push_back(subsets_of_size(r, k));
    GradedFreeModule m;
    for (const auto& s : sets.back()) {
      int deg = 0;
      for (std::size_t j : s) deg += degrees[j];
      m.degrees.push_back(deg);
    }
    spots.push_back(std::move(m));
  }
  std::vector<PolyMatrix> links;
  for (std::size_t k = 1; k <= r; ++k) {
    PolyMatrix d(sets[k - 1].size(), sets[k].size());
    for (std::size_t c = 0; c < sets[k].size(); ++c) {
      const auto& J = sets[k][c];
      for (std::size_t j : J) {
        std::vector<std::size_t> rest;
        for (std::size_t x : J)
          if (x != j) rest.push_back(x);
        const Polynomial& e = elements[j];
        d(position(sets[k - 1], rest), c) =
            wedge_sign(j, J) > 0 ? e : ring.base().neg(e);
      }
    }
    links.push_back(std::move(d));
  }
  return GradedFreeComplex(ring, Direction::Chain, 0, std::move(spots), std::move(links));
}

GradedFreeComplex koszul_chain(const GradedRing& ring, const Sequence& a, int n) {
  const auto p = powers(ring, a, n);
  std::vector<int> degrees;
  for (int d : a.degrees()) degrees.push_back(n * d);
  return koszul_chain(ring, p, degrees);
}

GradedFreeComplex koszul_cochain(const GradedRing& ring, const Sequence& a, int n) {
  return koszul_chain(ring, a, n).dual(ring);
}

ChainMap chain_transition(const GradedRing& ring, const Sequence& a, int n, int m) {
  return ChainMap(ring, koszul_chain(ring, a, m), koszul_chain(ring, a, n),
                  diagonal_transition(ring, a, n, m));
}

ChainMap cochain_transition(const GradedRing& ring, const Sequence& a, int n, int m) {
  return ChainMap(ring, koszul_cochain(ring, a, n), koszul_cochain(ring, a, m),
                  diagonal_transition(ring, a, n, m));
}

KoszulTower::KoszulTower(GradedRing ring, Sequence a, Direction direction)
    : ring_(std::move(ring)), sequence_(std::move(a)), direction_(direction) {}

const GradedFreeComplex& KoszulTower::level(int n) const {
  std::lock_guard lock(mutex_);
  auto& slot = levels_[n];
  if (!slot)
    slot = std::make_unique<GradedFreeComplex>(direction_ == Direction::Chain
                                                   ? koszul_chain(ring_, sequence_, n)
                                                   : koszul_cochain(ring_, sequence_, n));
  return *slot;
}

const ChainMap& KoszulTower::step(int n) const {
  {
    std::lock_guard lock(mutex_);
    auto it = steps_.find(n);
    if (it != steps_.end()) return *it->second;
  }
  auto map = std::make_unique<ChainMap>(direction_ == Direction::Chain
                                            ? chain_transition(ring_, sequence_, n, n + 1)
                                            : cochain_transition(ring_, sequence_, n, n + 1));
  std::lock_guard lock(mutex_);
  auto& slot = steps_[n];
  if (!slot) slot = std::move(map);
  return *slot;
}

}  // namespace cechkit
