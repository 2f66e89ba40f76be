#include "cechkit/complex.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "cechkit/errors.hpp"

namespace cechkit {

int SpotLayout::out_link(int i) const {
  if (!has_spot(i) || !has_spot(i + step(direction))) return -1;
  return direction == Direction::Chain ? i - lo - 1 : i - lo;
}

int SpotLayout::in_link(int i) const {
  if (!has_spot(i) || !has_spot(i - step(direction))) return -1;
  return direction == Direction::Chain ? i - lo : i - lo - 1;
}

GradedFreeComplex::GradedFreeComplex(const GradedRing& ring, Direction direction, int lo,
                                     std::vector<GradedFreeModule> spots,
                                     std::vector<PolyMatrix> links)
    : layout_{direction, lo, spots.size()}, spots_(std::move(spots)), links_(std::move(links)) {
  if (spots_.empty()) throw NotAComplex("complex needs at least one spot");
  if (links_.size() + 1 != spots_.size())
    throw NotAComplex("complex with " + std::to_string(spots_.size()) + " spots needs " +
                      std::to_string(spots_.size() - 1) + " differentials");
  for (int i = lo; i <= hi(); ++i) {
    const int k = layout_.out_link(i);
    if (k < 0) continue;
    check_homogeneous_map(ring, links_[k], spot(i), spot(i + step(direction)));
  }
  for (int i = lo; i <= hi(); ++i) {
    const PolyMatrix* first = out(i);
    if (first == nullptr) continue;
    const PolyMatrix* second = out(i + step(direction));
    if (second == nullptr) continue;
    if (!multiply(ring, *second, *first).is_zero())
      throw NotAComplex("d∘d ≠ 0 at spot " + std::to_string(i));
  }
}

const PolyMatrix* GradedFreeComplex::out(int i) const {
  const int k = layout_.out_link(i);
  return k < 0 ? nullptr : &links_[k];
}

const PolyMatrix* GradedFreeComplex::in(int i) const {
  const int k = layout_.in_link(i);
  return k < 0 ? nullptr : &links_[k];
}

GradedFreeComplex GradedFreeComplex::dual(const GradedRing& ring) const {
  std::vector<GradedFreeModule> spots;
  spots.reserve(spots_.size());
  for (const auto& s : spots_) spots.push_back(s.dual());
  std::vector<PolyMatrix> links;
  links.reserve(links_.size());
  for (const auto& l : links_) links.push_back(l.transpose());
  return GradedFreeComplex(ring, opposite(direction()), lo(), std::move(spots), std::move(links));
}

FPGradedModule::FPGradedModule(const GradedRing& ring, GradedFreeModule ambient,
                               const PolyMatrix& relations)
    : ambient_(std::move(ambient)) {
  if (relations.cols() != 0 && relations.rows() != ambient_.rank())
    throw std::invalid_argument("FPGradedModule: relation rows must match the ambient rank");
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < relations.cols(); ++c) {
    std::optional<int> degree;
    for (std::size_t r = 0; r < relations.rows(); ++r) {
      const Polynomial& f = relations(r, c);
      if (f.is_zero()) continue;
      const auto e = ring.base().degree(f);
      if (!e)
        throw NonHomogeneous("relation entry " + ring.base().format(f) + " is not homogeneous");
      const int col_degree = *e + ambient_.degrees[r];
      if (degree && *degree != col_degree)
        throw NonHomogeneous("relation column " + std::to_string(c) +
                             " mixes internal degrees " + std::to_string(*degree) + " and " +
                             std::to_string(col_degree));
      degree = col_degree;
    }
    if (!degree) continue;
    kept.push_back(c);
    relation_degrees_.degrees.push_back(*degree);
  }
  relations_ = PolyMatrix(ambient_.rank(), kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t r = 0; r < ambient_.rank(); ++r)
      relations_(r, k) = ring.normal_form(relations(r, kept[k]));
}

FPGradedModule FPGradedModule::free(GradedFreeModule ambient) {
  FPGradedModule m;
  m.relations_ = PolyMatrix(ambient.rank(), 0);
  m.ambient_ = std::move(ambient);
  return m;
}

FPGradedModule FPGradedModule::cyclic(const GradedRing& ring,
                                      const std::vector<Polynomial>& ideal,
                                      int generator_degree) {
  PolyMatrix rel(1, ideal.size());
  for (std::size_t k = 0; k < ideal.size(); ++k) rel(0, k) = ideal[k];
  return FPGradedModule(ring, GradedFreeModule{{generator_degree}}, rel);
}

int FPGradedModule::max_generator_degree() const {
  if (ambient_.degrees.empty()) return 0;
  return *std::max_element(ambient_.degrees.begin(), ambient_.degrees.end());
}

int FPGradedModule::min_generator_degree() const {
  if (ambient_.degrees.empty()) return 0;
  return *std::min_element(ambient_.degrees.begin(), ambient_.degrees.end());
}

FPGradedModule FPGradedModule::direct_sum(const FPGradedModule& other) const {
  FPGradedModule out;
  out.ambient_.degrees = ambient_.degrees;
  out.ambient_.degrees.insert(out.ambient_.degrees.end(), other.ambient_.degrees.begin(),
                              other.ambient_.degrees.end());
  out.relation_degrees_.degrees = relation_degrees_.degrees;
  out.relation_degrees_.degrees.insert(out.relation_degrees_.degrees.end(),
                                       other.relation_degrees_.degrees.begin(),
                                       other.relation_degrees_.degrees.end());
  out.relations_ = PolyMatrix(out.ambient_.rank(), out.relation_degrees_.rank());
  for (std::size_t r = 0; r < relations_.rows(); ++r)
    for (std::size_t c = 0; c < relations_.cols(); ++c) out.relations_(r, c) = relations_(r, c);
  for (std::size_t r = 0; r < other.relations_.rows(); ++r)
    for (std::size_t c = 0; c < other.relations_.cols(); ++c)
      out.relations_(ambient_.rank() + r, relations_.cols() + c) = other.relations_(r, c);
  return out;
}

FPGradedModule FPGradedModule::over_polynomial_ring(const GradedRing& ring) const {
  if (!ring.has_quotient()) return *this;
  const auto& q = ring.quotient().groebner();
  const std::size_t extra = q.size() * ambient_.rank();
  PolyMatrix rel(ambient_.rank(), relations_.cols() + extra);
  for (std::size_t r = 0; r < relations_.rows(); ++r)
    for (std::size_t c = 0; c < relations_.cols(); ++c) rel(r, c) = relations_(r, c);
  std::size_t c = relations_.cols();
  for (std::size_t k = 0; k < ambient_.rank(); ++k)
    for (const auto& g : q) rel(k, c++) = g;
  return FPGradedModule(ring.without_quotient(), ambient_, rel);
}

ChainMap::ChainMap(const GradedRing& ring, const GradedFreeComplex& source,
                   const GradedFreeComplex& target, std::vector<PolyMatrix> components,
                   int degree)
    : lo_(source.lo()), degree_(degree), components_(std::move(components)) {
  if (source.lo() != target.lo() || source.hi() != target.hi() ||
      source.direction() != target.direction())
    throw NotAComplex("chain map between complexes of different shapes");
  if (components_.size() != source.spots().size())
    throw NotAComplex("chain map needs one component per spot");
  for (int i = source.lo(); i <= source.hi(); ++i)
    check_homogeneous_map(ring, component(i), source.spot(i), target.spot(i), degree);
  for (int i = source.lo(); i <= source.hi(); ++i) {
    const PolyMatrix* d_src = source.out(i);
    if (d_src == nullptr) continue;
    const int j = i + step(source.direction());
    const PolyMatrix lhs = multiply(ring, component(j), *d_src);
    const PolyMatrix rhs = multiply(ring, *target.out(i), component(i));
    if (!(lhs == rhs))
      throw NotAComplex("chain map does not commute with the differential at spot " +
                        std::to_string(i));
  }
}

ChainMap dual(const GradedRing& ring, const ChainMap& t, const GradedFreeComplex& source,
              const GradedFreeComplex& target) {
  std::vector<PolyMatrix> comps;
  comps.reserve(t.components().size());
  for (const auto& c : t.components()) comps.push_back(c.transpose());
  return ChainMap(ring, target.dual(ring), source.dual(ring), std::move(comps), t.degree());
}

const PolyMatrix* FPComplex::out(int i) const {
  const int k = layout.out_link(i);
  return k < 0 ? nullptr : &links[k];
}

FPComplex tensor(const GradedRing& ring, const GradedFreeComplex& complex,
                 const FPGradedModule& module) {
  FPComplex out;
  out.layout = complex.layout();
  const std::size_t g0 = module.ambient().rank();
  for (const auto& spot : complex.spots()) {
    GradedFreeModule ambient;
    for (int gi : spot.degrees)
      for (int hk : module.ambient().degrees) ambient.degrees.push_back(gi + hk);
    PolyMatrix rel = identity_kron(spot.rank(), module.relations());
    out.spots.push_back(FPGradedModule(ring, std::move(ambient), rel));
  }
  for (const auto& link : complex.links()) out.links.push_back(kron_identity(link, g0));
  return out;
}

FPComplexMap tensor(const ChainMap& t, const FPGradedModule& module) {
  FPComplexMap out{t.lo(), t.degree(), {}};
  for (const auto& c : t.components())
    out.components.push_back(kron_identity(c, module.ambient().rank()));
  return out;
}

FPComplexMap tensor(const GradedFreeComplex& complex, const PolyMatrix& f, int degree) {
  FPComplexMap out{complex.lo(), degree, {}};
  for (const auto& spot : complex.spots()) out.components.push_back(identity_kron(spot.rank(), f));
  return out;
}

}  // namespace cechkit
