#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cechkit/colimit.hpp"
#include "cechkit/torsion.hpp"
#include "cechkit/wpr.hpp"

namespace cechkit {

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

struct CrosscheckParams {
  ColimitParams colimit;
  std::vector<int> n_list{1, 2, 3};
  int m_max = 8;
  /// Defaults to default_degree_bound(a, m_max, max generator degree of M).
  std::optional<int> degree_bound;
};

/// One table cell where the two sides differ in dimension or certification.
/// `against` is "localcoh" (Ext colimit) or "gamma" (torsion, spot 0).
struct TableDiff {
  std::string against;
  int spot = 0;
  int degree = 0;
  std::size_t cech_dim = 0;
  std::size_t other_dim = 0;
  bool cech_certified = false;
  bool other_certified = false;
};

struct CrosscheckReport {
  Verdict verdict = Verdict::Inconclusive;
  WprReport wpr;
  std::vector<ColimitReport> cech;
  /// Empty for non-monomial sequences.
  std::vector<ColimitReport> local;
  TorsionReport gamma;
  std::vector<TableDiff> diffs;
  std::vector<std::string> notes;
};

/// Runs the weak-proregularity search, the Čech colimit and (for monomial
/// sequences) the Ext colimit on every spot, plus Γ_I against Ȟ⁰.
///   Fail          some cell certified on both sides disagrees;
///   Inconclusive  otherwise, if the witness search or any stabilization
///                 ran out of bounds;
///   Pass          otherwise.
CrosscheckReport theorem_crosscheck(const GradedRing& ring, const Sequence& a,
                                    const FPGradedModule& module, const CrosscheckParams& params);

}  // namespace cechkit
