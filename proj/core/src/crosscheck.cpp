#include "cechkit/crosscheck.hpp"

#include "cechkit/taylor.hpp"

namespace cechkit {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

CrosscheckReport theorem_crosscheck(const GradedRing& ring, const Sequence& a,
                                    const FPGradedModule& module, const CrosscheckParams& params) {
  const ColimitParams& cp = params.colimit;
  CrosscheckReport report;
  const int bound = params.degree_bound.value_or(
      default_degree_bound(a, params.m_max, module.max_generator_degree()));
  report.wpr = is_weakly_proregular(ring, a, params.n_list, params.m_max, bound, cp.threads);
  report.cech = cech_cohomology(ring, a, module, cp);
  if (a.is_monomial()) {
    report.local = ext_colimit_local_cohomology(ring, a, module, cp);
  } else {
    report.notes.push_back("non-monomial sequence: Ext colimit skipped, only Γ is compared");
  }
  report.gamma =
      gamma_torsion(ring, module, a.elements(), cp.degree_lo, cp.degree_hi, cp.n_max, cp.threads);

  bool disagree = false;
  bool open = !report.wpr.certified();
  if (open) report.notes.push_back("witness search exhausted its bounds");

  for (std::size_t i = 0; i < report.local.size(); ++i) {
    for (std::size_t k = 0; k < report.cech[i].entries.size(); ++k) {
      const ColimitEntry& c = report.cech[i].entries[k];
      const ColimitEntry& l = report.local[i].entries[k];
      if (!c.certified || !l.certified) open = true;
      if (c.stabilized_dim == l.stabilized_dim && c.certified == l.certified) continue;
      if (c.certified && l.certified) disagree = true;
      report.diffs.push_back({"localcoh", static_cast<int>(i), c.degree, c.stabilized_dim,
                              l.stabilized_dim, c.certified, l.certified});
    }
  }
  for (std::size_t k = 0; k < report.gamma.entries.size(); ++k) {
    const ColimitEntry& c = report.cech[0].entries[k];
    const TorsionEntry& g = report.gamma.entries[k];
    if (!c.certified || !g.stabilized) open = true;
    if (c.stabilized_dim == g.stabilized_dim && c.certified == g.stabilized) continue;
    if (c.certified && g.stabilized) disagree = true;
    report.diffs.push_back({"gamma", 0, c.degree, c.stabilized_dim, g.stabilized_dim, c.certified,
                            g.stabilized});
  }
  if (!report.cech.empty())
    for (const auto& table : report.cech)
      if (!table.all_certified()) open = true;

  report.verdict = disagree ? Verdict::Fail : open ? Verdict::Inconclusive : Verdict::Pass;
  return report;
}

}  // namespace cechkit
