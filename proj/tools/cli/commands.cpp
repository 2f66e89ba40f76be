#include "commands.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "cechkit/crosscheck.hpp"
#include "cechkit/les.hpp"
#include "cechkit/parallel.hpp"
#include "cechkit/proregular.hpp"
#include "cechkit/taylor.hpp"
#include "cechkit/torsion.hpp"
#include "cechkit/wpr.hpp"

namespace cechkit::cli {

using nlohmann::json;

namespace {

struct Column {
  std::string header;
  std::vector<std::string> cells;
};

std::string grid(const std::vector<int>& degrees, const std::vector<Column>& columns) {
  std::vector<std::size_t> widths{6};
  for (const auto& c : columns) {
    std::size_t w = c.header.size();
    for (const auto& cell : c.cells) w = std::max(w, cell.size());
    widths.push_back(w);
  }
  std::ostringstream out;
  out << std::setw(static_cast<int>(widths[0])) << "degree";
  for (std::size_t k = 0; k < columns.size(); ++k)
    out << "  " << std::setw(static_cast<int>(widths[k + 1])) << columns[k].header;
  out << "\n";
  for (std::size_t r = 0; r < degrees.size(); ++r) {
    out << std::setw(static_cast<int>(widths[0])) << degrees[r];
    for (std::size_t k = 0; k < columns.size(); ++k)
      out << "  " << std::setw(static_cast<int>(widths[k + 1])) << columns[k].cells[r];
    out << "\n";
  }
  return out.str();
}

std::vector<int> window(const ProblemConfig& c) {
  std::vector<int> out;
  for (int d = c.degree_lo; d <= c.degree_hi; ++d) out.push_back(d);
  return out;
}

std::vector<int> spots(const ProblemConfig& c, const Sequence& a) {
  if (c.spot) {
    if (*c.spot < 0 || *c.spot > static_cast<int>(a.size()))
      throw Error("spot " + std::to_string(*c.spot) + " outside 0.." + std::to_string(a.size()));
    return {*c.spot};
  }
  std::vector<int> out;
  for (int i = 0; i <= static_cast<int>(a.size()); ++i) out.push_back(i);
  return out;
}

ColimitParams colimit_params(const ProblemConfig& c, unsigned threads) {
  ColimitParams p;
  p.degree_lo = c.degree_lo;
  p.degree_hi = c.degree_hi;
  p.n_max = c.n_max;
  p.window = c.window;
  p.threads = threads;
  return p;
}

json colimit_json(const std::string& name, const ColimitReport& r) {
  json rows = json::array();
  for (const auto& e : r.entries)
    rows.push_back({{"degree", e.degree},
                    {"dim", e.stabilized_dim},
                    {"certified", e.certified},
                    {"stabilization_level", e.stabilization_level},
                    {"level_dims", e.level_dims},
                    {"ranks", e.ranks}});
  return {{"name", name}, {"spot", r.spot}, {"rows", rows}};
}

Column colimit_column(const std::string& header, const ColimitReport& r) {
  Column c{header, {}};
  for (const auto& e : r.entries)
    c.cells.push_back(std::to_string(e.stabilized_dim) + (e.certified ? "" : "*"));
  return c;
}

json stabilization_json(const ProblemConfig& c, bool certified) {
  return {{"n_max", c.n_max}, {"window", c.window}, {"all_certified", certified}};
}

std::string header(const std::string& command, const ProblemConfig& c) {
  std::string a;
  for (std::size_t i = 0; i < c.sequence.size(); ++i) a += (i ? ", " : "") + c.sequence[i];
  return "# " + command + "  a = (" + a + ")  p = " + std::to_string(c.prime) + "\n";
}

std::string witness_text(const std::optional<int>& m) { return m ? std::to_string(*m) : "-"; }

json witnesses_json(const std::vector<WprIndexReport>& indices) {
  json out = json::array();
  for (const auto& idx : indices) {
    json ws = json::array();
    for (const auto& w : idx.witnesses) ws.push_back({{"n", w.n}, {"m", w.m ? json(*w.m) : json(nullptr)}});
    out.push_back({{"index", idx.index}, {"witnesses", ws}});
  }
  return out;
}

std::string witnesses_table(const std::vector<WprIndexReport>& indices, const std::vector<int>& n_list) {
  std::ostringstream out;
  out << "index";
  for (int n : n_list) out << "  n=" << n;
  out << "\n";
  for (const auto& idx : indices) {
    out << std::setw(5) << idx.index;
    for (std::size_t k = 0; k < idx.witnesses.size(); ++k)
      out << "  " << std::setw(static_cast<int>(std::to_string(n_list[k]).size() + 2))
          << witness_text(idx.witnesses[k].m);
    out << "\n";
  }
  return out.str();
}

int wpr_bound(const ProblemConfig& c, const Problem& p) {
  return c.degree_bound.value_or(
      default_degree_bound(p.sequence, c.m_max, p.module.max_generator_degree()));
}

CommandResult koszul_homology(const ProblemConfig& c, const Problem& p, unsigned threads) {
  const FPComplex complex = tensor(p.ring, koszul_chain(p.ring, p.sequence, c.n), p.module);
  const auto degrees = window(c);
  const auto which = spots(c, p.sequence);
  std::vector<std::vector<std::size_t>> dims(degrees.size());
  parallel_for(degrees.size(), threads, [&](std::size_t k) {
    const DegreeSlice slice(p.ring, complex, degrees[k]);
    for (int i : which) dims[k].push_back(slice.homology(p.ring.field(), i).dim());
  });
  CommandResult r;
  json tables = json::array();
  std::vector<Column> cols;
  for (std::size_t s = 0; s < which.size(); ++s) {
    json rows = json::array();
    Column col{"H_" + std::to_string(which[s]), {}};
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      rows.push_back({{"degree", degrees[k]}, {"dim", dims[k][s]}});
      col.cells.push_back(std::to_string(dims[k][s]));
    }
    tables.push_back({{"name", "koszul_homology"}, {"spot", which[s]}, {"rows", rows}});
    cols.push_back(std::move(col));
  }
  r.report["tables"] = tables;
  r.report["stabilization"] = {{"level", c.n}};
  r.report["verdict"] = "COMPLETE";
  r.table = header("koszul-homology", c) + "# H_i(K(a^" + std::to_string(c.n) + ") ⊗ M)\n" +
            grid(degrees, cols) + "verdict: COMPLETE\n";
  return r;
}

CommandResult colimit_command(const std::string& name, const ProblemConfig& c, const Problem& p,
                              unsigned threads) {
  const ColimitParams params = colimit_params(c, threads);
  std::vector<ColimitReport> reports;
  for (int i : spots(c, p.sequence))
    reports.push_back(name == "cech" ? cech_cohomology(p.ring, p.sequence, p.module, i, params)
                                     : ext_colimit_local_cohomology(p.ring, p.sequence, p.module, i, params));
  CommandResult r;
  json tables = json::array();
  std::vector<Column> cols;
  bool certified = true;
  for (const auto& rep : reports) {
    tables.push_back(colimit_json(name, rep));
    cols.push_back(colimit_column("H^" + std::to_string(rep.spot), rep));
    certified = certified && rep.all_certified();
  }
  const std::string verdict = certified ? "COMPLETE" : "INCONCLUSIVE";
  r.report["tables"] = tables;
  r.report["stabilization"] = stabilization_json(c, certified);
  r.report["verdict"] = verdict;
  r.exit_code = certified ? kComplete : kInconclusive;
  r.table = header(name, c) + grid(window(c), cols) + "(* = not certified: n_max " +
            std::to_string(c.n_max) + ", window " + std::to_string(c.window) + ")\nverdict: " +
            verdict + "\n";
  return r;
}

CommandResult gamma_command(const ProblemConfig& c, const Problem& p, unsigned threads) {
  const TorsionReport t = gamma_torsion(p.ring, p.module, p.sequence.elements(), c.degree_lo,
                                        c.degree_hi, c.n_max, threads);
  CommandResult r;
  json rows = json::array();
  Column col{"Gamma", {}};
  bool stable = true;
  for (const auto& e : t.entries) {
    rows.push_back({{"degree", e.degree}, {"dim", e.stabilized_dim}, {"stabilized", e.stabilized}, {"level_dims", e.dims}});
    col.cells.push_back(std::to_string(e.stabilized_dim) + (e.stabilized ? "" : "*"));
    stable = stable && e.stabilized;
  }
  const std::string verdict = stable ? "COMPLETE" : "INCONCLUSIVE";
  r.report["tables"] = json::array({{{"name", "gamma"}, {"spot", 0}, {"rows", rows}}});
  r.report["stabilization"] = stabilization_json(c, stable);
  r.report["verdict"] = verdict;
  r.exit_code = stable ? kComplete : kInconclusive;
  r.table = header("gamma", c) + grid(window(c), {col}) + "(* = kernel chain still growing at n_max)\nverdict: " + verdict + "\n";
  return r;
}

CommandResult wpr_command(const ProblemConfig& c, const Problem& p, unsigned threads) {
  const WprReport w = is_weakly_proregular(p.ring, p.sequence, c.n_list, c.m_max, wpr_bound(c, p), threads);
  CommandResult r;
  const std::string verdict = w.certified() ? "CERTIFIED_UP_TO_DEGREE" : "FAILED_WITHIN_BOUNDS";
  r.report["tables"] = json::array({{{"name", "wpr_witnesses"}, {"rows", witnesses_json(w.indices)}}});
  r.report["stabilization"] = {{"degree_bound", w.degree_bound}, {"m_max", w.m_max}};
  r.report["verdict"] = verdict;
  r.exit_code = w.certified() ? kComplete : kInconclusive;
  r.table = header("check-wpr", c) + "# witnesses m (H_i(a^m) -> H_i(a^n) zero in degrees <= " +
            std::to_string(w.degree_bound) + ")\n" + witnesses_table(w.indices, c.n_list) +
            "verdict: " + verdict + (w.certified() ? "(" + std::to_string(w.degree_bound) + ")" : "") + "\n";
  return r;
}

CommandResult proregular_command(const ProblemConfig& c, const Problem& p, unsigned threads) {
  const ProregularReport pr = is_proregular(p.ring, p.sequence, c.n_list, c.m_max, threads);
  CommandResult r;
  const std::string verdict = pr.certified() ? "CERTIFIED" : "FAILED_WITHIN_BOUNDS";
  r.report["tables"] = json::array({{{"name", "proregular_witnesses"}, {"rows", witnesses_json(pr.indices)}}});
  r.report["stabilization"] = {{"m_max", pr.m_max}};
  r.report["verdict"] = verdict;
  r.exit_code = pr.certified() ? kComplete : kInconclusive;
  r.table = header("check-proregular", c) + "# witnesses m for the colon inclusions\n" +
            witnesses_table(pr.indices, c.n_list) + "verdict: " + verdict + "\n";
  return r;
}

CommandResult les_command(const ProblemConfig& c, const Problem& p) {
  if (!p.ses) throw Error("les-check needs ses.* entries in the config");
  const GradedFreeComplex k = koszul_cochain(p.ring, p.sequence, c.n);
  const LesReport les = les_exactness_check(p.ring, *p.ses, k, c.degree_lo, c.degree_hi);
  CommandResult r;
  json degrees = json::array();
  std::ostringstream text;
  for (const auto& d : les.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"nodes", d.nodes},
                       {"node_dims", d.node_dims},
                       {"map_ranks", d.map_ranks},
                       {"connecting_ranks", d.connecting_ranks}});
    text << std::setw(6) << d.degree << "  dims";
    for (auto v : d.node_dims) text << ' ' << v;
    text << "  |  ranks";
    for (auto v : d.map_ranks) text << ' ' << v;
    text << "\n";
  }
  const std::string verdict = les.ok() ? "PASS" : "FAIL";
  r.report["tables"] = json::array({{{"name", "les"}, {"rows", degrees}}});
  r.report["nodes_checked"] = les.nodes_checked;
  r.report["stabilization"] = {{"level", c.n}};
  if (les.first_failure)
    r.report["first_failure"] = {{"degree", les.first_failure->degree},
                                 {"node", les.first_failure->node},
                                 {"reason", les.first_failure->reason}};
  r.report["verdict"] = verdict;
  r.exit_code = les.ok() ? kComplete : kError;
  r.table = header("les-check", c) + "# long exact sequence over K^(a^" + std::to_string(c.n) +
            "), per degree: node dims and map ranks\n" + text.str() + "nodes checked: " +
            std::to_string(les.nodes_checked) + "\nverdict: " + verdict + "\n";
  return r;
}

CommandResult crosscheck_command(const ProblemConfig& c, const Problem& p, unsigned threads) {
  CrosscheckParams params;
  params.colimit = colimit_params(c, threads);
  params.n_list = c.n_list;
  params.m_max = c.m_max;
  params.degree_bound = wpr_bound(c, p);
  const CrosscheckReport x = theorem_crosscheck(p.ring, p.sequence, p.module, params);

  CommandResult r;
  json tables = json::array();
  std::vector<Column> cols;
  for (const auto& rep : x.cech) {
    tables.push_back(colimit_json("cech", rep));
    cols.push_back(colimit_column("Cech^" + std::to_string(rep.spot), rep));
  }
  for (const auto& rep : x.local) {
    tables.push_back(colimit_json("localcoh", rep));
    cols.push_back(colimit_column("Loc^" + std::to_string(rep.spot), rep));
  }
  json gamma_rows = json::array();
  Column gcol{"Gamma", {}};
  for (const auto& e : x.gamma.entries) {
    gamma_rows.push_back({{"degree", e.degree}, {"dim", e.stabilized_dim}, {"stabilized", e.stabilized}});
    gcol.cells.push_back(std::to_string(e.stabilized_dim) + (e.stabilized ? "" : "*"));
  }
  tables.push_back({{"name", "gamma"}, {"spot", 0}, {"rows", gamma_rows}});
  cols.push_back(std::move(gcol));

  json diffs = json::array();
  std::ostringstream diff_text;
  for (const auto& d : x.diffs) {
    diffs.push_back({{"against", d.against}, {"spot", d.spot}, {"degree", d.degree},
                     {"cech_dim", d.cech_dim}, {"other_dim", d.other_dim},
                     {"cech_certified", d.cech_certified}, {"other_certified", d.other_certified}});
    diff_text << "diff " << d.against << " spot " << d.spot << " degree " << d.degree << ": cech "
              << d.cech_dim << (d.cech_certified ? "" : "*") << " vs " << d.other_dim
              << (d.other_certified ? "" : "*") << "\n";
  }
  const std::string verdict = to_string(x.verdict);
  r.report["tables"] = tables;
  r.report["diffs"] = diffs;
  r.report["notes"] = x.notes;
  r.report["wpr"] = {{"witnesses", witnesses_json(x.wpr.indices)},
                     {"degree_bound", x.wpr.degree_bound},
                     {"m_max", x.wpr.m_max},
                     {"certified", x.wpr.certified()}};
  bool certified = true;
  for (const auto& rep : x.cech) certified = certified && rep.all_certified();
  for (const auto& rep : x.local) certified = certified && rep.all_certified();
  r.report["stabilization"] = stabilization_json(c, certified);
  r.report["verdict"] = verdict;
  r.exit_code = x.verdict == Verdict::Pass ? kComplete
                : x.verdict == Verdict::Fail ? kError
                                             : kInconclusive;
  std::string notes;
  for (const auto& n : x.notes) notes += "note: " + n + "\n";
  r.table = header("crosscheck", c) + grid(window(c), cols) + "(* = not certified)\n" +
            "weak proregularity: " + (x.wpr.certified() ? "certified up to degree " + std::to_string(x.wpr.degree_bound) : "not found within bounds") +
            "\n" + diff_text.str() + notes + "verdict: " + verdict + "\n";
  return r;
}

json module_json(const ModuleSpec& m) {
  return {{"generators", m.generator_degrees}, {"relations", m.relations}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"koszul-homology", "cech",      "localcoh",
                                              "gamma",           "check-wpr", "check-proregular",
                                              "les-check",       "crosscheck"};
  return names;
}

json config_json(const ProblemConfig& c) {
  json vars = json::array();
  for (std::size_t i = 0; i < c.variables.size(); ++i)
    vars.push_back({{"name", c.variables[i]}, {"weight", c.weights[i]}});
  json out = {{"prime", c.prime},
              {"variables", vars},
              {"quotient", c.quotient},
              {"sequence", c.sequence},
              {"module", module_json(c.module)},
              {"bounds",
               {{"nmax", c.n_max},
                {"mmax", c.m_max},
                {"window", c.window},
                {"degrees", {c.degree_lo, c.degree_hi}},
                {"degree_bound", c.degree_bound ? json(*c.degree_bound) : json(nullptr)},
                {"nlist", c.n_list},
                {"spot", c.spot ? json(*c.spot) : json(nullptr)},
                {"n", c.n}}}};
  if (c.ses)
    out["ses"] = {{"m1", module_json(c.ses->m1)}, {"m3", module_json(c.ses->m3)}, {"f", c.ses->f}, {"g", c.ses->g}};
  return out;
}

CommandResult run_command(const std::string& command, const ProblemConfig& config, unsigned threads) {
  const Problem problem = build_problem(config);
  CommandResult r;
  if (command == "koszul-homology") r = koszul_homology(config, problem, threads);
  else if (command == "cech" || command == "localcoh") r = colimit_command(command, config, problem, threads);
  else if (command == "gamma") r = gamma_command(config, problem, threads);
  else if (command == "check-wpr") r = wpr_command(config, problem, threads);
  else if (command == "check-proregular") r = proregular_command(config, problem, threads);
  else if (command == "les-check") r = les_command(config, problem);
  else if (command == "crosscheck") r = crosscheck_command(config, problem, threads);
  else throw Error("unknown command '" + command + "'");
  r.report["schema"] = 1;
  r.report["command"] = command;
  r.report["config"] = config_json(config);
  return r;
}

}  // namespace cechkit::cli
