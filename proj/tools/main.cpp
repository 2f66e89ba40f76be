#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cechkit::Error("cannot open config file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cechkit;
  CLI::App app{"cechkit: Koszul, Čech and local cohomology of graded modules over F_p"};
  std::string command, config_path, degrees, out_path, format = "table", n_list;
  std::optional<int> n_max, m_max, window, degree_bound, spot, level;
  std::optional<std::uint64_t> prime;
  unsigned threads = 1;

  app.add_option("command", command, "command to run")
      ->required()
      ->check(CLI::IsMember(cli::command_names()));
  app.add_option("--config", config_path, "problem description (key = value lines)")->required();
  app.add_option("--degrees", degrees, "internal degree window lo..hi");
  app.add_option("--nmax", n_max, "highest tower level for colimits and Γ");
  app.add_option("--mmax", m_max, "largest witness level searched");
  app.add_option("--window", window, "levels whose ranks must agree to certify a colimit");
  app.add_option("--degree-bound", degree_bound, "degree up to which transitions must vanish");
  app.add_option("--spot", spot, "only this (co)homological index");
  app.add_option("--n", level, "Koszul level for koszul-homology and les-check");
  app.add_option("--nlist", n_list, "levels n for witness searches, e.g. 1,2,3");
  app.add_option("--prime", prime, "characteristic, overriding the config");
  app.add_option("--threads", threads, "worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "table"}));

  CLI11_PARSE(app, argc, argv);

  try {
    cli::ProblemConfig config = cli::parse_config(read_file(config_path), prime);
    if (!degrees.empty()) std::tie(config.degree_lo, config.degree_hi) = cli::parse_degree_range(degrees);
    if (n_max) config.n_max = *n_max;
    if (m_max) config.m_max = *m_max;
    if (window) config.window = *window;
    if (degree_bound) config.degree_bound = *degree_bound;
    if (spot) config.spot = *spot;
    if (level) config.n = *level;
    if (!n_list.empty()) config.n_list = cli::parse_int_list(n_list);

    const cli::CommandResult result = cli::run_command(command, config, threads);
    const std::string text = format == "json" ? result.report.dump(2) + "\n" : result.table;
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw Error("cannot write '" + out_path + "'");
      out << text;
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "cechkit " << command << ": " << e.what() << "\n";
    return cli::kError;
  }
}
