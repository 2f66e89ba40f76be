#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cechkit/errors.hpp"
#include "cechkit/les.hpp"
#include "cechkit/koszul.hpp"

namespace cechkit::cli {

/// An inhomogeneous polynomial where the config requires a homogeneous one.
class NonHomogeneousInput : public NonHomogeneous {
 public:
  NonHomogeneousInput(const std::string& message, std::size_t line, std::size_t column)
      : NonHomogeneous(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A presentation: generator degrees plus relation columns, each column one
/// entry per generator. Polynomials are kept as normalised text.
struct ModuleSpec {
  std::vector<int> generator_degrees{0};
  std::vector<std::vector<std::string>> relations;

  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

/// 0 → m1 →f M →g m3 → 0 with M the main module. f has one line per m1
/// generator (its image, one entry per M generator); g likewise per M
/// generator.
struct SesSpec {
  ModuleSpec m1, m3;
  std::vector<std::vector<std::string>> f, g;

  friend bool operator==(const SesSpec&, const SesSpec&) = default;
};

struct ProblemConfig {
  std::uint64_t prime = 32003;
  std::vector<std::string> variables;
  std::vector<int> weights;
  std::vector<std::string> quotient;
  std::vector<std::string> sequence;
  ModuleSpec module;
  std::optional<SesSpec> ses;

  int n_max = 8;
  int m_max = 8;
  int window = 3;
  int degree_lo = -6;
  int degree_hi = 2;
  std::optional<int> degree_bound;
  std::vector<int> n_list{1, 2, 3};
  std::optional<int> spot;
  int n = 1;

  friend bool operator==(const ProblemConfig&, const ProblemConfig&) = default;
};

/// Parses the key = value format (one entry per line, '#' starts a comment).
/// Every polynomial is checked against the declared variables and for
/// homogeneity. `prime_override` replaces the configured prime before any
/// polynomial is read. Throws ParseError, NonHomogeneousInput or
/// NonPrimeModulus, all carrying line and column.
ProblemConfig parse_config(std::string_view text,
                           std::optional<std::uint64_t> prime_override = std::nullopt);

/// Canonical text form; parse_config(format_config(c)) == c.
std::string format_config(const ProblemConfig& config);

/// The algebraic objects a config describes.
struct Problem {
  GradedRing ring;
  Sequence sequence;
  FPGradedModule module;
  std::optional<SESOfModules> ses;
};

Problem build_problem(const ProblemConfig& config);

/// Parses "lo..hi".
std::pair<int, int> parse_degree_range(std::string_view text);
/// Parses "1, 2, 3".
std::vector<int> parse_int_list(std::string_view text);

}  // namespace cechkit::cli
