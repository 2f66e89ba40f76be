#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace cechkit::cli {

namespace {

struct Item {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Entry {
  std::string key;
  Item value;
  std::size_t key_column = 0;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Trims `text` and returns it with the column of its first character.
Item trimmed(std::string_view text, std::size_t line, std::size_t column) {
  std::size_t b = 0, e = text.size();
  while (b < e && is_space(text[b])) ++b;
  while (e > b && is_space(text[e - 1])) --e;
  return Item{std::string(text.substr(b, e - b)), line, column + b};
}

std::vector<Item> split_list(const Item& value) {
  std::vector<Item> out;
  if (value.text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = value.text.find(',', start);
    const std::size_t end = comma == std::string::npos ? value.text.size() : comma;
    Item item = trimmed(std::string_view(value.text).substr(start, end - start), value.line,
                        value.column + start);
    if (item.text.empty()) throw ParseError("empty list item", item.line, item.column);
    out.push_back(std::move(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class Int>
Int to_integer(const Item& item) {
  Int v{};
  const char* first = item.text.data();
  const char* last = first + item.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || item.text.empty())
    throw ParseError("expected an integer, got '" + item.text + "'", item.line, item.column);
  return v;
}

std::vector<Entry> lex(std::string_view text) {
  std::vector<Entry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const Item whole = trimmed(line, line_no, 1);
    if (!whole.text.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos)
        throw ParseError("expected 'key = value'", line_no, whole.column);
      const Item key = trimmed(line.substr(0, eq), line_no, 1);
      if (key.text.empty()) throw ParseError("missing key", line_no, whole.column);
      entries.push_back(Entry{key.text, trimmed(line.substr(eq + 1), line_no, eq + 2), key.column});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return entries;
}

const std::set<std::string> kRepeatable = {"module.relation", "ses.m1.relation", "ses.m3.relation",
                                           "ses.f", "ses.g"};
const std::set<std::string> kKnown = {
    "prime",  "vars",   "quotient", "sequence",     "module.generators", "module.relation",
    "nmax",   "mmax",   "window",   "degrees",      "degree_bound",      "nlist",
    "spot",   "n",      "ses.m1.generators", "ses.m1.relation", "ses.m3.generators",
    "ses.m3.relation",  "ses.f",    "ses.g"};

class Reader {
 public:
  explicit Reader(std::vector<Entry> entries) {
    for (auto& e : entries) {
      if (!kKnown.count(e.key)) throw ParseError("unknown key '" + e.key + "'", e.value.line, e.key_column);
      auto& slot = by_key_[e.key];
      if (!slot.empty() && !kRepeatable.count(e.key))
        throw ParseError("duplicate key '" + e.key + "'", e.value.line, e.key_column);
      slot.push_back(std::move(e));
    }
  }

  const std::vector<Entry>& all(const std::string& key) const {
    static const std::vector<Entry> none;
    auto it = by_key_.find(key);
    return it == by_key_.end() ? none : it->second;
  }
  const Entry* one(const std::string& key) const {
    const auto& v = all(key);
    return v.empty() ? nullptr : &v.front();
  }
  bool any_prefix(const std::string& prefix) const {
    for (const auto& [k, v] : by_key_)
      if (k.rfind(prefix, 0) == 0) return true;
    return false;
  }

 private:
  std::map<std::string, std::vector<Entry>> by_key_;
};

// Parses a polynomial and rethrows syntax errors at the item's location.
Polynomial read_polynomial(const Ring& ring, const Item& item) {
  try {
    return ring.parse(item.text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), item.line, item.column + (e.column() ? e.column() - 1 : 0));
  }
}

int homogeneous_degree(const Ring& ring, const Polynomial& f, const Item& item) {
  const auto d = ring.degree(f);
  if (!d) throw NonHomogeneousInput("'" + item.text + "' is not homogeneous", item.line, item.column);
  return *d;
}

std::vector<int> read_degrees(const Entry* e) {
  if (!e) return {0};
  std::vector<int> out;
  for (const auto& item : split_list(e->value)) out.push_back(to_integer<int>(item));
  if (out.empty()) throw ParseError("a module needs at least one generator", e->value.line, e->value.column);
  return out;
}

// One line of entries, checked so that entry k has degree target − shifts[k].
std::vector<std::string> read_column(const Ring& ring, const Entry& e, const std::vector<int>& shifts,
                                     std::optional<int> target, const std::string& what) {
  const auto items = split_list(e.value);
  if (items.size() != shifts.size())
    throw ParseError(what + " needs " + std::to_string(shifts.size()) + " entries, got " +
                         std::to_string(items.size()),
                     e.value.line, e.value.column);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Polynomial f = read_polynomial(ring, items[k]);
    if (!f.is_zero()) {
      const int d = homogeneous_degree(ring, f, items[k]) + shifts[k];
      if (target && *target != d)
        throw NonHomogeneousInput(what + " mixes internal degrees " + std::to_string(*target) +
                                      " and " + std::to_string(d),
                                  items[k].line, items[k].column);
      target = d;
    }
    out.push_back(ring.format(f));
  }
  return out;
}

ModuleSpec read_module(const Ring& ring, const Reader& r, const std::string& prefix) {
  ModuleSpec spec;
  spec.generator_degrees = read_degrees(r.one(prefix + ".generators"));
  for (const auto& e : r.all(prefix + ".relation"))
    spec.relations.push_back(read_column(ring, e, spec.generator_degrees, std::nullopt, "relation"));
  return spec;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out;
}

std::string join_ints(const std::vector<int>& items) {
  std::vector<std::string> s;
  for (int v : items) s.push_back(std::to_string(v));
  return join(s);
}

Ring make_ring(const ProblemConfig& c) {
  return Ring(PrimeField(c.prime), c.variables, c.weights);
}

PolyMatrix columns_matrix(const Ring& ring, const std::vector<std::vector<std::string>>& cols,
                          std::size_t rows) {
  PolyMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = ring.parse(cols[c][r]);
  return m;
}

FPGradedModule make_module(const GradedRing& ring, const ModuleSpec& spec) {
  GradedFreeModule ambient{spec.generator_degrees};
  return FPGradedModule(ring, ambient,
                        columns_matrix(ring.base(), spec.relations, ambient.rank()));
}

}  // namespace

std::pair<int, int> parse_degree_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw ParseError("expected 'lo..hi'", 0, 1);
  const Item lo = trimmed(text.substr(0, dots), 0, 1);
  const Item hi = trimmed(text.substr(dots + 2), 0, dots + 3);
  const int a = to_integer<int>(lo), b = to_integer<int>(hi);
  if (a > b) throw ParseError("empty degree range", 0, 1);
  return {a, b};
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& item : split_list(trimmed(text, 0, 1))) out.push_back(to_integer<int>(item));
  return out;
}

ProblemConfig parse_config(std::string_view text, std::optional<std::uint64_t> prime_override) {
  const Reader r(lex(text));
  ProblemConfig c;

  if (const Entry* e = r.one("prime")) c.prime = to_integer<std::uint64_t>(e->value);
  if (prime_override) c.prime = *prime_override;
  if (!is_prime(c.prime)) {
    const Entry* e = r.one("prime");
    const std::string msg = std::to_string(c.prime) + " is not a prime below 2^31";
    if (e && !prime_override)
      throw NonPrimeModulus(std::to_string(e->value.line) + ":" + std::to_string(e->value.column) + ": " + msg);
    throw NonPrimeModulus(msg);
  }

  const Entry* vars = r.one("vars");
  if (!vars) throw ParseError("missing key 'vars'", 0, 0);
  for (const auto& item : split_list(vars->value)) {
    std::string name = item.text;
    int weight = 1;
    if (const auto colon = name.find(':'); colon != std::string::npos) {
      const Item w = trimmed(std::string_view(item.text).substr(colon + 1), item.line, item.column + colon + 1);
      weight = to_integer<int>(w);
      if (weight < 1) throw ParseError("variable weights must be positive", w.line, w.column);
      name = trimmed(std::string_view(item.text).substr(0, colon), 0, 0).text;
    }
    const bool ident = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                       std::all_of(name.begin(), name.end(), [](char ch) {
                         return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                       });
    if (!ident) throw ParseError("invalid variable name '" + name + "'", item.line, item.column);
    if (std::find(c.variables.begin(), c.variables.end(), name) != c.variables.end())
      throw ParseError("duplicate variable '" + name + "'", item.line, item.column);
    c.variables.push_back(name);
    c.weights.push_back(weight);
  }
  if (c.variables.empty()) throw ParseError("at least one variable is required", vars->value.line, vars->value.column);
  const Ring ring = make_ring(c);

  if (const Entry* e = r.one("quotient")) {
    for (const auto& item : split_list(e->value)) {
      const Polynomial f = read_polynomial(ring, item);
      if (!f.is_zero()) homogeneous_degree(ring, f, item);
      c.quotient.push_back(ring.format(f));
    }
  }

  const Entry* seq = r.one("sequence");
  if (!seq) throw ParseError("missing key 'sequence'", 0, 0);
  for (const auto& item : split_list(seq->value)) {
    const Polynomial f = read_polynomial(ring, item);
    if (f.is_zero() || homogeneous_degree(ring, f, item) <= 0)
      throw ParseError("sequence elements need positive degree", item.line, item.column);
    c.sequence.push_back(ring.format(f));
  }
  if (c.sequence.empty()) throw ParseError("the sequence is empty", seq->value.line, seq->value.column);

  c.module = read_module(ring, r, "module");

  if (r.any_prefix("ses.")) {
    SesSpec ses;
    ses.m1 = read_module(ring, r, "ses.m1");
    ses.m3 = read_module(ring, r, "ses.m3");
    for (const auto& e : r.all("ses.f")) {
      const int target = ses.m1.generator_degrees.at(std::min(ses.f.size(), ses.m1.generator_degrees.size() - 1));
      ses.f.push_back(read_column(ring, e, c.module.generator_degrees, target, "map f"));
    }
    for (const auto& e : r.all("ses.g")) {
      const int target = c.module.generator_degrees.at(std::min(ses.g.size(), c.module.generator_degrees.size() - 1));
      ses.g.push_back(read_column(ring, e, ses.m3.generator_degrees, target, "map g"));
    }
    if (ses.f.size() != ses.m1.generator_degrees.size())
      throw ParseError("ses.f needs one line per generator of ses.m1", 0, 0);
    if (ses.g.size() != c.module.generator_degrees.size())
      throw ParseError("ses.g needs one line per generator of the module", 0, 0);
    c.ses = std::move(ses);
  }

  auto read_int = [&](const char* key, int& slot) {
    if (const Entry* e = r.one(key)) slot = to_integer<int>(e->value);
  };
  read_int("nmax", c.n_max);
  read_int("mmax", c.m_max);
  read_int("window", c.window);
  read_int("n", c.n);
  if (const Entry* e = r.one("degree_bound")) c.degree_bound = to_integer<int>(e->value);
  if (const Entry* e = r.one("spot")) c.spot = to_integer<int>(e->value);
  if (const Entry* e = r.one("nlist")) {
    c.n_list.clear();
    for (const auto& item : split_list(e->value)) c.n_list.push_back(to_integer<int>(item));
  }
  if (const Entry* e = r.one("degrees")) {
    try {
      std::tie(c.degree_lo, c.degree_hi) = parse_degree_range(e->value.text);
    } catch (const ParseError& err) {
      throw ParseError(err.message(), e->value.line, e->value.column + (err.column() ? err.column() - 1 : 0));
    }
  }
  return c;
}

std::string format_config(const ProblemConfig& c) {
  std::ostringstream out;
  out << "prime = " << c.prime << "\n";
  std::vector<std::string> vars;
  const bool weighted = std::any_of(c.weights.begin(), c.weights.end(), [](int w) { return w != 1; });
  for (std::size_t i = 0; i < c.variables.size(); ++i)
    vars.push_back(weighted ? c.variables[i] + ":" + std::to_string(c.weights[i]) : c.variables[i]);
  out << "vars = " << join(vars) << "\n";
  if (!c.quotient.empty()) out << "quotient = " << join(c.quotient) << "\n";
  out << "sequence = " << join(c.sequence) << "\n";
  auto module = [&](const std::string& prefix, const ModuleSpec& m) {
    out << prefix << ".generators = " << join_ints(m.generator_degrees) << "\n";
    for (const auto& rel : m.relations) out << prefix << ".relation = " << join(rel) << "\n";
  };
  module("module", c.module);
  if (c.ses) {
    module("ses.m1", c.ses->m1);
    module("ses.m3", c.ses->m3);
    for (const auto& f : c.ses->f) out << "ses.f = " << join(f) << "\n";
    for (const auto& g : c.ses->g) out << "ses.g = " << join(g) << "\n";
  }
  out << "nmax = " << c.n_max << "\n";
  out << "mmax = " << c.m_max << "\n";
  out << "window = " << c.window << "\n";
  out << "degrees = " << c.degree_lo << ".." << c.degree_hi << "\n";
  if (c.degree_bound) out << "degree_bound = " << *c.degree_bound << "\n";
  out << "nlist = " << join_ints(c.n_list) << "\n";
  if (c.spot) out << "spot = " << *c.spot << "\n";
  out << "n = " << c.n << "\n";
  return out.str();
}

Problem build_problem(const ProblemConfig& c) {
  const Ring ring = make_ring(c);
  std::vector<Polynomial> quotient;
  for (const auto& q : c.quotient) quotient.push_back(ring.parse(q));
  GradedRing a(ring, quotient);
  std::vector<Polynomial> seq;
  for (const auto& s : c.sequence) seq.push_back(ring.parse(s));
  Sequence sequence(a, seq);
  FPGradedModule module = make_module(a, c.module);
  std::optional<SESOfModules> ses;
  if (c.ses) {
    const std::size_t rank = c.module.generator_degrees.size();
    ses = SESOfModules{make_module(a, c.ses->m1), module, make_module(a, c.ses->m3),
                       columns_matrix(ring, c.ses->f, rank),
                       columns_matrix(ring, c.ses->g, c.ses->m3.generator_degrees.size())};
    for (auto* m : {&ses->f, &ses->g})
      for (std::size_t i = 0; i < m->rows(); ++i)
        for (std::size_t j = 0; j < m->cols(); ++j) (*m)(i, j) = a.normal_form((*m)(i, j));
  }
  return Problem{std::move(a), std::move(sequence), std::move(module), std::move(ses)};
}

}  // namespace cechkit::cli
