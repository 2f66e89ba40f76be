#include <cctype>
#include <string>

#include "cechkit/errors.hpp"
#include "cechkit/ring.hpp"

namespace cechkit {
namespace {

// poly   := ws [sign] term (sign term)* ws
// term   := factor ('*' factor)*
// factor := integer | name ['^' integer]
class Parser {
 public:
  Parser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term t = term();
      if (negative) t.coeff = ring_.field().neg(t.coeff);
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
    }
    return ring_.from_terms(std::move(terms));
  }

 private:
  Term term() {
    Term t{ring_.one(), 1};
    factor(t);
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    skip_ws();
    if (at_end()) fail("expected a factor");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coeff = ring_.field().mul(t.coeff, integer_mod_p());
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto idx = ring_.variable_index(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'", start);
      int e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = small_integer();
      }
      t.mono.exps[*idx] += e;
      return;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Scalar integer_mod_p() {
    const auto& f = ring_.field();
    Scalar v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = f.add(f.mul(v, 10), static_cast<Scalar>(peek() - '0'));
      ++pos_;
    }
    return v;
  }

  int small_integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError(msg, 0, at + 1);
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Ring::parse(std::string_view text) const { return Parser(*this, text).run(); }

}  // namespace cechkit
