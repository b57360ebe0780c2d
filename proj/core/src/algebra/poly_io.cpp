// Copyright 2026 The Quip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quip/algebra/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "quip/common/errors.hpp"

namespace quip {
namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct RawTerm {
  std::vector<std::pair<std::size_t, Monomial::Exponent>> factors;
  Rational coefficient;
};

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& vars, int line)
      : text_(text), vars_(vars), line_(line) {}

  SparsePolynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::vector<RawTerm> raw;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    raw.push_back(term(negative));
    skip_ws();
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      get();
      skip_ws();
      raw.push_back(term(c == '-'));
      skip_ws();
    }
    std::size_t arity = vars_.arity;
    if (vars_.names.empty() && arity == 0) {
      for (const auto& t : raw) {
        for (const auto& [v, e] : t.factors) arity = std::max(arity, v + 1);
      }
    }
    std::vector<Term> terms;
    for (auto& t : raw) {
      Monomial m(arity);
      for (const auto& [v, e] : t.factors) {
        if (v >= arity) fail("variable index " + std::to_string(v) + " exceeds arity");
        m[v] += e;
      }
      terms.push_back({std::move(m), std::move(t.coefficient)});
    }
    return SparsePolynomial::from_terms(arity, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, static_cast<int>(pos_) + 1);
  }

  RawTerm term(bool negative) {
    RawTerm t;
    t.coefficient = negative ? -1 : 1;
    factor(t);
    skip_ws();
    while (!at_end() && peek() == '*') {
      get();
      skip_ws();
      factor(t);
      skip_ws();
    }
    return t;
  }

  void factor(RawTerm& t) {
    if (at_end()) fail("expected a factor");
    if (is_digit(peek())) {
      t.coefficient *= number();
      return;
    }
    if (!is_name_start(peek())) fail(std::string("unexpected '") + peek() + "'");
    const std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    const std::size_t var = resolve(name, start);
    Monomial::Exponent e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      if (at_end() || !is_digit(peek())) fail("expected exponent");
      const std::size_t s = pos_;
      while (!at_end() && is_digit(peek())) ++pos_;
      const std::string digits(text_.substr(s, pos_ - s));
      if (digits.size() > 9) fail("exponent too large");
      e = static_cast<Monomial::Exponent>(std::stoul(digits));
    }
    t.factors.emplace_back(var, e);
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (!at_end() && peek() == '.') {
      ++pos_;
      while (!at_end() && is_digit(peek())) ++pos_;
    } else if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !is_digit(peek())) fail("expected denominator");
      while (!at_end() && is_digit(peek())) ++pos_;
    }
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  std::size_t resolve(const std::string& name, std::size_t start) {
    if (!vars_.names.empty()) {
      auto it = std::find(vars_.names.begin(), vars_.names.end(), name);
      if (it == vars_.names.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return static_cast<std::size_t>(it - vars_.names.begin());
    }
    if (name.size() < 2 || name[0] != 'x' ||
        !std::all_of(name.begin() + 1, name.end(), is_digit) || name.size() > 10) {
      pos_ = start;
      fail("unknown variable '" + name + "' (expected x<index>)");
    }
    const std::size_t v = std::stoul(name.substr(1));
    if (vars_.arity != 0 && v >= vars_.arity) {
      pos_ = start;
      fail("variable '" + name + "' out of range for arity " + std::to_string(vars_.arity));
    }
    return v;
  }

  std::string_view text_;
  const VariableNames& vars_;
  int line_;
  std::size_t pos_ = 0;
};

void write_term(std::ostringstream& os, const Term& t, bool first,
                const VariableNames& vars) {
  const int sign = t.coefficient.sign();
  if (first) {
    if (sign < 0) os << '-';
  } else {
    os << (sign < 0 ? " - " : " + ");
  }
  const Rational mag = t.coefficient.abs();
  bool wrote = false;
  if (t.monomial.is_one() || !mag.is_one()) {
    os << mag.to_string();
    wrote = true;
  }
  for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
    const auto e = t.monomial[i];
    if (e == 0) continue;
    if (wrote) os << '*';
    os << vars.name(i);
    if (e != 1) os << '^' << e;
    wrote = true;
  }
}

}  // namespace

VariableNames VariableNames::parse_list(std::string_view comma_separated) {
  std::vector<std::string> names;
  std::string current;
  for (char c : comma_separated) {
    if (c == ',') {
      names.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  names.push_back(current);
  for (const auto& n : names) {
    if (n.empty() || !is_name_start(n[0]) || !std::all_of(n.begin(), n.end(), is_name_char)) {
      throw ParseError("invalid variable name '" + n + "'");
    }
    if (std::count(names.begin(), names.end(), n) > 1) {
      throw ParseError("duplicate variable name '" + n + "'");
    }
  }
  return named(std::move(names));
}

std::string VariableNames::name(std::size_t var) const {
  if (var < names.size()) return names[var];
  return "x" + std::to_string(var);
}

std::string to_string(const SparsePolynomial& f, const VariableNames& vars) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    write_term(os, t, first, vars);
    first = false;
  }
  return os.str();
}

std::string to_display_string(const SparsePolynomial& f, const VariableNames& vars,
                              const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  std::vector<Term> terms = f.primitive(order).terms();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    write_term(os, t, first, vars);
    first = false;
  }
  return os.str();
}

SparsePolynomial parse_polynomial(std::string_view text, const VariableNames& vars) {
  return Parser(text, vars, 1).parse();
}

std::vector<SparsePolynomial> parse_polynomial_list(std::string_view text,
                                                    const VariableNames& vars) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  std::vector<std::pair<int, std::string_view>> bodies;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    bodies.emplace_back(static_cast<int>(i) + 1, line);
  }
  // Indexed names without a declared arity share the largest index seen.
  VariableNames resolved = vars;
  if (vars.names.empty() && vars.arity == 0) {
    std::size_t arity = 0;
    for (const auto& [no, body] : bodies) {
      arity = std::max(arity, Parser(body, vars, no).parse().arity());
    }
    resolved.arity = std::max<std::size_t>(arity, 1);
  }
  std::vector<SparsePolynomial> out;
  for (const auto& [no, body] : bodies) out.push_back(Parser(body, resolved, no).parse());
  return out;
}

}  // namespace quip
