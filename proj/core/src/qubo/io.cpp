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

#include "quip/qubo/io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "quip/common/digest.hpp"
#include "quip/common/errors.hpp"

namespace quip {
namespace {

struct Token {
  std::string text;
  int column = 0;
};

// Reads the next non-comment, non-blank line split into tokens.
class LineReader {
 public:
  LineReader(std::istream& in, std::string comment_chars)
      : in_(in), comments_(std::move(comment_chars)) {}

  bool next(std::vector<Token>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
      }
      if (tokens.empty()) continue;
      if (comments_.find(tokens[0].text[0]) != std::string::npos) continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what, int column = 1) const {
    throw ParseError(what, line_no_ == 0 ? 1 : line_no_, column);
  }

  std::size_t index(const Token& t, std::size_t limit) const {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      if (t.text.empty() || t.text[0] == '-' || t.text[0] == '+') throw std::invalid_argument("");
      v = std::stoull(t.text, &pos);
    } catch (const std::exception&) {
      fail("expected a non-negative integer, got '" + t.text + "'", t.column);
    }
    if (pos != t.text.size()) fail("expected a non-negative integer, got '" + t.text + "'", t.column);
    if (v >= limit) {
      fail("index " + t.text + " out of range (limit " + std::to_string(limit) + ")", t.column);
    }
    return static_cast<std::size_t>(v);
  }

  Rational value(const Token& t) const {
    try {
      return Rational::parse(t.text);
    } catch (const Error&) {
      fail("invalid number '" + t.text + "'", t.column);
    }
  }

  void arity(const std::vector<Token>& tokens, std::size_t expected) const {
    if (tokens.size() < expected) fail("too few fields", tokens.back().column);
    if (tokens.size() > expected) fail("trailing field '" + tokens[expected].text + "'", tokens[expected].column);
  }

 private:
  std::istream& in_;
  std::string comments_;
  int line_no_ = 0;
};

constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

// Parses "p <kind> n count"; returns (n, count).
std::pair<std::size_t, std::size_t> header(LineReader& reader, std::vector<Token>& tokens,
                                           const std::string& kind) {
  if (!reader.next(tokens)) reader.fail("empty input: missing 'p " + kind + "' header");
  if (tokens[0].text != "p") reader.fail("expected 'p " + kind + " ...' header", tokens[0].column);
  reader.arity(tokens, 4);
  if (tokens[1].text != kind) {
    reader.fail("expected format '" + kind + "', got '" + tokens[1].text + "'", tokens[1].column);
  }
  return {reader.index(tokens[2], kNoLimit), reader.index(tokens[3], kNoLimit)};
}

}  // namespace

QuboModel read_qubo(std::istream& in) {
  LineReader reader(in, "c#");
  std::vector<Token> tokens;
  const auto [n, nnz] = header(reader, tokens, "qubo");
  QuboModel q(n);
  std::size_t entries = 0;
  bool offset_seen = false;
  while (reader.next(tokens)) {
    if (tokens[0].text == "offset") {
      if (offset_seen) reader.fail("repeated offset line");
      reader.arity(tokens, 2);
      q.add_offset(reader.value(tokens[1]));
      offset_seen = true;
      continue;
    }
    if (entries == nnz) reader.fail("more than the declared " + std::to_string(nnz) + " entries");
    reader.arity(tokens, 3);
    const std::size_t i = reader.index(tokens[0], n), j = reader.index(tokens[1], n);
    if (i > j) reader.fail("entries must have i <= j", tokens[0].column);
    q.add_pair(i, j, reader.value(tokens[2]));
    ++entries;
  }
  if (entries != nnz) {
    reader.fail("declared " + std::to_string(nnz) + " entries, found " + std::to_string(entries));
  }
  return q;
}

void write_qubo(std::ostream& out, const QuboModel& q) {
  std::size_t nnz = q.pairs().size();
  for (const auto& v : q.linear()) nnz += v.is_zero() ? 0 : 1;
  out << "p qubo " << q.size() << ' ' << nnz << '\n';
  if (!q.offset().is_zero()) out << "offset " << q.offset().to_string() << '\n';
  auto pair_it = q.pairs().begin();
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q.linear()[i].is_zero()) out << i << ' ' << i << ' ' << q.linear()[i].to_string() << '\n';
    for (; pair_it != q.pairs().end() && pair_it->first.first == i; ++pair_it) {
      out << i << ' ' << pair_it->first.second << ' ' << pair_it->second.to_string() << '\n';
    }
  }
}

IsingModel read_ising(std::istream& in) {
  LineReader reader(in, "c#");
  std::vector<Token> tokens;
  const auto [n, nnz] = header(reader, tokens, "ising");
  IsingModel m(n);
  std::size_t entries = 0;
  bool offset_seen = false;
  while (reader.next(tokens)) {
    const std::string& kind = tokens[0].text;
    if (kind == "offset") {
      if (offset_seen) reader.fail("repeated offset line");
      reader.arity(tokens, 2);
      m.add_offset(reader.value(tokens[1]));
      offset_seen = true;
      continue;
    }
    if (entries == nnz) reader.fail("more than the declared " + std::to_string(nnz) + " entries");
    if (kind == "h") {
      reader.arity(tokens, 3);
      m.add_field(reader.index(tokens[1], n), reader.value(tokens[2]));
    } else if (kind == "J") {
      reader.arity(tokens, 4);
      const std::size_t i = reader.index(tokens[1], n), j = reader.index(tokens[2], n);
      if (i == j) reader.fail("self-coupling", tokens[1].column);
      m.add_coupling(i, j, reader.value(tokens[3]));
    } else {
      reader.fail("expected 'h', 'J' or 'offset', got '" + kind + "'", tokens[0].column);
    }
    ++entries;
  }
  if (entries != nnz) {
    reader.fail("declared " + std::to_string(nnz) + " entries, found " + std::to_string(entries));
  }
  return m;
}

void write_ising(std::ostream& out, const IsingModel& m) {
  std::size_t nnz = m.couplings().size();
  for (const auto& v : m.h()) nnz += v.is_zero() ? 0 : 1;
  out << "p ising " << m.size() << ' ' << nnz << '\n';
  if (!m.offset().is_zero()) out << "offset " << m.offset().to_string() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m.h()[i].is_zero()) out << "h " << i << ' ' << m.h()[i].to_string() << '\n';
  }
  for (const auto& [key, v] : m.couplings()) {
    out << "J " << key.first << ' ' << key.second << ' ' << v.to_string() << '\n';
  }
}

Graph read_dimacs(std::istream& in) {
  LineReader reader(in, "c");
  std::vector<Token> tokens;
  const auto [n, m] = header(reader, tokens, "edge");
  Graph g;
  g.vertex_count = n;
  while (reader.next(tokens)) {
    if (tokens[0].text != "e") reader.fail("expected an 'e u v [w]' line", tokens[0].column);
    if (g.edges.size() == m) reader.fail("more than the declared " + std::to_string(m) + " edges");
    if (tokens.size() != 3) reader.arity(tokens, 4);
    const std::size_t u = reader.index(tokens[1], n + 1), v = reader.index(tokens[2], n + 1);
    if (u == 0 || v == 0) reader.fail("DIMACS vertices are 1-based", tokens[u == 0 ? 1 : 2].column);
    Edge e{u - 1, v - 1, tokens.size() == 4 ? reader.value(tokens[3]) : Rational(1)};
    g.edges.push_back(std::move(e));
  }
  if (g.edges.size() != m) {
    reader.fail("declared " + std::to_string(m) + " edges, found " + std::to_string(g.edges.size()));
  }
  try {
    g.validate();
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  return g;
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count << ' ' << g.edges.size() << '\n';
  for (const auto& e : g.edges) {
    out << "e " << e.u + 1 << ' ' << e.v + 1;
    if (!e.weight.is_one()) out << ' ' << e.weight.to_string();
    out << '\n';
  }
}

std::string to_text(const QuboModel& q) {
  std::ostringstream out;
  write_qubo(out, q);
  return out.str();
}

std::string to_text(const IsingModel& m) {
  std::ostringstream out;
  write_ising(out, m);
  return out.str();
}

std::string model_digest(const QuboModel& q) { return digest_hex(to_text(q)); }
std::string model_digest(const IsingModel& m) { return digest_hex(to_text(m)); }

}  // namespace quip
