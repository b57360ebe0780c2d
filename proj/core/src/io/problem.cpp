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

#include "quip/io/problem.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "quip/algebra/poly_io.hpp"
#include "quip/common/errors.hpp"
#include "quip/gama/gama.hpp"

namespace quip {
namespace {

using nlohmann::json;

const std::set<std::string> kTopLevel{"name",      "variables", "A",     "b",       "sense",
                                      "bounds",    "objective", "graph", "metadata"};

std::string pointer(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string pointer(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

// Line and column of the 1-based byte offset reported by the JSON parser.
std::pair<int, int> locate(std::string_view text, std::size_t byte) {
  int line = 1, column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError("empty document", 1, 1);
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte);
    std::string what = e.what();
    if (const auto at = what.find(", column "); at != std::string::npos) {
      if (const auto colon = what.find(": ", at); colon != std::string::npos) what = what.substr(colon + 2);
    }
    throw ParseError(what, line, column);
  }
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& at) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ValidationError(pointer(at, key), "unknown field");
  }
}

const json& require_object(const json& j, const std::string& at) {
  if (!j.is_object()) throw ValidationError(at, "expected an object");
  return j;
}

const json& require_array(const json& j, const std::string& at) {
  if (!j.is_array()) throw ValidationError(at, "expected an array");
  return j;
}

std::int64_t to_int(const json& j, const std::string& at) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      throw ValidationError(at, "integer out of range");
    }
    return j.get<std::int64_t>();
  }
  throw ValidationError(at, "expected an integer");
}

Rational to_rational(const json& j, const std::string& at) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(to_int(j, at)));
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw ValidationError(at, e.what());
    }
  }
  throw ValidationError(at, "expected an integer or a \"p/q\" string");
}

double to_double(const json& j, const std::string& at) {
  if (j.is_number()) return j.get<double>();
  throw ValidationError(at, "expected a number");
}

std::string to_text(const json& j, const std::string& at) {
  if (!j.is_string()) throw ValidationError(at, "expected a string");
  return j.get<std::string>();
}

template <typename T, typename Fn>
std::vector<T> to_list(const json& j, const std::string& at, Fn&& each) {
  require_array(j, at);
  std::vector<T> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(each(j[i], pointer(at, i)));
  return out;
}

IntMatrix to_matrix(const json& j, const std::string& at) {
  require_array(j, at);
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    rows.push_back(to_list<std::int64_t>(j[r], pointer(at, r), to_int));
    if (rows[r].size() != rows[0].size()) {
      throw ValidationError(pointer(at, r), "row has " + std::to_string(rows[r].size()) + " entries, expected " +
                                                std::to_string(rows[0].size()));
    }
  }
  IntMatrix A(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) A(r, c) = rows[r][c];
  }
  return A;
}

std::vector<std::optional<std::int64_t>> to_bounds(const json& j, const std::string& at, std::size_t n) {
  if (j.is_number_integer()) return std::vector<std::optional<std::int64_t>>(n, to_int(j, at));
  if (j.is_null()) return std::vector<std::optional<std::int64_t>>(n);
  auto out = to_list<std::optional<std::int64_t>>(j, at, [](const json& e, const std::string& p) {
    return e.is_null() ? std::optional<std::int64_t>{} : std::optional<std::int64_t>{to_int(e, p)};
  });
  if (out.size() != n) {
    throw ValidationError(at, "has " + std::to_string(out.size()) + " entries but there are " + std::to_string(n) +
                                  " variables");
  }
  return out;
}

ObjectiveSpec to_objective(const json& j, const std::string& at) {
  require_object(j, at);
  ObjectiveSpec o;
  if (j.contains("linear")) {
    reject_unknown(j, {"linear"}, at);
    o.kind = ObjectiveSpec::Kind::kLinear;
    o.linear = to_list<Rational>(j["linear"], pointer(at, "linear"), to_rational);
  } else if (j.contains("polynomial")) {
    reject_unknown(j, {"polynomial"}, at);
    o.kind = ObjectiveSpec::Kind::kPolynomial;
    o.polynomial = to_text(j["polynomial"], pointer(at, "polynomial"));
  } else if (j.contains("builtin")) {
    reject_unknown(j, {"builtin", "mu", "sigma", "epsilon"}, at);
    o.kind = ObjectiveSpec::Kind::kBuiltin;
    o.builtin = to_text(j["builtin"], pointer(at, "builtin"));
    if (o.builtin != "capital-budgeting") {
      throw ValidationError(pointer(at, "builtin"), "unknown builtin '" + o.builtin + "'");
    }
    for (const char* key : {"mu", "sigma", "epsilon"}) {
      if (!j.contains(key)) throw ValidationError(pointer(at, key), "missing field");
    }
    o.mu = to_list<double>(j["mu"], pointer(at, "mu"), to_double);
    o.sigma = to_list<double>(j["sigma"], pointer(at, "sigma"), to_double);
    o.epsilon = to_double(j["epsilon"], pointer(at, "epsilon"));
    if (o.mu.size() != o.sigma.size()) {
      throw ValidationError(pointer(at, "sigma"), "mu has " + std::to_string(o.mu.size()) + " entries but sigma has " +
                                                      std::to_string(o.sigma.size()));
    }
    if (!(o.epsilon > 0 && o.epsilon < 1)) {
      throw ValidationError(pointer(at, "epsilon"), "must lie strictly between 0 and 1");
    }
  } else {
    if (!j.empty()) throw ValidationError(pointer(at, j.begin().key()), "unknown field");
    throw ValidationError(at, "expected one of linear, polynomial or builtin");
  }
  return o;
}

Graph to_graph(const json& j, const std::string& at) {
  require_object(j, at);
  reject_unknown(j, {"vertices", "edges"}, at);
  if (!j.contains("vertices")) throw ValidationError(pointer(at, "vertices"), "missing field");
  Graph g;
  const std::int64_t n = to_int(j["vertices"], pointer(at, "vertices"));
  if (n < 0) throw ValidationError(pointer(at, "vertices"), "must be non-negative");
  g.vertex_count = static_cast<std::size_t>(n);
  if (j.contains("edges")) {
    const std::string edges_at = pointer(at, "edges");
    const json& edges = require_array(j["edges"], edges_at);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::string e_at = pointer(edges_at, k);
      const json& e = require_array(edges[k], e_at);
      if (e.size() != 2 && e.size() != 3) throw ValidationError(e_at, "expected [u, v] or [u, v, weight]");
      const std::int64_t u = to_int(e[0], pointer(e_at, 0)), v = to_int(e[1], pointer(e_at, 1));
      if (u < 0 || v < 0) throw ValidationError(e_at, "vertices are non-negative");
      Edge edge{static_cast<std::size_t>(u), static_cast<std::size_t>(v), Rational(1)};
      if (e.size() == 3) edge.weight = to_rational(e[2], pointer(e_at, 2));
      g.edges.push_back(edge);
    }
  }
  try {
    g.validate();
  } catch (const ParameterError& e) {
    throw ValidationError(pointer(at, "edges"), e.what());
  }
  return g;
}

ProblemFile from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("", "problem must be a JSON object");
  reject_unknown(doc, kTopLevel, "");
  ProblemFile p;
  if (doc.contains("name")) p.name = to_text(doc["name"], "/name");
  if (doc.contains("variables")) p.variables = to_list<std::string>(doc["variables"], "/variables", to_text);
  if (doc.contains("metadata")) p.metadata = require_object(doc["metadata"], "/metadata").dump();
  if (doc.contains("A") != doc.contains("b")) {
    throw ValidationError(doc.contains("A") ? "/b" : "/A", "A and b must be given together");
  }
  if (doc.contains("A")) {
    p.A = to_matrix(doc["A"], "/A");
    p.b = to_list<std::int64_t>(doc["b"], "/b", to_int);
    if (p.b.size() != p.A->rows()) {
      throw ValidationError("/b", "A has " + std::to_string(p.A->rows()) + " rows but b has " +
                                      std::to_string(p.b.size()) + " entries");
    }
    if (!p.variables.empty() && p.variables.size() != p.A->cols()) {
      throw ValidationError("/variables", "A has " + std::to_string(p.A->cols()) + " columns but " +
                                              std::to_string(p.variables.size()) + " variables are named");
    }
  }
  const std::size_t n = p.variable_count();
  if (doc.contains("sense")) {
    if (!p.A) throw ValidationError("/sense", "needs A");
    p.inequality = to_list<bool>(doc["sense"], "/sense", [](const json& e, const std::string& at) {
      const std::string s = to_text(e, at);
      if (s == "=") return false;
      if (s == "<=") return true;
      throw ValidationError(at, "expected \"=\" or \"<=\"");
    });
    if (p.inequality.size() != p.A->rows()) {
      throw ValidationError("/sense", "A has " + std::to_string(p.A->rows()) + " rows but sense has " +
                                          std::to_string(p.inequality.size()) + " entries");
    }
  }
  if (doc.contains("bounds")) {
    const json& bounds = require_object(doc["bounds"], "/bounds");
    reject_unknown(bounds, {"lower", "upper"}, "/bounds");
    if (n == 0) throw ValidationError("/bounds", "needs A or variables");
    p.lower = bounds.contains("lower") ? to_bounds(bounds["lower"], "/bounds/lower", n)
                                       : std::vector<std::optional<std::int64_t>>(n);
    p.upper = bounds.contains("upper") ? to_bounds(bounds["upper"], "/bounds/upper", n)
                                       : std::vector<std::optional<std::int64_t>>(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (p.lower[j] && p.upper[j] && *p.lower[j] > *p.upper[j]) {
        throw ValidationError(pointer("/bounds/lower", j), "lower bound exceeds upper bound");
      }
    }
  }
  if (doc.contains("objective")) {
    p.objective = to_objective(doc["objective"], "/objective");
    const auto& o = p.objective;
    if (o.kind == ObjectiveSpec::Kind::kLinear && n > 0 && o.linear.size() != n) {
      throw ValidationError("/objective/linear", "has " + std::to_string(o.linear.size()) + " entries but there are " +
                                                     std::to_string(n) + " variables");
    }
    if (o.kind == ObjectiveSpec::Kind::kBuiltin && n > 0 && o.mu.size() != n) {
      throw ValidationError("/objective/mu", "has " + std::to_string(o.mu.size()) + " entries but there are " +
                                                 std::to_string(n) + " variables");
    }
    if (o.kind == ObjectiveSpec::Kind::kPolynomial) {
      if (n == 0) throw ValidationError("/objective/polynomial", "needs A or variables");
      try {
        parse_polynomial(o.polynomial, p.names());
      } catch (const ParseError& e) {
        throw ValidationError("/objective/polynomial", e.what());
      }
    }
  }
  if (doc.contains("graph")) p.graph = to_graph(doc["graph"], "/graph");
  return p;
}

json rational_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) return json(r.numerator().get_si());
  return json(r.to_string());
}

std::string compact(const json& j) { return j.dump(); }

}  // namespace

std::size_t ProblemFile::variable_count() const {
  if (A) return A->cols();
  return variables.size();
}

VariableNames ProblemFile::names() const {
  if (!variables.empty()) return VariableNames::named(variables);
  return VariableNames::indexed(variable_count());
}

ConstraintSystem ProblemFile::system() const {
  if (!A) throw ValidationError("/A", "the problem has no constraint matrix");
  ConstraintSystem ip;
  ip.A = *A;
  ip.b = b;
  ip.inequality = inequality;
  ip.lower = lower;
  ip.upper = upper;
  switch (objective.kind) {
    case ObjectiveSpec::Kind::kLinear:
      ip.objective = Objective::make_linear(objective.linear);
      break;
    case ObjectiveSpec::Kind::kPolynomial:
      ip.objective = Objective::make_polynomial(parse_polynomial(objective.polynomial, names()));
      break;
    default:
      break;
  }
  ip.normalize();
  return ip;
}

ObjectiveOracle ProblemFile::oracle() const {
  switch (objective.kind) {
    case ObjectiveSpec::Kind::kNone:
      throw PreconditionError("the problem has no objective");
    case ObjectiveSpec::Kind::kBuiltin:
      return capital_budgeting_objective(objective.mu, objective.sigma, objective.epsilon);
    default: {
      Objective o = objective.kind == ObjectiveSpec::Kind::kLinear
                        ? Objective::make_linear(objective.linear)
                        : Objective::make_polynomial(parse_polynomial(objective.polynomial, names()));
      return [o = std::move(o)](std::span<const std::int64_t> x) { return o.evaluate(x).to_double(); };
    }
  }
}

ProblemFile parse_problem(std::string_view text) { return from_json(parse_json(text)); }

ProblemFile read_problem(const std::string& path) { return parse_problem(read_file(path)); }

std::string print_problem(const ProblemFile& p) {
  std::vector<std::pair<std::string, std::string>> fields;
  if (!p.name.empty()) fields.emplace_back("name", compact(p.name));
  if (!p.variables.empty()) fields.emplace_back("variables", compact(p.variables));
  if (p.A) {
    std::string rows = "[";
    for (std::size_t r = 0; r < p.A->rows(); ++r) {
      const auto row = p.A->row(r);
      rows += (r ? ",\n    " : "\n    ") + compact(json(std::vector<std::int64_t>(row.begin(), row.end())));
    }
    rows += p.A->rows() ? "\n  ]" : "]";
    fields.emplace_back("A", rows);
    fields.emplace_back("b", compact(p.b));
  }
  if (!p.inequality.empty()) {
    json sense = json::array();
    for (bool le : p.inequality) sense.push_back(le ? "<=" : "=");
    fields.emplace_back("sense", compact(sense));
  }
  if (!p.lower.empty() || !p.upper.empty()) {
    auto list = [](const std::vector<std::optional<std::int64_t>>& v) {
      json out = json::array();
      for (const auto& e : v) out.push_back(e ? json(*e) : json(nullptr));
      return out;
    };
    json bounds = json::object();
    if (!p.lower.empty()) bounds["lower"] = list(p.lower);
    if (!p.upper.empty()) bounds["upper"] = list(p.upper);
    fields.emplace_back("bounds", compact(bounds));
  }
  const auto& o = p.objective;
  if (o.kind == ObjectiveSpec::Kind::kLinear) {
    json c = json::array();
    for (const auto& r : o.linear) c.push_back(rational_json(r));
    fields.emplace_back("objective", compact(json{{"linear", c}}));
  } else if (o.kind == ObjectiveSpec::Kind::kPolynomial) {
    fields.emplace_back("objective", compact(json{{"polynomial", o.polynomial}}));
  } else if (o.kind == ObjectiveSpec::Kind::kBuiltin) {
    fields.emplace_back("objective",
                        compact(json{{"builtin", o.builtin}, {"mu", o.mu}, {"sigma", o.sigma}, {"epsilon", o.epsilon}}));
  }
  if (p.graph) {
    json edges = json::array();
    for (const auto& e : p.graph->edges) {
      json edge = json::array({e.u, e.v});
      if (e.weight != Rational(1)) edge.push_back(rational_json(e.weight));
      edges.push_back(edge);
    }
    fields.emplace_back("graph", compact(json{{"vertices", p.graph->vertex_count}, {"edges", edges}}));
  }
  if (!p.metadata.empty()) fields.emplace_back("metadata", p.metadata);

  std::string out = "{";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += (i ? ",\n  \"" : "\n  \"") + fields[i].first + "\": " + fields[i].second;
  }
  out += fields.empty() ? "}\n" : "\n}\n";
  return out;
}

IntMatrix parse_matrix(std::string_view text) {
  const json doc = parse_json(text);
  if (doc.is_array()) return to_matrix(doc, "");
  const ProblemFile p = from_json(doc);
  if (!p.A) throw ValidationError("/A", "missing field");
  return *p.A;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace quip
