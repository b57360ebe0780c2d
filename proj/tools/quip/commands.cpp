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

#include "commands.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "quip/anneal/anneal.hpp"
#include "quip/common/errors.hpp"
#include "quip/gama/gama.hpp"
#include "quip/graver/graver.hpp"
#include "quip/groebner/groebner.hpp"
#include "quip/io/problem.hpp"
#include "quip/qubo/io.hpp"
#include "quip/reform/reform.hpp"

namespace quip::cli {
namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ordered_json config_json(const Config& c) {
  ordered_json a = ordered_json::array();
  for (auto v : c) a.push_back(static_cast<int>(v));
  return a;
}

IntVector parse_int_list(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParameterError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

// --- groebner ------------------------------------------------------------------

struct GroebnerArgs {
  std::string file;
  std::string vars;
  std::string order = "lex";
  std::size_t max_pairs = GroebnerLimits{}.max_pairs;
  std::uint64_t max_degree = GroebnerLimits{}.max_degree;
};

void run_groebner(Context& ctx, const GroebnerArgs& a) {
  const std::string text = ctx.read_input(a.file);
  const VariableNames names = VariableNames::parse_list(a.vars);
  const MonomialOrder order = MonomialOrder::from_name(a.order, names.arity);
  GroebnerLimits limits{a.max_pairs, a.max_degree};
  ctx.config = {{"vars", names.names}, {"order", a.order}, {"max_pairs", a.max_pairs}, {"max_degree", a.max_degree}};
  GroebnerStats stats;
  const GroebnerBasis basis = buchberger(Ideal::make(parse_polynomial_list(text, names), names), order, limits, &stats);
  ctx.lap("buchberger");
  ordered_json doc;
  doc["input_digest"] = ctx.last_digest();
  doc["order"] = order.name();
  doc["variables"] = names.names;
  doc["reduced"] = basis.reduced;
  doc["infeasible"] = is_infeasible(basis);
  ordered_json monic = ordered_json::array(), display = ordered_json::array();
  for (const auto& g : basis.polynomials) {
    monic.push_back(to_string(g, names));
    display.push_back(to_display_string(g, names, order));
  }
  doc["basis"] = monic;
  doc["primitive"] = display;
  doc["stats"] = {{"pairs_considered", stats.pairs_considered},
                  {"pairs_reduced", stats.pairs_reduced},
                  {"coprime_skipped", stats.coprime_skipped},
                  {"chain_skipped", stats.chain_skipped}};
  ctx.emit(doc);
}

// --- ct-solve ------------------------------------------------------------------

struct CtArgs {
  std::string file;
  std::string x0;
};

void run_ct_solve(Context& ctx, const CtArgs& a) {
  const ProblemFile p = parse_problem(ctx.read_input(a.file));
  const std::string digest = ctx.last_digest();
  if (!p.A) throw ValidationError("/A", "ct-solve needs A and b");
  if (p.objective.kind != ObjectiveSpec::Kind::kLinear) {
    throw ValidationError("/objective", "ct-solve needs a linear objective");
  }
  for (bool le : p.inequality) {
    if (le) throw ValidationError("/sense", "ct-solve solves equality systems; add slack columns");
  }
  for (std::size_t j = 0; j < p.upper.size(); ++j) {
    if (p.upper[j] || (p.lower[j] && *p.lower[j] != 0)) {
      throw ValidationError("/bounds", "ct-solve works over x >= 0 without upper bounds");
    }
  }
  ToricIP ip{*p.A, p.b, {}};
  for (std::size_t j = 0; j < p.objective.linear.size(); ++j) {
    const Rational& c = p.objective.linear[j];
    if (!c.is_integer() || !c.numerator().fits_slong_p()) {
      throw ValidationError("/objective/linear/" + std::to_string(j), "ct-solve needs integer costs");
    }
    ip.c.push_back(c.numerator().get_si());
  }
  std::optional<IntVector> x0;
  if (!a.x0.empty()) x0 = parse_int_list(a.x0);
  ctx.config = {{"x0", a.x0}};
  const CtSolution s = ct_solve(ip, x0);
  ctx.lap("ct_solve");
  ordered_json doc;
  doc["input_digest"] = digest;
  doc["x"] = s.x;
  doc["objective"] = s.objective;
  doc["basis_size"] = s.basis_size;
  ctx.emit(doc);
}

// --- color ---------------------------------------------------------------------

struct ColorArgs {
  std::string file;
  unsigned k = 3;
};

void run_color(Context& ctx, const ColorArgs& a) {
  const std::string text = ctx.read_input(a.file);
  Graph g;
  if (ends_with(a.file, ".json")) {
    const ProblemFile p = parse_problem(text);
    if (!p.graph) throw ValidationError("/graph", "missing field");
    g = *p.graph;
  } else {
    std::istringstream in(text);
    g = read_dimacs(in);
  }
  if (a.k < 1) throw ParameterError("--k must be at least 1");
  ctx.config = {{"k", a.k}};
  const bool colorable = is_k_colorable(g, a.k);
  ctx.lap("groebner");
  ctx.emit(std::string("colorable: ") + (colorable ? "true" : "false") + "\n");
}

// --- graver --------------------------------------------------------------------

struct GraverArgs {
  std::string matrix;
  std::string method = "pottier";
  std::size_t max_elements = PottierOptions{}.max_elements;
};

void run_graver(Context& ctx, const GraverArgs& a) {
  const IntMatrix A = parse_matrix(ctx.read_input(a.matrix));
  const std::string digest = ctx.last_digest();
  ctx.config = {{"method", a.method}, {"max_elements", a.max_elements}};
  GraverBasis basis;
  if (a.method == "pottier") {
    PottierOptions options;
    options.max_elements = a.max_elements;
    basis = pottier(A, options);
  } else if (a.method == "lawrence") {
    basis = lawrence_graver(A);
  } else {
    throw ParameterError("unknown method '" + a.method + "' (expected pottier or lawrence)");
  }
  ctx.lap(a.method);
  ordered_json doc;
  doc["input_digest"] = digest;
  doc["method"] = a.method;
  doc["rows"] = A.rows();
  doc["columns"] = A.cols();
  doc["partial"] = basis.partial;
  doc["count"] = basis.elements.size();
  doc["elements"] = basis.elements;
  ctx.emit(doc);
}

// --- compile -------------------------------------------------------------------

struct CompileArgs {
  std::string file;
  std::string scheme = "binary";
  std::int64_t mu = 0;
  std::string rho = "auto";
  std::string report;
};

void run_compile(Context& ctx, const CompileArgs& a) {
  const ProblemFile p = parse_problem(ctx.read_input(a.file));
  const std::string digest = ctx.last_digest();
  const ConstraintSystem ip = p.system();
  const EncodingScheme scheme = EncodingScheme::from_name(a.scheme, a.mu);
  std::optional<PenaltyWeights> weights;
  if (a.rho != "auto") {
    PenaltyWeights w;
    try {
      w.rho = Rational::parse(a.rho);
    } catch (const Error&) {
      throw ParameterError("--rho expects 'auto' or a rational, got '" + a.rho + "'");
    }
    w.lambda = w.rho;
    weights = w;
  }
  ctx.config = {{"scheme", scheme.name()}, {"mu", a.mu}, {"rho", a.rho}};
  const CompiledQubo c = compile_qubo(ip, scheme, weights);
  ctx.lap("compile");

  const std::string qubo_text = to_text(c.qubo);
  ctx.emit(qubo_text);

  std::string report_path = a.report;
  if (report_path.empty() && !ctx.output.empty()) report_path = ctx.output + ".report.json";
  if (report_path.empty()) return;
  const VariableNames names = p.names();
  ordered_json doc;
  doc["input_digest"] = digest;
  doc["qubo_digest"] = model_digest(c.qubo);
  doc["scheme"] = scheme.name();
  if (scheme.kind == EncodingScheme::Kind::kBounded) doc["mu"] = scheme.mu;
  doc["qubo_variables"] = c.qubo.size();
  ordered_json vars = ordered_json::array();
  for (std::size_t j = 0; j < c.encoding.variable_count(); ++j) {
    const auto& v = c.encoding.variable(j);
    ordered_json e;
    const bool original = j < c.original_variables;
    e["name"] = original ? names.name(j) : "s" + std::to_string(j - c.original_variables);
    e["kind"] = original ? "original" : "slack";
    e["lower"] = v.lower;
    e["upper"] = v.upper;
    e["first_bit"] = c.encoding.first_bit(j);
    e["k"] = v.k;
    vars.push_back(e);
  }
  doc["variables"] = vars;
  ordered_json anc = ordered_json::array();
  for (const auto& y : c.ancillas) anc.push_back({{"index", y.index}, {"i", y.i}, {"j", y.j}});
  doc["ancillas"] = anc;
  doc["weights"] = {{"source", weights ? "user" : "penalty_bound"},
                    {"rho", exact(c.weights.rho)},
                    {"lambda", exact(c.weights.lambda)},
                    {"delta_hb_max", exact(c.weights.delta_hb_max)},
                    {"delta_ha_min", exact(c.weights.delta_ha_min)},
                    {"abs_sum_bound", exact(c.weights.abs_sum_bound)},
                    {"ancilla", exact(c.ancilla_weight)}};
  doc["offset"] = exact(c.qubo.offset());
  doc["binary_rows"] = c.binary_A.rows();
  ctx.write_output(report_path, pretty(doc));
}

// --- anneal --------------------------------------------------------------------

struct AnnealArgs {
  std::string model;
  std::size_t shots = 1000;
  std::size_t sweeps = 1000;
  bool pt = false;
  std::size_t replicas = 8;
  std::size_t exchange_interval = 1;
  double beta_min = 0;
  double beta_max = 0;
  std::string shape = "geometric";
};

void run_anneal(Context& ctx, const AnnealArgs& a) {
  const std::string text = ctx.read_input(a.model);
  AnnealOptions options;
  options.shots = a.shots;
  options.seed = ctx.seed;
  options.threads = ctx.threads;
  AnnealSchedule s;
  s.beta_min = a.beta_min;
  s.beta_max = a.beta_max;
  s.sweeps = a.sweeps;
  s.shape = AnnealSchedule::shape_from_name(a.shape);
  s.replicas = a.replicas;
  s.exchange_interval = a.exchange_interval;
  options.schedule = s;
  ctx.config = {{"shots", a.shots},       {"sweeps", a.sweeps},     {"pt", a.pt},
                {"replicas", a.replicas}, {"beta_min", a.beta_min}, {"beta_max", a.beta_max},
                {"schedule", a.shape},    {"exchange_interval", a.exchange_interval}};
  std::istringstream in(text);
  SampleSet samples;
  if (ends_with(a.model, ".ising")) {
    const IsingModel m = read_ising(in);
    samples = a.pt ? parallel_tempering(m, options) : simulated_anneal(m, options);
  } else if (ends_with(a.model, ".qubo")) {
    const QuboModel q = read_qubo(in);
    samples = a.pt ? parallel_tempering(q, options) : simulated_anneal(q, options);
  } else {
    throw ParameterError("model files end in .qubo or .ising");
  }
  ctx.lap(a.pt ? "parallel_tempering" : "simulated_anneal");
  std::ostringstream os;
  write_samples(os, samples);
  ctx.emit(os.str());
}

// --- tts -----------------------------------------------------------------------

struct TtsArgs {
  std::string samples;
  double target = 0;
  double confidence = 0.99;
  double tau = 1.0;
  std::size_t shots_per_run = 1;
  std::string model;
};

void run_tts(Context& ctx, const TtsArgs& a) {
  std::istringstream in(ctx.read_input(a.samples));
  const std::string digest = ctx.last_digest();
  const SampleSet s = read_samples(in);
  if (!a.model.empty()) {
    std::istringstream model(ctx.read_input(a.model));
    if (ends_with(a.model, ".ising")) {
      s.verify(read_ising(model));
    } else {
      s.verify(read_qubo(model));
    }
  }
  ctx.config = {{"target", a.target}, {"confidence", a.confidence}, {"tau", a.tau}, {"shots_per_run", a.shots_per_run}};
  const TtsResult r = tts(s, a.tau, a.target, a.confidence, a.shots_per_run);
  ordered_json doc;
  doc["input_digest"] = digest;
  doc["model_digest"] = s.model_digest;
  doc["shots"] = s.total_count();
  doc["target"] = a.target;
  doc["confidence"] = a.confidence;
  doc["tau"] = a.tau;
  doc["shots_per_run"] = a.shots_per_run;
  doc["success_probability"] = r.success_probability;
  doc["tts"] = std::isinf(r.tts) ? ordered_json("inf") : ordered_json(r.tts);
  ctx.emit(doc);
}

// --- gama ----------------------------------------------------------------------

struct GamaArgs {
  std::string file;
  std::string objective_file;
  std::string scheme = "binary";
  std::int64_t mu = 0;
  GamaConfig config;
  std::string strategy = "greedy";
};

void run_gama(Context& ctx, const GamaArgs& a) {
  ProblemFile p = parse_problem(ctx.read_input(a.file));
  const std::string digest = ctx.last_digest();
  std::string objective_digest;
  if (!a.objective_file.empty()) {
    p.objective = {};
    p.objective.kind = ObjectiveSpec::Kind::kPolynomial;
    p.objective.polynomial = ctx.read_input(a.objective_file);
    objective_digest = ctx.last_digest();
    parse_polynomial(p.objective.polynomial, p.names());
  }
  GamaConfig config = a.config;
  config.scheme = EncodingScheme::from_name(a.scheme, a.mu);
  if (a.strategy == "greedy") {
    config.strategy = AugmentStrategy::kGreedy;
  } else if (a.strategy == "bisection") {
    config.strategy = AugmentStrategy::kBisection;
  } else {
    throw ParameterError("unknown strategy '" + a.strategy + "' (expected greedy or bisection)");
  }
  config.seed = ctx.seed;
  config.threads = ctx.threads;
  ctx.config = {{"scheme", config.scheme.name()},
                {"width", config.width},
                {"kernel_shots", config.kernel_shots},
                {"seed_shots", config.seed_shots},
                {"sweeps", config.sweeps},
                {"fraction", config.fraction},
                {"max_seeds", config.max_seeds},
                {"seed_rounds", config.seed_rounds},
                {"strategy", a.strategy}};
  const GamaReport r = gama_solve(p.system(), p.oracle(), config);
  for (const auto& [stage, seconds] : r.timings) ctx.add_timing(stage, seconds);

  ordered_json doc;
  doc["input_digest"] = digest;
  if (!objective_digest.empty()) doc["objective_digest"] = objective_digest;
  doc["config"] = ctx.config;
  doc["seed"] = ctx.seed;
  doc["basis"] = {{"size", r.basis_size},
                  {"used", r.basis_used},
                  {"complete", r.basis_complete},
                  {"checked", r.basis_checked},
                  {"fraction_seed", r.fraction_seed}};
  doc["extract"] = {{"distinct_samples", r.extract.distinct_samples},
                    {"kernel_samples", r.extract.kernel_samples},
                    {"near_kernel_samples", r.extract.near_kernel_samples},
                    {"pairs_examined", r.extract.pairs_examined},
                    {"combinations_added", r.extract.combinations_added}};
  doc["seeds"] = {{"rounds", r.seed_rounds},
                  {"attempted", r.seeds_attempted},
                  {"found", r.seeds_found},
                  {"select_seed", r.select_seed}};
  ordered_json runs = ordered_json::array();
  for (const auto& run : r.runs) {
    runs.push_back({{"start", run.start},
                    {"x", run.x},
                    {"objective", run.objective},
                    {"gap", run.objective - r.best_objective},
                    {"trajectory", run.trajectory}});
  }
  doc["runs"] = runs;
  doc["best"] = {{"x", r.best}, {"objective", r.best_objective}, {"run", r.best_run}};
  ctx.emit(doc);
}

// --- oracle --------------------------------------------------------------------

struct OracleArgs {
  std::string file;
  std::size_t max_argmins = BruteForceOptions{}.max_argmins;
};

constexpr double kMaxBoxPoints = 1 << 24;

void oracle_problem(Context& ctx, const OracleArgs& a, const ProblemFile& p, const std::string& digest) {
  ConstraintSystem ip = p.system();
  const std::size_t n = ip.variable_count();
  IntVector lo(n), hi(n);
  double points = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (!ip.lower[j] || !ip.upper[j]) throw UnboundedError("variable " + std::to_string(j) + " needs finite bounds");
    lo[j] = *ip.lower[j];
    hi[j] = *ip.upper[j];
    points *= static_cast<double>(hi[j] - lo[j] + 1);
  }
  if (points > kMaxBoxPoints) {
    throw ComputationLimitError("box has " + std::to_string(points) + " points; the oracle enumerates at most 2^24");
  }
  const bool exact_objective = p.objective.kind == ObjectiveSpec::Kind::kLinear ||
                               p.objective.kind == ObjectiveSpec::Kind::kPolynomial;
  const ObjectiveOracle f = p.objective.kind == ObjectiveSpec::Kind::kNone
                                ? ObjectiveOracle([](std::span<const std::int64_t>) { return 0.0; })
                                : p.oracle();
  std::optional<Rational> best_exact;
  double best = std::numeric_limits<double>::infinity();
  std::vector<IntVector> argmins;
  bool truncated = false;
  std::size_t feasible = 0;
  IntVector x = lo;
  while (true) {
    if (ip.is_feasible(x)) {
      ++feasible;
      int cmp;
      if (exact_objective) {
        const Rational v = ip.objective.evaluate(x);
        cmp = !best_exact ? -1 : (v < *best_exact ? -1 : (v == *best_exact ? 0 : 1));
        if (cmp < 0) best_exact = v;
      } else {
        const double v = f(x);
        cmp = v < best ? -1 : (v == best ? 0 : 1);
        if (cmp < 0) best = v;
      }
      if (cmp < 0) {
        argmins.assign(1, x);
        truncated = false;
      } else if (cmp == 0) {
        if (argmins.size() < a.max_argmins) {
          argmins.push_back(x);
        } else {
          truncated = true;
        }
      }
    }
    std::size_t j = 0;
    while (j < n && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++x[j];
  }
  if (feasible == 0) throw InfeasibleError("no point of the box satisfies the constraints", "no_feasible_point");
  std::sort(argmins.begin(), argmins.end());
  ordered_json doc;
  doc["input_digest"] = digest;
  doc["kind"] = "problem";
  doc["points"] = static_cast<std::uint64_t>(points);
  doc["feasible_points"] = feasible;
  if (exact_objective) {
    doc["optimum"] = exact(*best_exact);
  } else if (p.objective.kind == ObjectiveSpec::Kind::kNone) {
    doc["optimum"] = nullptr;
  } else {
    doc["optimum"] = best;
  }
  doc["argmins"] = argmins;
  doc["truncated"] = truncated;
  ctx.emit(doc);
}

void run_oracle(Context& ctx, const OracleArgs& a) {
  const std::string text = ctx.read_input(a.file);
  const std::string digest = ctx.last_digest();
  ctx.config = {{"max_argmins", a.max_argmins}};
  if (ends_with(a.file, ".json")) {
    oracle_problem(ctx, a, parse_problem(text), digest);
    return;
  }
  BruteForceOptions options;
  options.max_argmins = a.max_argmins;
  options.threads = ctx.threads;
  std::istringstream in(text);
  BruteForceResult r;
  ordered_json doc;
  doc["input_digest"] = digest;
  if (ends_with(a.file, ".ising")) {
    const IsingModel m = read_ising(in);
    r = brute_force(m, options);
    doc["kind"] = "ising";
    doc["model_digest"] = model_digest(m);
    doc["variables"] = m.size();
  } else if (ends_with(a.file, ".qubo")) {
    const QuboModel q = read_qubo(in);
    r = brute_force(q, options);
    doc["kind"] = "qubo";
    doc["model_digest"] = model_digest(q);
    doc["variables"] = q.size();
  } else {
    throw ParameterError("oracle inputs end in .qubo, .ising or .json");
  }
  ctx.lap("brute_force");
  doc["energy"] = exact(r.energy);
  ordered_json argmins = ordered_json::array();
  for (const auto& c : r.argmins) argmins.push_back(config_json(c));
  doc["argmins"] = argmins;
  doc["truncated"] = r.argmins_truncated;
  ctx.emit(doc);
}

}  // namespace

void add_groebner(CLI::App& app, Runner& run) {
  auto a = std::make_shared<GroebnerArgs>();
  auto* cmd = app.add_subcommand("groebner", "Reduced Groebner basis of a polynomial list");
  cmd->add_option("file", a->file, "Polynomials, one per line")->required();
  cmd->add_option("--vars", a->vars, "Variable names, most significant first (x,y,z)")->required();
  cmd->add_option("--order", a->order, "lex, grlex or grevlex")->capture_default_str();
  cmd->add_option("--max-pairs", a->max_pairs, "S-pair cap")->capture_default_str();
  cmd->add_option("--max-degree", a->max_degree, "Total degree cap")->capture_default_str();
  cmd->callback([a, &run] { run = [a](Context& ctx) { run_groebner(ctx, *a); }; });
}

void add_ct_solve(CLI::App& app, Runner& run) {
  auto a = std::make_shared<CtArgs>();
  auto* cmd = app.add_subcommand("ct-solve", "Integer program min c.x, Ax = b, x >= 0 via the toric ideal");
  cmd->add_option("problem", a->file, "Problem JSON with A, b and a linear objective")->required();
  cmd->add_option("--x0", a->x0, "Known feasible point (comma-separated)");
  cmd->callback([a, &run] { run = [a](Context& ctx) { run_ct_solve(ctx, *a); }; });
}

void add_color(CLI::App& app, Runner& run) {
  auto a = std::make_shared<ColorArgs>();
  auto* cmd = app.add_subcommand("color", "Decide k-colorability with a Groebner basis");
  cmd->add_option("graph", a->file, "DIMACS edge file or problem JSON with a graph")->required();
  cmd->add_option("--k", a->k, "Number of colors")->capture_default_str();
  cmd->callback([a, &run] { run = [a](Context& ctx) { run_color(ctx, *a); }; });
}

void add_graver(CLI::App& app, Runner& run) {
  auto a = std::make_shared<GraverArgs>();
  auto* cmd = app.add_subcommand("graver", "Graver basis of an integer matrix");
  cmd->add_option("-A,--matrix", a->matrix, "Matrix JSON (array of rows, or a problem with A)")->required();
  cmd->add_option("--method", a->method, "pottier or lawrence")->capture_default_str();
  cmd->add_option("--max-elements", a->max_elements, "Working-set cap for pottier")->capture_default_str();
  cmd->callback([a, &run] { run = [a](Context& ctx) { run_graver(ctx, *a); }; });
}

void add_compile(CLI::App& app, Runner& run) {
  auto a = std::make_shared<CompileArgs>();
  auto* cmd = app.add_subcommand("compile", "Compile an integer program to a QUBO");
  cmd->add_option("problem", a->file, "Problem JSON")->required();
  cmd->add_option("--scheme", a->scheme, "binary, unary or bounded")->capture_default_str();
  cmd->add_option("--mu", a->mu, "Coefficient cap for the bounded scheme");
  cmd->add_option("--rho", a->rho, "Penalty weight: auto or a rational")->capture_default_str();
  cmd->add_option("--report", a->report, "Report JSON (default: <output>.report.json)");
  cmd->callback([a, &run] { run = [a](Context& ctx) { run_compile(ctx, *a); }; });
}

void add_anneal(CLI::App& app, Runner& run) {
  auto a = std::make_shared<AnnealArgs>();
  auto* cmd = app.add_subcommand("anneal", "Sample a .qubo or .ising model");
  cmd->add_option("model", a->model, "Model file")->required();
  cmd->add_option("--shots", a->shots, "Independent runs")->capture_default_str();
  cmd->add_option("--sweeps", a->sweeps, "Sweeps per run")->capture_default_str();
  cmd->add_flag("--pt", a->pt, "Parallel tempering instead of annealing");
  cmd->add_option("--replicas", a->replicas, "Tempering replicas")->capture_default_str();
  cmd->add_option("--exchange-interval", a->exchange_interval, "Sweeps between swaps")->capture_default_str();
  cmd->add_option("--beta-min", a->beta_min, "Hottest inverse temperature (0: from the model)");
  cmd->add_option("--beta-max", a->beta_max, "Coldest inverse temperature (0: from the model)");
  cmd->add_option("--schedule", a->shape, "geometric or linear")->capture_default_str();
  cmd->callback([a, &run] { run = [a](Context& ctx) { run_anneal(ctx, *a); }; });
}

void add_tts(CLI::App& app, Runner& run) {
  auto a = std::make_shared<TtsArgs>();
  auto* cmd = app.add_subcommand("tts", "Time to solution from a sample file");
  cmd->add_option("samples", a->samples, "JSON-lines samples")->required();
  cmd->add_option("--target", a->target, "Energy counted as success")->required();
  cmd->add_option("--confidence", a->confidence, "Target confidence s")->capture_default_str();
  cmd->add_option("--tau", a->tau, "Time per run")->capture_default_str();
  cmd->add_option("--shots-per-run", a->shots_per_run, "Shots per run m")->capture_default_str();
  cmd->add_option("--model", a->model, "Check the samples against this model first");
  cmd->callback([a, &run] { run = [a](Context& ctx) { run_tts(ctx, *a); }; });
}

void add_gama(CLI::App& app, Runner& run) {
  auto a = std::make_shared<GamaArgs>();
  auto* cmd = app.add_subcommand("gama", "Graver augmented multiseed optimization");
  cmd->add_option("problem", a->file, "Problem JSON with finite bounds")->required();
  cmd->add_option("--objective-file", a->objective_file, "Polynomial objective in the problem's variables");
  cmd->add_option("--scheme", a->scheme, "binary, unary or bounded")->capture_default_str();
  cmd->add_option("--mu", a->mu, "Coefficient cap for the bounded scheme");
  cmd->add_option("--width", a->config.width, "Kernel box width per variable")->capture_default_str();
  cmd->add_option("--kernel-shots", a->config.kernel_shots, "Annealer shots for the kernel")->capture_default_str();
  cmd->add_option("--seed-shots", a->config.seed_shots, "Annealer shots per seed round")->capture_default_str();
  cmd->add_option("--sweeps", a->config.sweeps, "Sweeps per annealer shot")->capture_default_str();
  cmd->add_option("--fraction", a->config.fraction, "Share of the basis used")->capture_default_str();
  cmd->add_option("--max-seeds", a->config.max_seeds, "Seeds augmented, 0 for all")->capture_default_str();
  cmd->add_option("--seed-rounds", a->config.seed_rounds, "Window re-centering rounds")->capture_default_str();
  cmd->add_option("--strategy", a->strategy, "greedy or bisection")->capture_default_str();
  cmd->callback([a, &run] { run = [a](Context& ctx) { run_gama(ctx, *a); }; });
}

void add_oracle(CLI::App& app, Runner& run) {
  auto a = std::make_shared<OracleArgs>();
  auto* cmd = app.add_subcommand("oracle", "Exhaustive optimum of a model or bounded problem");
  cmd->add_option("file", a->file, ".qubo, .ising or problem .json")->required();
  cmd->add_option("--max-argmins", a->max_argmins, "Argmins listed")->capture_default_str();
  cmd->callback([a, &run] { run = [a](Context& ctx) { run_oracle(ctx, *a); }; });
}

}  // namespace quip::cli
