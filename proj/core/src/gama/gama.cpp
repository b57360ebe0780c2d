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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "quip/common/errors.hpp"
#include "quip/common/parallel.hpp"
#include "quip/gama/gama.hpp"

namespace quip {
namespace {

Rational big(std::int64_t v) { return Rational(static_cast<long long>(v)); }

std::uint64_t stage_seed(std::uint64_t seed, std::uint64_t stage) { return seed ^ (stage * 0x9E3779B97F4A7C15ULL); }

constexpr std::uint64_t kKernelStage = 0;
constexpr std::uint64_t kFractionStage = 1;
constexpr std::uint64_t kSelectStage = 2;
constexpr std::uint64_t kSeedStage = 16;

IntVector residual(const IntMatrix& A, const IntVector& x, const IntVector& b) {
  IntVector r = A.apply(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == 0; });
}

std::int64_t l1(const IntVector& v) {
  std::int64_t s = 0;
  for (auto e : v) s += std::llabs(e);
  return s;
}

double squared_norm(const IntVector& v) {
  double s = 0;
  for (auto e : v) s += static_cast<double>(e) * static_cast<double>(e);
  return s;
}

IntVector negated(IntVector v) {
  for (auto& e : v) e = -e;
  return v;
}

IntVector combine(const IntVector& u, const IntVector& v, std::int64_t sign) {
  IntVector w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + sign * v[i];
  return w;
}

bool lex_positive(const LatticeVector& g) {
  for (auto e : g) {
    if (e != 0) return e > 0;
  }
  return false;
}

class StageClock {
 public:
  explicit StageClock(GamaReport& report) : report_(report), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    report_.timings.emplace_back(stage, std::chrono::duration<double>(now - start_).count());
    start_ = now;
  }

 private:
  GamaReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

QuboModel seed_qubo(const IntMatrix& A, const IntVector& b, const EncodingMap& encoding) {
  if (A.cols() != encoding.variable_count()) throw DimensionError("encoding does not match the column count of A");
  if (b.size() != A.rows()) throw DimensionError("right-hand side does not match the row count of A");
  const std::size_t m = A.rows(), bits = encoding.bit_count();
  const IntMatrix E = encoding.E();
  const IntVector L = encoding.L();
  // |r0 + C X|^2 with r0 = A L - b and C = A E.
  std::vector<Rational> r0(m);
  std::vector<std::vector<Rational>> C(m, std::vector<Rational>(bits));
  for (std::size_t r = 0; r < m; ++r) {
    r0[r] = -big(b[r]);
    for (std::size_t j = 0; j < A.cols(); ++j) r0[r] += big(A(r, j)) * big(L[j]);
    for (std::size_t k = 0; k < bits; ++k) {
      for (std::size_t j = 0; j < A.cols(); ++j) {
        if (E(j, k) != 0) C[r][k] += big(A(r, j)) * big(E(j, k));
      }
    }
  }
  QuboModel q(bits);
  for (std::size_t r = 0; r < m; ++r) {
    q.add_offset(r0[r] * r0[r]);
    for (std::size_t k = 0; k < bits; ++k) {
      if (C[r][k].is_zero()) continue;
      q.add_linear(k, C[r][k] * C[r][k] + Rational(2) * r0[r] * C[r][k]);
      for (std::size_t l = k + 1; l < bits; ++l) {
        if (!C[r][l].is_zero()) q.add_pair(k, l, Rational(2) * C[r][k] * C[r][l]);
      }
    }
  }
  return q;
}

QuboModel kernel_qubo(const IntMatrix& A, const EncodingMap& encoding) {
  return seed_qubo(A, IntVector(A.rows(), 0), encoding);
}

EncodingMap symmetric_box_encoding(std::size_t variables, std::size_t width, const EncodingScheme& scheme) {
  if (width < 1 || width > 62) throw ParameterError("encoding width must lie in [1, 62]");
  const std::int64_t half = std::int64_t{1} << (width - 1);
  std::vector<VariableEncoding> vars;
  for (std::size_t i = 0; i < variables; ++i) vars.push_back(make_encoding(-half, half - 1, scheme));
  return EncodingMap(std::move(vars));
}

GraverBasis extract_partial_graver(const SampleSet& samples, const EncodingMap& encoding, const IntMatrix& A,
                                   const ExtractOptions& options, ExtractStats* stats_out) {
  if (samples.vartype != Vartype::kBinary) throw ParameterError("kernel samples must be BINARY");
  if (A.cols() != encoding.variable_count()) throw DimensionError("encoding does not match the column count of A");
  ExtractStats stats;
  std::set<IntVector> decoded;
  for (const auto& rec : samples.records) decoded.insert(encoding.decode(rec.config));
  stats.distinct_samples = decoded.size();

  std::vector<LatticeVector> pool;
  std::map<IntVector, std::vector<IntVector>> near;  // residual -> vectors
  for (const auto& v : decoded) {
    const IntVector r = A.apply(v);
    if (is_zero(r)) {
      if (!is_zero(v)) {
        pool.push_back(v);
        ++stats.kernel_samples;
      }
    } else if (l1(r) <= options.near_kernel_l1) {
      near[r].push_back(v);
      ++stats.near_kernel_samples;
    }
  }

  auto add = [&](IntVector w) {
    if (is_zero(w)) return;
    pool.push_back(std::move(w));
    ++stats.combinations_added;
  };
  bool capped = false;
  for (const auto& [r, group] : near) {
    if (capped) break;
    // Same residual: differences land in the kernel.
    for (std::size_t i = 0; i < group.size() && !capped; ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        if (stats.pairs_examined == options.max_pairs) {
          capped = true;
          break;
        }
        ++stats.pairs_examined;
        add(combine(group[i], group[j], -1));
      }
    }
    // Opposite residuals: sums land in the kernel. Visit each pair of groups once.
    const IntVector minus = negated(r);
    if (!(r < minus)) continue;
    const auto other = near.find(minus);
    if (other == near.end()) continue;
    for (std::size_t i = 0; i < group.size() && !capped; ++i) {
      for (const auto& v : other->second) {
        if (stats.pairs_examined == options.max_pairs) {
          capped = true;
          break;
        }
        ++stats.pairs_examined;
        add(combine(group[i], v, 1));
      }
    }
  }

  GraverBasis out;
  out.A = A;
  out.elements = minimal_filter(std::move(pool), true);
  out.partial = true;
  if (options.reference_limit > 0) {
    try {
      PottierOptions po;
      po.max_elements = options.reference_limit;
      const GraverBasis reference = pottier(A, po);
      stats.reference_computed = true;
      out.partial = reference.elements != out.elements;
    } catch (const ComputationLimitError&) {
    }
  }
  if (stats_out) *stats_out = stats;
  return out;
}

void GamaConfig::validate() const {
  if (kernel_shots < 1 || seed_shots < 1) throw ParameterError("shot budgets must be at least 1");
  if (sweeps < 1) throw ParameterError("sweeps must be at least 1");
  if (seed_rounds < 1) throw ParameterError("seed rounds must be at least 1");
  if (!(fraction > 0 && fraction <= 1)) throw ParameterError("basis fraction must lie in (0, 1]");
  if (width < 1 || width > 62) throw ParameterError("encoding width must lie in [1, 62]");
  for (auto w : widths) {
    if (w < 1 || w > 62) throw ParameterError("encoding width must lie in [1, 62]");
  }
}

GamaReport gama_solve(const ConstraintSystem& ip_in, const ObjectiveOracle& f, const GamaConfig& config) {
  config.validate();
  ConstraintSystem original = ip_in;
  original.normalize();
  const std::size_t n = original.variable_count();
  for (std::size_t j = 0; j < n; ++j) {
    if (!original.lower[j] || !original.upper[j]) {
      throw UnboundedError("variable " + std::to_string(j) + " needs finite bounds");
    }
  }
  if (!config.widths.empty() && config.widths.size() != n) {
    throw DimensionError("per-variable widths must match the variable count");
  }
  const ConstraintSystem ip = inequality_to_equality(original);
  const std::size_t total = ip.variable_count();
  const ObjectiveOracle g = [&f, n](std::span<const std::int64_t> x) { return f(x.first(n)); };

  GamaReport report;
  StageClock clock(report);

  // Kernel stage. Slack columns share the default width.
  std::vector<VariableEncoding> kernel_vars;
  for (std::size_t j = 0; j < total; ++j) {
    const std::size_t w = j < config.widths.size() ? config.widths[j] : config.width;
    const std::int64_t half = std::int64_t{1} << (w - 1);
    kernel_vars.push_back(make_encoding(-half, half - 1, config.scheme));
  }
  const EncodingMap kernel_encoding(std::move(kernel_vars));
  AnnealOptions anneal;
  anneal.threads = config.threads;
  AnnealSchedule schedule;
  schedule.sweeps = config.sweeps;
  anneal.schedule = schedule;
  anneal.shots = config.kernel_shots;
  anneal.seed = stage_seed(config.seed, kKernelStage);
  const SampleSet kernel_samples = simulated_anneal(kernel_qubo(ip.A, kernel_encoding), anneal);
  clock.lap("kernel_anneal");
  const GraverBasis basis = extract_partial_graver(kernel_samples, kernel_encoding, ip.A, config.extract,
                                                   &report.extract);
  report.basis_size = basis.elements.size();
  report.basis_checked = report.extract.reference_computed;
  report.basis_complete = report.basis_checked && !basis.partial;
  clock.lap("extract");

  // Fraction cut over +-g pairs.
  std::vector<LatticeVector> positive;
  for (const auto& e : basis.elements) {
    if (lex_positive(e)) positive.push_back(e);
  }
  report.fraction_seed = stage_seed(config.seed, kFractionStage);
  std::size_t keep = static_cast<std::size_t>(std::ceil(config.fraction * static_cast<double>(positive.size())));
  keep = std::min(keep, positive.size());
  Rng pick(report.fraction_seed, 0);
  for (std::size_t i = 0; i < keep; ++i) {
    std::swap(positive[i], positive[i + pick.below(positive.size() - i)]);
  }
  std::vector<LatticeVector> used;
  for (std::size_t i = 0; i < keep; ++i) {
    used.push_back(positive[i]);
    used.push_back(negated(positive[i]));
  }
  std::sort(used.begin(), used.end());
  report.basis_used = used.size();

  // Seed stage with adaptive windows.
  std::vector<std::int64_t> center(total);
  std::size_t seed_width = config.width;
  for (std::size_t j = 0; j < total; ++j) {
    center[j] = *ip.lower[j] + (*ip.upper[j] - *ip.lower[j] + 1) / 2;
  }
  std::set<IntVector> feasible;
  double best_residual = std::numeric_limits<double>::infinity();
  anneal.shots = config.seed_shots;
  for (std::size_t round = 0; round < config.seed_rounds && feasible.empty(); ++round) {
    ++report.seed_rounds;
    const std::int64_t half = std::int64_t{1} << (seed_width - 1);
    std::vector<VariableEncoding> vars;
    for (std::size_t j = 0; j < total; ++j) {
      const std::int64_t lo = std::max(*ip.lower[j], center[j] - half);
      const std::int64_t hi = std::min(*ip.upper[j], center[j] + half - 1);
      vars.push_back(make_encoding(std::min(lo, hi), std::max(lo, hi), config.scheme));
    }
    const EncodingMap window(std::move(vars));
    anneal.seed = stage_seed(config.seed, kSeedStage + round);
    const SampleSet seeds = simulated_anneal(seed_qubo(ip.A, ip.b, window), anneal);
    report.seeds_attempted += config.seed_shots;
    IntVector best_point;
    for (const auto& rec : seeds.records) {
      IntVector x = window.decode(rec.config);
      const double res = squared_norm(residual(ip.A, x, ip.b));
      if (res == 0 && ip.within_bounds(x)) feasible.insert(x);
      if (res < best_residual) {
        best_residual = res;
        best_point = x;
      }
    }
    if (feasible.empty() && !best_point.empty()) {
      center = best_point;
      seed_width = std::min<std::size_t>(seed_width * 2, 62);
    }
  }
  clock.lap("seed_anneal");
  if (feasible.empty()) {
    throw NoSeedError("no feasible seed after " + std::to_string(report.seed_rounds) + " rounds of " +
                          std::to_string(config.seed_shots) + " shots (best squared residual " +
                          std::to_string(best_residual) + ")",
                      best_residual);
  }
  report.seeds_found = feasible.size();

  std::vector<IntVector> chosen(feasible.begin(), feasible.end());
  report.select_seed = stage_seed(config.seed, kSelectStage);
  if (config.max_seeds > 0 && chosen.size() > config.max_seeds) {
    Rng select(report.select_seed, 0);
    for (std::size_t i = 0; i < config.max_seeds; ++i) {
      std::swap(chosen[i], chosen[i + select.below(chosen.size() - i)]);
    }
    chosen.resize(config.max_seeds);
  }
  std::vector<std::pair<double, IntVector>> ordered;
  for (auto& x : chosen) ordered.emplace_back(g(x), std::move(x));
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  AugmentOptions augment;
  augment.strategy = config.strategy;
  report.runs.resize(ordered.size());
  parallel_for(ordered.size(), config.threads, [&](std::size_t k) {
    AugmentResult r = graver_augment(ip, g, used, ordered[k].second, augment);
    SeedRun& run = report.runs[k];
    run.start.assign(ordered[k].second.begin(), ordered[k].second.begin() + static_cast<std::ptrdiff_t>(n));
    run.x.assign(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(n));
    run.trajectory = std::move(r.trajectory);
    run.objective = run.trajectory.back();
  });
  for (std::size_t k = 0; k < report.runs.size(); ++k) {
    if (k == 0 || report.runs[k].objective < report.best_objective) {
      report.best_objective = report.runs[k].objective;
      report.best_run = k;
    }
  }
  report.best = report.runs[report.best_run].x;
  clock.lap("augment");
  return report;
}

ObjectiveOracle capital_budgeting_objective(std::vector<double> mu, std::vector<double> sigma, double epsilon) {
  if (mu.size() != sigma.size()) throw DimensionError("mu and sigma differ in length");
  if (!(epsilon > 0 && epsilon < 1)) throw ParameterError("epsilon must lie strictly between 0 and 1");
  const double factor = (1 - epsilon) / epsilon;
  return [mu = std::move(mu), sigma = std::move(sigma), factor](std::span<const std::int64_t> x) {
    if (x.size() != mu.size()) throw DimensionError("point length differs from the objective");
    double linear = 0, risk = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double xi = static_cast<double>(x[i]);
      linear += mu[i] * xi;
      risk += sigma[i] * sigma[i] * xi * xi;
    }
    return -linear + std::sqrt(factor * risk);
  };
}

}  // namespace quip
