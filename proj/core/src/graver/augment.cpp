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
#include <cmath>
#include <optional>

#include "quip/common/errors.hpp"
#include "quip/graver/graver.hpp"

namespace quip {
namespace {

class Walker {
 public:
  Walker(const ConstraintSystem& ip, const ObjectiveOracle& f, const AugmentOptions& options)
      : ip_(ip), f_(f), options_(options) {}

  // z + alpha t; throws ComputationLimitError on 64-bit overflow.
  IntVector point(const IntVector& z, const LatticeVector& t, std::int64_t alpha) const {
    IntVector out(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
      const __int128 v = static_cast<__int128>(z[j]) + static_cast<__int128>(alpha) * t[j];
      if (v > INT64_MAX || v < INT64_MIN) throw ComputationLimitError("augmentation step overflows");
      out[j] = static_cast<std::int64_t>(v);
    }
    return out;
  }

  double value(const IntVector& z, const LatticeVector& t, std::int64_t alpha) const {
    return f_(point(z, t, alpha));
  }

  // Largest feasible step, or nullopt when no bound limits the direction.
  std::optional<std::int64_t> max_step(const IntVector& z, const LatticeVector& t) const {
    std::optional<std::int64_t> limit;
    for (std::size_t j = 0; j < z.size(); ++j) {
      std::optional<std::int64_t> room;
      if (t[j] > 0 && ip_.upper[j]) room = (*ip_.upper[j] - z[j]) / t[j];
      if (t[j] < 0 && ip_.lower[j]) room = (z[j] - *ip_.lower[j]) / -t[j];
      if (room && (!limit || *room < *limit)) limit = room;
    }
    return limit;
  }

  // Step range [1, hi] to search, or 0 when the direction should be skipped.
  // Unbounded directions are followed by doubling while f decreases.
  std::int64_t search_limit(const IntVector& z, const LatticeVector& t, double fz) const {
    if (auto hi = max_step(z, t)) return *hi;
    if (!(value(z, t, 1) < fz)) return 0;
    std::int64_t alpha = 1;
    while (value(z, t, 2 * alpha) < value(z, t, alpha)) {
      alpha *= 2;
      if (alpha > options_.max_step) {
        throw UnboundedError("objective decreases without bound along " + to_string(t));
      }
    }
    return 2 * alpha;
  }

  // Integer ternary search for a minimizer of a unimodal step function.
  std::int64_t ternary_min(const IntVector& z, const LatticeVector& t, std::int64_t lo,
                           std::int64_t hi) const {
    while (hi - lo > 2) {
      const std::int64_t m1 = lo + (hi - lo) / 3;
      const std::int64_t m2 = hi - (hi - lo) / 3;
      if (value(z, t, m1) <= value(z, t, m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    std::int64_t best = lo;
    double best_value = value(z, t, lo);
    for (std::int64_t a = lo + 1; a <= hi; ++a) {
      const double v = value(z, t, a);
      if (v < best_value) {
        best = a;
        best_value = v;
      }
    }
    return best;
  }

  // Last step at which the discrete slope is still negative.
  std::int64_t slope_change(const IntVector& z, const LatticeVector& t, std::int64_t hi) const {
    std::int64_t lo = 1;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (value(z, t, mid) < value(z, t, mid - 1)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return lo;
  }

 private:
  const ConstraintSystem& ip_;
  const ObjectiveOracle& f_;
  const AugmentOptions& options_;
};

double tolerance(double fz) { return 1e-12 * std::max(1.0, std::abs(fz)); }

}  // namespace

AugmentResult graver_augment(const ConstraintSystem& ip_in, const ObjectiveOracle& f,
                             std::span<const LatticeVector> G, IntVector z0,
                             const AugmentOptions& options) {
  ConstraintSystem ip = ip_in;
  ip.normalize();
  if (ip.has_inequalities()) {
    throw PreconditionError("augmentation needs an equality system; add slack variables first");
  }
  if (z0.size() != ip.variable_count()) throw DimensionError("start point has the wrong length");
  if (!ip.is_feasible(z0)) throw PreconditionError("start point " + to_string(z0) + " is infeasible");
  for (const auto& g : G) {
    if (g.size() != z0.size()) throw DimensionError("direction has the wrong length");
  }

  Walker walk(ip, f, options);
  AugmentResult result;
  IntVector z = std::move(z0);
  double fz = f(z);
  result.trajectory.push_back(fz);

  while (true) {
    if (result.iterations >= options.max_iterations) {
      throw ComputationLimitError("augmentation exceeded " +
                                  std::to_string(options.max_iterations) + " iterations");
    }
    const double threshold = fz - tolerance(fz);
    const LatticeVector* best_dir = nullptr;
    std::int64_t best_step = 0;
    double best_value = threshold;
    for (const auto& t : G) {
      if (std::all_of(t.begin(), t.end(), [](std::int64_t x) { return x == 0; })) continue;
      const std::int64_t hi = walk.search_limit(z, t, fz);
      if (hi < 1) continue;
      if (options.strategy == AugmentStrategy::kBisection) {
        if (!(walk.value(z, t, 1) < threshold)) continue;
        best_dir = &t;
        best_step = walk.slope_change(z, t, hi);
        best_value = walk.value(z, t, best_step);
        if (!(best_value < threshold)) {
          best_step = 1;
          best_value = walk.value(z, t, 1);
        }
        break;
      }
      std::int64_t candidates[3] = {1, hi, walk.ternary_min(z, t, 1, hi)};
      for (std::int64_t alpha : candidates) {
        const double v = walk.value(z, t, alpha);
        if (v < best_value) {
          best_dir = &t;
          best_step = alpha;
          best_value = v;
        }
      }
    }
    if (best_dir == nullptr || !(best_value < threshold)) break;
    z = walk.point(z, *best_dir, best_step);
    fz = best_value;
    result.trajectory.push_back(fz);
    ++result.iterations;
  }
  result.x = std::move(z);
  return result;
}

}  // namespace quip
