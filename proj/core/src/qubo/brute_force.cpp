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
#include <limits>

#include "quip/common/errors.hpp"
#include "quip/common/parallel.hpp"
#include "quip/qubo/models.hpp"

namespace quip {
namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

Config decode_index(std::uint64_t index, std::size_t n) {
  Config x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::int8_t>((index >> i) & 1U);
  return x;
}

struct BlockResult {
  bool has_min = false;
  Rational energy;
  std::vector<Config> argmins;  // sorted, at most max_argmins
  bool truncated = false;
  CompensatedSum partition;
};

class Enumerator {
 public:
  Enumerator(const QuboModel& q, const BruteForceOptions& options) : q_(q), options_(options) {
    const std::size_t n = q.size();
    linear_.resize(n);
    adjacency_.resize(n);
    double scale = 1.0 + std::abs(q.offset().to_double());
    for (std::size_t i = 0; i < n; ++i) {
      linear_[i] = q.linear()[i].to_double();
      scale += std::abs(linear_[i]);
    }
    for (const auto& [key, v] : q.pairs()) {
      const double w = v.to_double();
      adjacency_[key.first].push_back({key.second, w});
      adjacency_[key.second].push_back({key.first, w});
      scale += std::abs(w);
    }
    tolerance_ = 1e-8 * scale;
  }

  // Enumerates all configurations whose high bits equal `prefix`.
  BlockResult run_block(std::uint64_t prefix, std::size_t low_bits) const {
    const std::size_t n = q_.size();
    BlockResult out;
    Config x = decode_index(prefix << low_bits, n);
    double e = full_energy(x);
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::uint64_t, double>> candidates;
    std::uint64_t index = prefix << low_bits;
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t k = 0;; ++k) {
      out.partition.add(std::exp(-options_.beta * e));
      if (e <= best + tolerance_) {
        if (e < best) best = e;
        candidates.emplace_back(index, e);
        if (candidates.size() >= 2 * options_.max_argmins + 64) compact(candidates, best, out);
      }
      if (k + 1 == steps) break;
      const std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(k + 1));
      e += flip_delta(x, bit);
      x[bit] ^= 1;
      index ^= std::uint64_t{1} << bit;
    }
    compact(candidates, best, out);
    return out;
  }

 private:
  struct Neighbor {
    std::size_t j;
    double w;
  };

  double full_energy(const Config& x) const {
    double e = q_.offset().to_double();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      e += linear_[i];
      for (const auto& nb : adjacency_[i]) {
        if (nb.j > i && x[nb.j] != 0) e += nb.w;
      }
    }
    return e;
  }

  double flip_delta(const Config& x, std::size_t i) const {
    double field = linear_[i];
    for (const auto& nb : adjacency_[i]) {
      if (x[nb.j] != 0) field += nb.w;
    }
    return x[i] != 0 ? -field : field;
  }

  // Exact re-evaluation of the candidate list; keeps exact minimizers only.
  void compact(std::vector<std::pair<std::uint64_t, double>>& candidates, double best,
               BlockResult& out) const {
    for (const auto& [index, e] : candidates) {
      if (e > best + tolerance_) continue;
      Config x = decode_index(index, q_.size());
      Rational exact = q_.energy(x);
      if (!out.has_min || exact < out.energy) {
        out.has_min = true;
        out.energy = std::move(exact);
        out.argmins.clear();
        out.argmins.push_back(std::move(x));
      } else if (exact == out.energy) {
        out.argmins.push_back(std::move(x));
      }
    }
    candidates.clear();
    std::sort(out.argmins.begin(), out.argmins.end());
    if (out.argmins.size() > options_.max_argmins) {
      out.argmins.resize(options_.max_argmins);
      out.truncated = true;
    }
  }

  const QuboModel& q_;
  const BruteForceOptions& options_;
  std::vector<double> linear_;
  std::vector<std::vector<Neighbor>> adjacency_;
  double tolerance_ = 0;
};

}  // namespace

BruteForceResult brute_force(const QuboModel& q, const BruteForceOptions& options) {
  const std::size_t n = q.size();
  if (n > kBruteForceMaxVariables) {
    throw ComputationLimitError("brute force is capped at " +
                                std::to_string(kBruteForceMaxVariables) + " variables, model has " +
                                std::to_string(n));
  }
  BruteForceResult result;
  if (n == 0) {
    result.energy = q.offset();
    result.argmins.push_back({});
    result.partition = std::exp(-options.beta * q.offset().to_double());
    return result;
  }
  // The block split depends only on n, so the reduction order is fixed.
  const std::size_t high_bits = std::min<std::size_t>(n, 6);
  const std::size_t low_bits = n - high_bits;
  const std::size_t blocks = std::size_t{1} << high_bits;
  Enumerator enumerator(q, options);
  std::vector<BlockResult> parts(blocks);
  parallel_for(blocks, options.threads, [&](std::size_t b) {
    parts[b] = enumerator.run_block(b, low_bits);
  });

  CompensatedSum z;
  bool has_min = false;
  for (auto& part : parts) {
    z.add(part.partition.value());
    if (!part.has_min) continue;
    if (!has_min || part.energy < result.energy) {
      has_min = true;
      result.energy = part.energy;
      result.argmins = std::move(part.argmins);
      result.argmins_truncated = part.truncated;
    } else if (part.energy == result.energy) {
      result.argmins.insert(result.argmins.end(), std::make_move_iterator(part.argmins.begin()),
                            std::make_move_iterator(part.argmins.end()));
      result.argmins_truncated = result.argmins_truncated || part.truncated;
    }
  }
  std::sort(result.argmins.begin(), result.argmins.end());
  if (result.argmins.size() > options.max_argmins) {
    result.argmins.resize(options.max_argmins);
    result.argmins_truncated = true;
  }
  result.partition = z.value();
  return result;
}

BruteForceResult brute_force(const IsingModel& m, const BruteForceOptions& options) {
  auto result = brute_force(ising_to_qubo(m), options);
  for (auto& c : result.argmins) c = bits_to_spins(c);
  return result;
}

}  // namespace quip
