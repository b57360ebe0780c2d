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
#include <istream>
#include <limits>
#include <map>
#include <ostream>

#include "json.hpp"
#include "quip/anneal/anneal.hpp"
#include "quip/common/errors.hpp"
#include "quip/qubo/io.hpp"

namespace quip {
namespace {

using nlohmann::json;

bool record_less(const SampleRecord& a, const SampleRecord& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  return a.config < b.config;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

template <typename Model>
void verify_against(const SampleSet& s, const Model& model, Vartype expected) {
  s.check_structure();
  if (s.vartype != expected) throw ValidationError("vartype", "samples do not match the model's variable type");
  if (s.variables != model.size()) throw ValidationError("variables", "samples do not match the model size");
  const std::string digest = model_digest(model);
  if (s.model_digest != digest) {
    throw ValidationError("model_digest", "samples were drawn from a different model (" + s.model_digest +
                                              " vs " + digest + ")");
  }
  for (std::size_t r = 0; r < s.records.size(); ++r) {
    const double e = model.energy(s.records[r].config).to_double();
    if (!close(s.records[r].energy, e)) {
      throw ValidationError("records/" + std::to_string(r) + "/energy",
                            "recorded energy does not match re-evaluation");
    }
  }
}

json schedule_json(const AnnealSchedule& s) {
  return json{{"beta_min", s.beta_min},
              {"beta_max", s.beta_max},
              {"sweeps", s.sweeps},
              {"shape", AnnealSchedule::shape_name(s.shape)},
              {"replicas", s.replicas},
              {"exchange_interval", s.exchange_interval}};
}

AnnealSchedule schedule_from_json(const json& j) {
  AnnealSchedule s;
  s.beta_min = j.at("beta_min").get<double>();
  s.beta_max = j.at("beta_max").get<double>();
  s.sweeps = j.at("sweeps").get<std::size_t>();
  s.shape = AnnealSchedule::shape_from_name(j.at("shape").get<std::string>());
  s.replicas = j.at("replicas").get<std::size_t>();
  s.exchange_interval = j.at("exchange_interval").get<std::size_t>();
  return s;
}

template <typename Model>
ChainBreakReport collapse_chains(const SampleSet& samples, const std::vector<std::vector<std::size_t>>& chains,
                                 const Model& logical) {
  samples.check_structure();
  if (logical.size() != chains.size()) {
    throw DimensionError("logical model has " + std::to_string(logical.size()) + " variables for " +
                         std::to_string(chains.size()) + " chains");
  }
  std::vector<int> owner(samples.variables, -1);
  for (std::size_t c = 0; c < chains.size(); ++c) {
    if (chains[c].empty()) throw ParameterError("chain " + std::to_string(c) + " is empty");
    for (std::size_t v : chains[c]) {
      if (v >= samples.variables) throw DimensionError("chain variable " + std::to_string(v) + " out of range");
      if (owner[v] >= 0) {
        throw ParameterError("chains " + std::to_string(owner[v]) + " and " + std::to_string(c) +
                             " overlap at variable " + std::to_string(v));
      }
      owner[v] = static_cast<int>(c);
    }
  }
  const bool spin = samples.vartype == Vartype::kSpin;
  ChainBreakReport report;
  report.break_fraction.assign(chains.size(), 0.0);
  std::vector<std::uint64_t> breaks(chains.size(), 0);
  std::uint64_t any = 0;
  std::map<Config, std::uint64_t> collapsed;
  for (const auto& rec : samples.records) {
    Config out(chains.size());
    bool broken = false;
    for (std::size_t c = 0; c < chains.size(); ++c) {
      int votes = 0;
      for (std::size_t v : chains[c]) votes += (spin ? rec.config[v] > 0 : rec.config[v] != 0) ? 1 : -1;
      if (static_cast<std::size_t>(std::abs(votes)) != chains[c].size()) {
        breaks[c] += rec.count;
        broken = true;
      }
      const bool up = votes >= 0;
      out[c] = static_cast<std::int8_t>(up ? 1 : (spin ? -1 : 0));
    }
    if (broken) any += rec.count;
    collapsed[out] += rec.count;
  }
  const double total = static_cast<double>(samples.total_count());
  for (std::size_t c = 0; c < chains.size(); ++c) {
    report.break_fraction[c] = total > 0 ? static_cast<double>(breaks[c]) / total : 0.0;
  }
  report.any_break_fraction = total > 0 ? static_cast<double>(any) / total : 0.0;
  SampleSet& out = report.collapsed;
  out.vartype = samples.vartype;
  out.variables = chains.size();
  out.seed = samples.seed;
  out.model_digest = model_digest(logical);
  out.sampler = samples.sampler;
  out.schedule = samples.schedule;
  out.chain_break_fraction = report.any_break_fraction;
  for (auto& [config, count] : collapsed) {
    out.records.push_back({config, logical.energy(config).to_double(), count});
  }
  out.sort();
  return report;
}

}  // namespace

std::string vartype_name(Vartype v) { return v == Vartype::kSpin ? "SPIN" : "BINARY"; }

Vartype vartype_from_name(const std::string& name) {
  if (name == "SPIN") return Vartype::kSpin;
  if (name == "BINARY") return Vartype::kBinary;
  throw ParameterError("unknown vartype '" + name + "' (expected SPIN or BINARY)");
}

std::uint64_t SampleSet::total_count() const {
  std::uint64_t t = 0;
  for (const auto& r : records) t += r.count;
  return t;
}

double SampleSet::best_energy() const {
  if (records.empty()) throw PreconditionError("sample set is empty");
  return records.front().energy;
}

void SampleSet::sort() { std::sort(records.begin(), records.end(), record_less); }

std::vector<SampleRecord> SampleSet::aggregate(std::vector<Config> shots) {
  std::map<Config, std::uint64_t> counts;
  for (auto& s : shots) ++counts[std::move(s)];
  std::vector<SampleRecord> out;
  out.reserve(counts.size());
  for (auto& [config, count] : counts) out.push_back({config, 0.0, count});
  return out;
}

void SampleSet::check_structure() const {
  for (std::size_t r = 0; r < records.size(); ++r) {
    const std::string where = "records/" + std::to_string(r);
    const auto& rec = records[r];
    if (rec.count < 1) throw ValidationError(where + "/count", "count must be at least 1");
    if (rec.config.size() != variables) throw ValidationError(where + "/config", "wrong number of variables");
    for (auto v : rec.config) {
      const bool ok = vartype == Vartype::kSpin ? (v == 1 || v == -1) : (v == 0 || v == 1);
      if (!ok) throw ValidationError(where + "/config", "value outside the " + vartype_name(vartype) + " alphabet");
    }
    if (!std::isfinite(rec.energy)) throw ValidationError(where + "/energy", "energy is not finite");
    if (r > 0 && !record_less(records[r - 1], rec)) {
      throw ValidationError(where, "records are not strictly sorted by energy then configuration");
    }
  }
}

void SampleSet::verify(const QuboModel& model) const { verify_against(*this, model, Vartype::kBinary); }
void SampleSet::verify(const IsingModel& model) const { verify_against(*this, model, Vartype::kSpin); }

void write_samples(std::ostream& out, const SampleSet& s) {
  json header{{"format", "quip-samples"},
              {"version", 1},
              {"vartype", vartype_name(s.vartype)},
              {"variables", s.variables},
              {"seed", s.seed},
              {"model_digest", s.model_digest},
              {"sampler", s.sampler},
              {"schedule", s.schedule ? schedule_json(*s.schedule) : json(nullptr)},
              {"chain_break_fraction", s.chain_break_fraction ? json(*s.chain_break_fraction) : json(nullptr)},
              {"records", s.records.size()},
              {"total_count", s.total_count()}};
  out << header.dump() << '\n';
  for (const auto& r : s.records) {
    json config = json::array();
    for (auto v : r.config) config.push_back(static_cast<int>(v));
    out << json{{"config", config}, {"energy", r.energy}, {"count", r.count}}.dump() << '\n';
  }
}

SampleSet read_samples(std::istream& in) {
  SampleSet s;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::size_t expected_records = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError("malformed JSON line", line_no, static_cast<int>(e.byte));
    }
    try {
      if (!have_header) {
        if (j.value("format", "") != "quip-samples") throw ParseError("missing quip-samples header", line_no, 1);
        if (j.at("version").get<int>() != 1) throw ParseError("unsupported samples version", line_no, 1);
        s.vartype = vartype_from_name(j.at("vartype").get<std::string>());
        s.variables = j.at("variables").get<std::size_t>();
        s.seed = j.at("seed").get<std::uint64_t>();
        s.model_digest = j.at("model_digest").get<std::string>();
        s.sampler = j.value("sampler", "");
        if (j.contains("schedule") && !j["schedule"].is_null()) s.schedule = schedule_from_json(j["schedule"]);
        if (j.contains("chain_break_fraction") && !j["chain_break_fraction"].is_null()) {
          s.chain_break_fraction = j["chain_break_fraction"].get<double>();
        }
        expected_records = j.at("records").get<std::size_t>();
        have_header = true;
        continue;
      }
      SampleRecord r;
      for (const auto& v : j.at("config")) r.config.push_back(static_cast<std::int8_t>(v.get<int>()));
      r.energy = j.at("energy").get<double>();
      r.count = j.at("count").get<std::uint64_t>();
      s.records.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad samples field: ") + e.what(), line_no, 1);
    } catch (const ParameterError& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  if (!have_header) throw ParseError("samples file has no header");
  if (s.records.size() != expected_records) {
    throw ParseError("header announces " + std::to_string(expected_records) + " records, found " +
                     std::to_string(s.records.size()));
  }
  s.check_structure();
  return s;
}

double tts_formula(double p, double tau, double confidence, std::size_t shots_per_run) {
  if (!(confidence > 0 && confidence < 1)) throw ParameterError("confidence must lie strictly between 0 and 1");
  if (!(tau > 0)) throw ParameterError("time per shot must be positive");
  if (!(p >= 0 && p <= 1)) throw ParameterError("success probability must lie in [0, 1]");
  const double run = static_cast<double>(shots_per_run) * tau;
  if (p == 0) return std::numeric_limits<double>::infinity();
  if (p == 1) return run;
  return run * std::max(1.0, std::log(1 - confidence) / std::log(1 - p));
}

TtsResult tts(const SampleSet& samples, double tau, double target, double confidence, std::size_t shots_per_run) {
  const std::uint64_t total = samples.total_count();
  if (total == 0) throw PreconditionError("sample set is empty");
  const double slack = 1e-9 * std::max(1.0, std::abs(target));
  std::uint64_t hits = 0;
  for (const auto& r : samples.records) {
    if (r.energy <= target + slack) hits += r.count;
  }
  TtsResult out;
  out.success_probability = static_cast<double>(hits) / static_cast<double>(total);
  out.tts = tts_formula(out.success_probability, tau, confidence, shots_per_run);
  return out;
}

ChainBreakReport chain_break_stats(const SampleSet& samples, const std::vector<std::vector<std::size_t>>& chains,
                                   const IsingModel& logical) {
  if (samples.vartype != Vartype::kSpin) throw ParameterError("an Ising logical model needs SPIN samples");
  return collapse_chains(samples, chains, logical);
}

ChainBreakReport chain_break_stats(const SampleSet& samples, const std::vector<std::vector<std::size_t>>& chains,
                                   const QuboModel& logical) {
  if (samples.vartype != Vartype::kBinary) throw ParameterError("a QUBO logical model needs BINARY samples");
  return collapse_chains(samples, chains, logical);
}

}  // namespace quip
