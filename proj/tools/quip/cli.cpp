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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "quip/common/digest.hpp"
#include "quip/common/errors.hpp"
#include "quip/common/parallel.hpp"
#include "quip/io/problem.hpp"
#include "quip/version.hpp"

namespace quip::cli {

namespace {

void pretty_into(const ordered_json& j, std::size_t indent, std::string& out) {
  const auto scalar = [](const ordered_json& e) { return !e.is_structured(); };
  if (!j.is_structured() || j.empty() || (j.is_array() && std::all_of(j.begin(), j.end(), scalar))) {
    out += j.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  out += j.is_array() ? "[\n" : "{\n";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += ordered_json(key).dump() + ": ";
    pretty_into(value, indent + 2, out);
  }
  out += "\n" + std::string(indent, ' ') + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string pretty(const ordered_json& doc) {
  std::string out;
  pretty_into(doc, 0, out);
  return out + "\n";
}

std::string Context::read_input(const std::string& path) {
  std::string text = read_file(path);
  inputs_.emplace_back(path, digest_hex(text));
  return text;
}

void Context::write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    out_ << text;
    out_.flush();
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParameterError("cannot write '" + path + "'");
    f << text;
    if (!f.flush()) throw ParameterError("cannot write '" + path + "'");
  }
  outputs_.emplace_back(path.empty() ? "-" : path, digest_hex(text));
}

void Context::lap(const std::string& stage) {
  const auto now = std::chrono::steady_clock::now();
  timings_.emplace_back(stage, std::chrono::duration<double>(now - lap_start_).count());
  lap_start_ = now;
}

void Context::finish() {
  std::string path = manifest;
  if (path.empty() && !output.empty()) path = output + ".manifest.json";
  if (path.empty()) return;
  ordered_json doc;
  doc["format"] = "quip-manifest";
  doc["version"] = 1;
  doc["quip_version"] = kVersion;
  doc["command"] = command;
  doc["argv"] = args_;
  doc["seed"] = seed;
  doc["threads"] = threads;
  doc["config"] = config;
  auto files = [](const std::vector<std::pair<std::string, std::string>>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& [p, d] : v) a.push_back({{"path", p}, {"digest", d}});
    return a;
  };
  doc["inputs"] = files(inputs_);
  doc["outputs"] = files(outputs_);
  ordered_json t = ordered_json::object();
  for (const auto& [stage, seconds] : timings_) t[stage] = seconds;
  t["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  doc["timings"] = t;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParameterError("cannot write '" + path + "'");
  f << pretty(doc);
}

namespace {

std::size_t environment_threads() {
  const char* env = std::getenv("QUIP_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    const long v = std::stol(env);
    return v > 0 ? static_cast<std::size_t>(v) : 0;
  } catch (...) {
    return 0;
  }
}

void report_infeasible(std::ostream& err, const std::string& reason, const std::string& message,
                       const ordered_json& extra = ordered_json::object()) {
  ordered_json doc;
  doc["error"] = "infeasible";
  doc["reason"] = reason;
  doc["message"] = message;
  for (const auto& [k, v] : extra.items()) doc[k] = v;
  err << doc.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebraic and annealing-based integer optimization", "quip"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  Context ctx(args, out, err);
  std::size_t threads = 0;
  app.add_option("--seed", ctx.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--threads", threads, "Worker cap, 0 for all cores (QUIP_THREADS overrides)");
  app.add_option("-o,--output", ctx.output, "Output file (default: stdout)");
  app.add_option("--manifest", ctx.manifest, "Run manifest path (default: <output>.manifest.json)");

  Runner runner;
  add_groebner(app, runner);
  add_ct_solve(app, runner);
  add_color(app, runner);
  add_graver(app, runner);
  add_compile(app, runner);
  add_anneal(app, runner);
  add_tts(app, runner);
  add_gama(app, runner);
  add_oracle(app, runner);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  ctx.threads = environment_threads();
  if (ctx.threads == 0) ctx.threads = threads;
  set_default_thread_count(ctx.threads);
  ctx.command = app.get_subcommands().front()->get_name();

  try {
    runner(ctx);
    ctx.finish();
    return kOk;
  } catch (const NoSeedError& e) {
    report_infeasible(err, "no_feasible_seed", e.what(), {{"best_squared_residual", e.best_residual()}});
    return kInfeasible;
  } catch (const InfeasibleError& e) {
    report_infeasible(err, e.reason(), e.what());
    return kInfeasible;
  } catch (const ComputationLimitError& e) {
    err << "quip: limit exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const ParameterError& e) {
    err << "quip: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "quip: error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace quip::cli
