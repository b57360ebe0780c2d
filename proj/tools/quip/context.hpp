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

#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "quip/algebra/rational.hpp"
#include "quip/common/matrix.hpp"

namespace quip::cli {

using nlohmann::ordered_json;

// Indented JSON with arrays of scalars kept on one line.
std::string pretty(const ordered_json& doc);

// State shared by one subcommand invocation: resolved common options, the
// inputs read and outputs written (with digests), and stage timings for the
// run manifest.
class Context {
 public:
  Context(std::vector<std::string> args, std::ostream& out, std::ostream& err)
      : args_(std::move(args)), out_(out), err_(err), start_(std::chrono::steady_clock::now()) {}

  std::string command;
  std::uint64_t seed = 0;
  std::size_t threads = 0;  // resolved; QUIP_THREADS wins over --threads
  std::string output;       // -o, empty for stdout
  std::string manifest;     // --manifest, empty for <output>.manifest.json
  ordered_json config = ordered_json::object();

  std::ostream& err() { return err_; }

  // Reads a whole input file and records its digest.
  std::string read_input(const std::string& path);
  // Digest of the most recently read input.
  const std::string& last_digest() const { return inputs_.back().second; }

  // Writes `text` to `path`, or to stdout when `path` is empty.
  void write_output(const std::string& path, const std::string& text);
  void emit(const std::string& text) { write_output(output, text); }
  void emit(const ordered_json& doc) { emit(pretty(doc)); }

  void lap(const std::string& stage);
  void add_timing(const std::string& stage, double seconds) { timings_.emplace_back(stage, seconds); }

  // Writes the manifest when -o or --manifest was given.
  void finish();

 private:
  std::vector<std::string> args_;
  std::ostream& out_;
  std::ostream& err_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::pair<std::string, std::string>> outputs_;
  std::vector<std::pair<std::string, double>> timings_;
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point lap_start_ = start_;
};

// Exact numbers print as "p/q" (or "p").
inline std::string exact(const Rational& r) { return r.to_string(); }

inline ordered_json vector_json(const IntVector& v) { return ordered_json(v); }

}  // namespace quip::cli
