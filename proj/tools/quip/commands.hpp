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

#include <functional>

#include "CLI11.hpp"
#include "context.hpp"

namespace quip::cli {

// Adds a subcommand to `app`; `run` is set to its body when selected.
using Runner = std::function<void(Context&)>;

void add_groebner(CLI::App& app, Runner& run);
void add_ct_solve(CLI::App& app, Runner& run);
void add_color(CLI::App& app, Runner& run);
void add_graver(CLI::App& app, Runner& run);
void add_compile(CLI::App& app, Runner& run);
void add_anneal(CLI::App& app, Runner& run);
void add_tts(CLI::App& app, Runner& run);
void add_gama(CLI::App& app, Runner& run);
void add_oracle(CLI::App& app, Runner& run);

}  // namespace quip::cli
