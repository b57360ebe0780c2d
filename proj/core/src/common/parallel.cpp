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

#include "quip/common/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace quip {
namespace {

std::atomic<std::size_t> g_override{0};

std::size_t from_environment() {
  const char* env = std::getenv("QUIP_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    const long value = std::stol(env);
    return value > 0 ? static_cast<std::size_t>(value) : 0;
  } catch (...) {
    return 0;
  }
}

}  // namespace

std::size_t default_thread_count() {
  if (const std::size_t env = from_environment(); env > 0) return env;
  if (const std::size_t o = g_override.load(); o > 0) return o;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void set_default_thread_count(std::size_t threads) { g_override.store(threads); }

}  // namespace quip
