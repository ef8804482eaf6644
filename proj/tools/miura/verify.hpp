// Copyright 2026 The Miura Flip Graph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIURA_TOOLS_VERIFY_HPP
#define MIURA_TOOLS_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace miura::cli {

/// One checked statement. `id` is stable across releases.
struct Claim {
  std::string id;
  std::string parameters;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct VerifyReport {
  std::vector<Claim> claims;

  bool passed() const;
  std::string to_json() const;
  /// Fixed-width human table, one claim per line.
  std::string to_table() const;
};

struct VerifyOptions {
  /// Largest strip width for graph-based claims.
  int n_max = 7;
  /// Largest generation for forest-table claims (at least 20 is used).
  int forest_max = 20;
  unsigned threads = 0;
  std::size_t state_cap = 2'000'000;
};

/// Runs the full claim suite. Graph claims cover n = 1..n_max; forest
/// claims cover generations up to max(n_max, forest_max).
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace miura::cli

#endif  // MIURA_TOOLS_VERIFY_HPP
