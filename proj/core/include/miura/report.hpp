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

#ifndef MIURA_REPORT_HPP
#define MIURA_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace miura {

/// Outcome of a batch of exact checks. Records how many individual
/// assertions ran and a message for each one that failed.
struct CheckReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty() && checks > 0; }

  /// Counts one assertion; records `message` if it failed.
  void expect(bool ok, std::string message) {
    ++checks;
    if (!ok) failures.push_back(std::move(message));
  }

  void merge(const CheckReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(),
                    other.failures.end());
  }
};

}  // namespace miura

#endif  // MIURA_REPORT_HPP
