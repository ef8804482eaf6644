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

// Published degree counts used as fixed expectations by `miura verify` and
// the acceptance suite.

#ifndef MIURA_TOOLS_REFERENCE_DATA_HPP
#define MIURA_TOOLS_REFERENCE_DATA_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace miura::reference {

/// Number of vertices of degree d in the 2 x n flip graph; row d = 2..18,
/// column n = 2..9.
inline constexpr int kDegreeFirstN = 2;
inline constexpr int kDegreeLastN = 9;
inline constexpr std::array<std::pair<int, std::array<std::uint64_t, 8>>, 17>
    kDegreeCounts{{
        {2, {4, 4, 4, 4, 4, 4, 4, 4}},
        {3, {0, 4, 8, 12, 16, 20, 24, 28}},
        {4, {2, 8, 20, 36, 56, 80, 108, 140}},
        {5, {0, 0, 8, 36, 88, 168, 280, 428}},
        {6, {0, 2, 12, 44, 128, 296, 584, 1032}},
        {7, {0, 0, 0, 12, 80, 296, 792, 1744}},
        {8, {0, 0, 2, 16, 76, 292, 924, 2428}},
        {9, {0, 0, 0, 0, 16, 140, 680, 2396}},
        {10, {0, 0, 0, 2, 20, 116, 544, 2144}},
        {11, {0, 0, 0, 0, 0, 20, 216, 1288}},
        {12, {0, 0, 0, 0, 2, 24, 164, 900}},
        {13, {0, 0, 0, 0, 0, 0, 24, 308}},
        {14, {0, 0, 0, 0, 0, 2, 28, 220}},
        {15, {0, 0, 0, 0, 0, 0, 0, 28}},
        {16, {0, 0, 0, 0, 0, 0, 2, 32}},
        {17, {0, 0, 0, 0, 0, 0, 0, 0}},
        {18, {0, 0, 0, 0, 0, 0, 0, 2}},
    }};

/// Degree count for (n, d); zero outside the table.
inline std::uint64_t degree_count(int n, int d) {
  if (n < kDegreeFirstN || n > kDegreeLastN) return 0;
  for (const auto& [row, counts] : kDegreeCounts) {
    if (row == d) return counts[static_cast<std::size_t>(n - kDegreeFirstN)];
  }
  return 0;
}

/// Sequences (v_n^{2n-a}) for a = 0..5, each starting at the first n where
/// the polynomial law applies and ending at n = 9.
inline const std::vector<std::vector<std::int64_t>>& offset_rows() {
  static const std::vector<std::vector<std::int64_t>> rows{
      {2, 2, 2, 2, 2, 2, 2, 2},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {8, 12, 16, 20, 24, 28, 32},
      {4, 8, 12, 16, 20, 24, 28},
      {20, 44, 76, 116, 164, 220},
      {8, 36, 80, 140, 216, 308},
  };
  return rows;
}

}  // namespace miura::reference

#endif  // MIURA_TOOLS_REFERENCE_DATA_HPP
