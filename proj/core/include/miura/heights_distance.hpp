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

#ifndef MIURA_HEIGHTS_DISTANCE_HPP
#define MIURA_HEIGHTS_DISTANCE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "miura/coloring.hpp"
#include "miura/flip_graph.hpp"
#include "miura/miura_core.hpp"

namespace miura {

/// Net change H of the base vertex v_{1,1} along a recoloring, counted +2
/// per color decrement and -2 per increment. Always even.
class AbsoluteHeight {
 public:
  explicit AbsoluteHeight(int value);

  int value() const { return value_; }
  /// H mod 6, one of 0, 2, 4.
  int residue() const { return ((value_ % 6) + 6) % 6; }

  friend bool operator==(AbsoluteHeight, AbsoluteHeight) = default;

 private:
  int value_;
};

/// The residue of H mod 6 forced on every recoloring from gamma to beta:
/// 2 (gamma(u) - beta(u)) mod 6 at u = v_{1,1}.
int forced_residue(const GridColoring& gamma, const GridColoring& beta);

/// The sorted multiset Y = {H + h(v)}.
class HeightMultiset {
 public:
  HeightMultiset(const HeightProfile& profile, AbsoluteHeight height);

  std::span<const int> sorted() const { return values_; }
  /// The two middle elements (equal for an odd count).
  std::pair<int, int> medians() const;
  bool has_zero_median() const;
  /// Consecutive sorted values differ by 0 or 2.
  bool has_unit_steps() const;

 private:
  std::vector<int> values_;
};

/// (1/2) sum_v |H + h(v)|, a lower bound on the length of any recoloring
/// with absolute height H. Exact integer.
std::int64_t path_length_bound(const HeightProfile& profile,
                               AbsoluteHeight height);

struct BoundMinimum {
  int height = 0;
  std::int64_t length = 0;
};

/// Minimizes path_length_bound over even H, optionally restricted to
/// H = residue (mod 6). Scans [-max|h| - 6, max|h| + 6]; ties go to the
/// smallest H.
BoundMinimum minimize_bound(const HeightProfile& profile,
                            std::optional<int> residue = std::nullopt);

/// Same unrestricted minimum from the median characterization: the bound
/// is minimal when a median of Y is zero, so only H = -median(h) needs
/// evaluating.
BoundMinimum minimize_bound_by_median(const HeightProfile& profile);

/// Flip distance between two valid assignments of the same 2 x n strip.
int ofg_distance(const MVAssignment& a, const MVAssignment& b);

/// Distance between the rotation classes of two colorings (any m).
int class_distance(const GridColoring& gamma, const GridColoring& beta);

/// Distance between two raw colorings in the 3-coloring reconfiguration
/// graph of the grid.
int r3_distance(const GridColoring& gamma, const GridColoring& beta);

/// ceil(n^2 / 2).
std::int64_t diameter_closed_form(int n);

/// The four degree-2 assignments of the 2 x n strip (n >= 2):
/// [0] bottom diagonals M, all else V; [1] its opposite (flippable faces
/// alpha_{1,1}, alpha_{2,n}); [2] top diagonals M, all else V; [3] its
/// opposite (flippable faces alpha_{2,1}, alpha_{1,n}).
std::array<MVAssignment, 4> degree2_assignments(int n);

struct DiameterFormulaResult {
  std::int64_t value = 0;
  /// ofg_distance within each opposite degree-2 pair.
  std::array<int, 2> pair_distances{};
  bool verified = false;
};

/// ceil(n^2 / 2), checked constructively: both opposite degree-2 pairs must
/// be exactly that far apart.
DiameterFormulaResult diameter_formula(int n);

struct MaxDistanceScan {
  int max_distance = 0;
  /// Every pair (i < j) at max_distance.
  std::vector<std::pair<std::size_t, std::size_t>> argmax;
  bool attained_by_opposite_degree2 = false;
};

/// All-pairs flip distances of a 2 x n graph via ofg_distance.
MaxDistanceScan max_distance_scan(const FlipGraph& g, unsigned threads = 0,
                                  std::size_t vertex_cap = 20'000);

}  // namespace miura

#endif  // MIURA_HEIGHTS_DISTANCE_HPP
