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

#include "miura/heights_distance.hpp"

#include <algorithm>
#include <cstdlib>

#include "miura/error.hpp"
#include "parallel.hpp"

namespace miura {

namespace {

void require_same_dimensions(const GridColoring& a, const GridColoring& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("colorings have different dimensions");
  }
}

int max_abs(const HeightProfile& profile) {
  int out = 0;
  for (int h : profile.values()) out = std::max(out, std::abs(h));
  return out;
}

MVAssignment uniform_with_diagonal(int n, int first_diagonal_label) {
  const MiuraSpec spec = MiuraSpec::strip(n);
  std::vector<Parity> parities(static_cast<std::size_t>(crease_count(spec)),
                               Parity::Valley);
  for (int j = 1; j < n; ++j) {
    parities[CreaseId(3 * (j - 1) + first_diagonal_label).slot()] =
        Parity::Mountain;
  }
  return MVAssignment(spec, std::move(parities));
}

}  // namespace

AbsoluteHeight::AbsoluteHeight(int value) : value_(value) {
  if (value % 2 != 0) {
    throw InvalidArgument("absolute height must be even, got " +
                          std::to_string(value));
  }
}

int forced_residue(const GridColoring& gamma, const GridColoring& beta) {
  require_same_dimensions(gamma, beta);
  const int diff = static_cast<int>(gamma(1, 1)) - static_cast<int>(beta(1, 1));
  return ((2 * diff) % 6 + 6) % 6;
}

HeightMultiset::HeightMultiset(const HeightProfile& profile,
                               AbsoluteHeight height) {
  values_.reserve(profile.values().size());
  for (int h : profile.values()) values_.push_back(height.value() + h);
  std::sort(values_.begin(), values_.end());
}

std::pair<int, int> HeightMultiset::medians() const {
  const std::size_t n = values_.size();
  if (n % 2 == 1) return {values_[n / 2], values_[n / 2]};
  return {values_[n / 2 - 1], values_[n / 2]};
}

bool HeightMultiset::has_zero_median() const {
  const auto [lo, hi] = medians();
  return lo == 0 || hi == 0;
}

bool HeightMultiset::has_unit_steps() const {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    const int step = values_[i] - values_[i - 1];
    if (step != 0 && step != 2) return false;
  }
  return true;
}

std::int64_t path_length_bound(const HeightProfile& profile,
                               AbsoluteHeight height) {
  std::int64_t twice = 0;
  for (int h : profile.values()) twice += std::abs(height.value() + h);
  if (twice % 2 != 0) {
    throw InternalError("odd height sum; profile values must all be even");
  }
  return twice / 2;
}

BoundMinimum minimize_bound(const HeightProfile& profile,
                            std::optional<int> residue) {
  if (residue && (*residue < 0 || *residue > 4 || *residue % 2 != 0)) {
    throw InvalidArgument("residue must be 0, 2 or 4 (mod 6)");
  }
  const int reach = max_abs(profile) + 6;
  std::optional<BoundMinimum> best;
  for (int h = -reach; h <= reach; ++h) {
    if (h % 2 != 0) continue;
    const AbsoluteHeight height(h);
    if (residue && height.residue() != *residue) continue;
    const std::int64_t length = path_length_bound(profile, height);
    if (!best || length < best->length) best = BoundMinimum{h, length};
  }
  if (!best) throw InternalError("empty search range for the absolute height");
  return *best;
}

BoundMinimum minimize_bound_by_median(const HeightProfile& profile) {
  const HeightMultiset ys(profile, AbsoluteHeight(0));
  const auto [lo, hi] = ys.medians();
  const BoundMinimum a{-hi, path_length_bound(profile, AbsoluteHeight(-hi))};
  const BoundMinimum b{-lo, path_length_bound(profile, AbsoluteHeight(-lo))};
  if (a.length != b.length) return a.length < b.length ? a : b;
  return a.height < b.height ? a : b;
}

int ofg_distance(const MVAssignment& a, const MVAssignment& b) {
  if (a.spec() != b.spec()) {
    throw InvalidArgument("assignments belong to different strips");
  }
  return class_distance(mv_to_coloring(a), mv_to_coloring(b));
}

int class_distance(const GridColoring& gamma, const GridColoring& beta) {
  require_same_dimensions(gamma, beta);
  const HeightProfile profile = height_profile(gamma, beta);
  const BoundMinimum scan = minimize_bound(profile);
  const BoundMinimum median = minimize_bound_by_median(profile);
  if (scan.length != median.length) {
    throw InternalError("scan and median minima disagree");
  }
  return static_cast<int>(scan.length);
}

int r3_distance(const GridColoring& gamma, const GridColoring& beta) {
  require_same_dimensions(gamma, beta);
  const HeightProfile profile = height_profile(gamma, beta);
  return static_cast<int>(
      minimize_bound(profile, forced_residue(gamma, beta)).length);
}

std::int64_t diameter_closed_form(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const auto sq = static_cast<std::int64_t>(n) * n;
  return (sq + 1) / 2;
}

std::array<MVAssignment, 4> degree2_assignments(int n) {
  if (n < 2) {
    throw InvalidArgument("degree-2 assignments exist for n >= 2 only");
  }
  const MVAssignment bottom = uniform_with_diagonal(n, 4);
  const MVAssignment top = uniform_with_diagonal(n, 2);
  return {bottom, opposite(bottom), top, opposite(top)};
}

DiameterFormulaResult diameter_formula(int n) {
  const auto nu = degree2_assignments(n);
  DiameterFormulaResult out;
  out.value = diameter_closed_form(n);
  out.pair_distances = {ofg_distance(nu[0], nu[1]), ofg_distance(nu[2], nu[3])};
  out.verified = out.pair_distances[0] == out.value &&
                 out.pair_distances[1] == out.value;
  return out;
}

MaxDistanceScan max_distance_scan(const FlipGraph& g, unsigned threads,
                                  std::size_t vertex_cap) {
  const auto& states = g.assignments();
  const std::size_t n = states.size();
  if (n > vertex_cap) {
    throw ResourceLimit("all-pairs distance scan over " + std::to_string(n) +
                        " states exceeds the cap of " +
                        std::to_string(vertex_cap));
  }
  std::vector<GridColoring> colorings;
  colorings.reserve(n);
  for (const auto& s : states) colorings.push_back(mv_to_coloring(s));

  std::vector<int> row_max(n, 0);
  detail::parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        row_max[i] = std::max(row_max[i], class_distance(colorings[i], colorings[j]));
      }
    }
  });

  MaxDistanceScan out;
  out.max_distance = n == 0 ? 0 : *std::max_element(row_max.begin(), row_max.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (row_max[i] != out.max_distance) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (class_distance(colorings[i], colorings[j]) == out.max_distance) {
        out.argmax.emplace_back(i, j);
      }
    }
  }
  for (const auto& [i, j] : out.argmax) {
    if (g.degree(i) == 2 && g.opposite_of(i) == j) {
      out.attained_by_opposite_degree2 = true;
      break;
    }
  }
  return out;
}

}  // namespace miura
