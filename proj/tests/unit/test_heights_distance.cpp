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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "miura/coloring.hpp"
#include "miura/error.hpp"
#include "miura/flip_graph.hpp"
#include "miura/heights_distance.hpp"
#include "oracles.hpp"

namespace miura {
namespace {

HeightProfile opposite_pair_profile(int n) {
  const auto d2 = degree2_assignments(n);
  return height_profile(mv_to_coloring(d2[2]), mv_to_coloring(d2[3]));
}

TEST(AbsoluteHeight, MustBeEven) {
  EXPECT_THROW(AbsoluteHeight(3), InvalidArgument);
  EXPECT_EQ(AbsoluteHeight(-2).residue(), 4);
  EXPECT_EQ(AbsoluteHeight(8).residue(), 2);
}

TEST(PathLengthBound, Examples) {
  auto c = GridColoring::parse("012\n120", ColoringInput::kRequireCanonical);
  EXPECT_EQ(path_length_bound(height_profile(c, c), AbsoluteHeight(0)), 0);
  EXPECT_EQ(path_length_bound(opposite_pair_profile(4), AbsoluteHeight(2)), 8);
  for (int n = 2; n <= 12; n += 2) {
    EXPECT_EQ(path_length_bound(opposite_pair_profile(n), AbsoluteHeight(n - 2)),
              n * n / 2);
  }
}

TEST(MinimizeBound, Examples) {
  auto zero = HeightProfile(2, 2, {0, 0, 0, 0});
  auto m = minimize_bound(zero);
  EXPECT_EQ(m.height, 0);
  EXPECT_EQ(m.length, 0);
  for (int n = 3; n <= 11; n += 2) {
    auto best = minimize_bound(opposite_pair_profile(n));
    EXPECT_TRUE(best.height == n - 1 || best.height == n - 3) << n;
    EXPECT_EQ(best.length, (n * n + 1) / 2);
  }
}

TEST(MinimizeBound, MedianIsZeroAtOptimum) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 5);
    auto g = oracle::random_proper(m, n, rng);
    auto b = oracle::random_proper(m, n, rng);
    auto profile = height_profile(GridColoring(m, n, {g.begin(), g.end()}),
                                  GridColoring(m, n, {b.begin(), b.end()}));
    auto best = minimize_bound(profile);
    EXPECT_TRUE(HeightMultiset(profile, AbsoluteHeight(best.height)).has_zero_median());
    EXPECT_TRUE(HeightMultiset(profile, AbsoluteHeight(best.height)).has_unit_steps());
    EXPECT_EQ(minimize_bound_by_median(profile).length, best.length);
  }
}

TEST(OfgDistance, Examples) {
  const auto d2 = degree2_assignments(3);
  EXPECT_EQ(ofg_distance(d2[0], d2[0]), 0);
  EXPECT_EQ(ofg_distance(d2[0], d2[1]), 5);
  EXPECT_EQ(ofg_distance(d2[2], d2[3]), 5);
  EXPECT_THROW(ofg_distance(d2[0], degree2_assignments(4)[0]), InvalidArgument);
}

TEST(OfgDistance, EqualsBfsForAllPairs) {
  for (int n = 1; n <= 5; ++n) {
    auto g = build_ofg(MiuraSpec::strip(n));
    auto states = oracle::valid_assignments(n);
    auto adj = oracle::assignment_adjacency(n, states);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      auto dist = oracle::bfs(adj, i);
      for (std::size_t j = 0; j < g.vertex_count(); ++j) {
        ASSERT_EQ(ofg_distance(g.assignments()[i], g.assignments()[j]), dist[j])
            << g.state_label(i) << " -> " << g.state_label(j);
      }
    }
  }
}

TEST(ClassDistance, EqualsBfsOnTallerGrids) {
  for (auto [m, n] : {std::pair{3, 3}, {3, 2}, {4, 2}}) {
    auto states = oracle::colorings(m, n, true);
    auto adj = oracle::coloring_adjacency(states, true);
    for (std::size_t i = 0; i < states.size(); ++i) {
      auto dist = oracle::bfs(adj, i);
      GridColoring a(m, n, {states[i].begin(), states[i].end()});
      for (std::size_t j = 0; j < states.size(); ++j) {
        GridColoring b(m, n, {states[j].begin(), states[j].end()});
        ASSERT_EQ(class_distance(a, b), dist[j]);
      }
    }
  }
}

TEST(R3Distance, EqualsBfsOracle) {
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    auto states = oracle::colorings(m, n, false);
    auto adj = oracle::coloring_adjacency(states, false);
    for (std::size_t i = 0; i < states.size(); ++i) {
      auto dist = oracle::bfs(adj, i);
      GridColoring a(m, n, {states[i].begin(), states[i].end()});
      for (std::size_t j = 0; j < states.size(); ++j) {
        GridColoring b(m, n, {states[j].begin(), states[j].end()});
        ASSERT_EQ(r3_distance(a, b), dist[j]) << a.to_string() << " | " << b.to_string();
      }
    }
  }
  auto g = GridColoring::parse("01\n12", ColoringInput::kRequireCanonical);
  EXPECT_EQ(r3_distance(g, g), 0);
  EXPECT_GT(r3_distance(g, g.rotated(1)), 0);
}

TEST(ForcedResidue, TracksBaseColor) {
  auto g = GridColoring::parse("01\n10", ColoringInput::kRequireCanonical);
  EXPECT_EQ(forced_residue(g, g), 0);
  EXPECT_EQ(forced_residue(g, g.rotated(1)), 4);
  EXPECT_EQ(forced_residue(g, g.rotated(2)), 2);
}

TEST(DiameterFormula, Examples) {
  EXPECT_EQ(diameter_closed_form(3), 5);
  EXPECT_EQ(diameter_closed_form(10), 50);
  EXPECT_EQ(diameter_closed_form(2), 2);
  for (int n = 2; n <= 12; ++n) {
    auto r = diameter_formula(n);
    EXPECT_TRUE(r.verified) << n;
    EXPECT_EQ(r.value, (n * n + 1) / 2);
    EXPECT_EQ(r.pair_distances[0], r.value);
    EXPECT_EQ(r.pair_distances[1], r.value);
  }
}

TEST(Degree2Assignments, ShapeAndFaces) {
  for (int n = 2; n <= 9; ++n) {
    auto d2 = degree2_assignments(n);
    for (const auto& mv : d2) {
      EXPECT_TRUE(is_locally_valid(mv));
      EXPECT_EQ(flippable_faces(mv).size(), 2u);
    }
    EXPECT_EQ(d2[1], opposite(d2[0]));
    EXPECT_EQ(d2[3], opposite(d2[2]));
    auto f0 = flippable_faces(d2[0]);
    EXPECT_EQ(f0, (std::vector<FaceId>{{1, 1}, {2, n}}));
    auto f2 = flippable_faces(d2[2]);
    EXPECT_EQ(f2, (std::vector<FaceId>{{1, n}, {2, 1}}));
  }
  EXPECT_THROW(degree2_assignments(1), InvalidArgument);
}

TEST(MaxDistanceScan, Examples) {
  auto g3 = build_ofg(MiuraSpec::strip(3));
  auto s3 = max_distance_scan(g3);
  EXPECT_EQ(s3.max_distance, 5);
  EXPECT_TRUE(s3.attained_by_opposite_degree2);
  const auto d2 = degree2_assignments(3);
  for (int p : {0, 2}) {
    auto a = *g3.find(d2[p]);
    auto b = *g3.find(d2[p + 1]);
    std::pair<std::size_t, std::size_t> key{std::min(a, b), std::max(a, b)};
    EXPECT_NE(std::find(s3.argmax.begin(), s3.argmax.end(), key), s3.argmax.end());
  }
  auto s5 = max_distance_scan(build_ofg(MiuraSpec::strip(5)));
  EXPECT_EQ(s5.max_distance, 13);
}

}  // namespace
}  // namespace miura
