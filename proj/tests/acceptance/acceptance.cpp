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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Pass criterion numbers to run a subset.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "miura/coloring.hpp"
#include "miura/flip_graph.hpp"
#include "miura/forest.hpp"
#include "miura/heights_distance.hpp"
#include "miura/report.hpp"
#include "reference_data.hpp"

namespace {

using namespace miura;
using Clock = std::chrono::steady_clock;

struct Outcome {
  CheckReport report;
  std::string detail;
  double budget_seconds = 0;  // 0 = no time limit
};

std::string str(std::uint64_t x) { return std::to_string(x); }

const std::vector<FlipGraph>& strips() {
  static const std::vector<FlipGraph> graphs = [] {
    std::vector<FlipGraph> out;
    for (int n = 1; n <= 9; ++n) out.push_back(build_ofg(MiuraSpec::strip(n)));
    return out;
  }();
  return graphs;
}

const FlipGraph& strip(int n) { return strips()[static_cast<std::size_t>(n - 1)]; }

const std::vector<GenerationTable>& tables() {
  static const std::vector<GenerationTable> t = generate_chi_d(20);
  return t;
}

Outcome vertex_count() {
  Outcome o{{}, "", 10.0};
  for (int n = 1; n <= 9; ++n) {
    const auto states = enumerate_valid(MiuraSpec::strip(n));
    o.report.expect(states.size() == closed_form_vertex_count(n),
                    "n=" + std::to_string(n) + ": " + str(states.size()));
  }
  o.detail = "n=1..9, |V| = 2*3^(n-1), last " + str(closed_form_vertex_count(9));
  return o;
}

Outcome edge_count() {
  Outcome o;
  for (int n = 2; n <= 9; ++n) {
    const auto c = count_checks(strip(n));
    o.report.expect(c.edges_ok(), "n=" + std::to_string(n) + ": |E| " + str(c.edges));
    o.report.expect(c.handshake_ok(), "n=" + std::to_string(n) + ": handshake");
  }
  o.detail = "n=2..9, |E| = 8(n+1)3^(n-3), last " + str(strip(9).edge_count());
  return o;
}

Outcome degree_tables() {
  Outcome o;
  for (int n = 2; n <= 9; ++n) {
    const auto dist = degree_distribution(strip(n));
    for (int d = 0; d <= 2 * n + 1; ++d) {
      const auto it = dist.find(d);
      const std::uint64_t got = it == dist.end() ? 0 : it->second;
      o.report.expect(got == reference::degree_count(n, d),
                      "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": " + str(got));
    }
  }
  o.detail = "every cell, n=2..9";
  return o;
}

Outcome degree_structure() {
  Outcome o;
  o.report = structural_checks(tables());
  o.detail = "v^2 = 4, v^{2n} = 2, v^{2n-1} = 0, support, n=2..20";
  return o;
}

Outcome recurrences() {
  Outcome o;
  o.report = verify_recurrences(tables());
  o.detail = "three identities, n=3..20, all d";
  return o;
}

Outcome polynomial_laws() {
  Outcome o;
  const auto laws = polynomial_law_checks(tables(), 10, 6);
  o.report = laws.checks;
  o.report.expect(laws.by_degree.at(1).monomial == std::vector<Fraction>{{-8, 1}, {4, 1}},
                  "v_n^3 fit " + laws.by_degree.at(1).to_string());
  for (std::size_t i = 0; i < laws.by_degree.size(); ++i) {
    o.report.expect(laws.by_degree[i].degree == static_cast<int>(i),
                    "d=" + std::to_string(i + 2) + " degree " +
                        std::to_string(laws.by_degree[i].degree));
  }
  const auto& rows = reference::offset_rows();
  for (int a = 0; a < static_cast<int>(rows.size()); ++a) {
    const int start = offset_series_start(a);
    auto seq = offset_series(tables(), a, start);
    seq.resize(static_cast<std::size_t>(reference::kDegreeLastN - start + 1));
    o.report.expect(seq == rows[static_cast<std::size_t>(a)],
                    "offset row a=" + std::to_string(a));
  }
  o.detail = "d=2..10, a=0..6, v_n^3 = " + laws.by_degree.at(1).to_string() +
             ", offset rows a=0..5";
  return o;
}

Outcome bijection() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto& crease = strip(n);
    const auto colors = build_coloring_ofg(MiuraSpec::strip(n));
    std::vector<std::size_t> map(crease.vertex_count());
    for (std::size_t i = 0; i < map.size(); ++i) {
      const auto& mv = crease.assignments()[i];
      const auto c = mv_to_coloring(mv);
      o.report.expect(coloring_to_mv(c) == mv, "round trip " + mv.to_string());
      const auto j = colors.find(c);
      o.report.expect(j.has_value(), "missing class " + c.to_string());
      map[i] = j.value_or(0);
      ++checked;
    }
    o.report.expect(crease.vertex_count() == colors.vertex_count(),
                    "n=" + std::to_string(n) + " sizes differ");
    for (std::size_t i = 0; i < map.size(); ++i) {
      std::vector<std::size_t> mapped;
      for (std::size_t v : crease.neighbors(i)) mapped.push_back(map[v]);
      std::sort(mapped.begin(), mapped.end());
      const auto nb = colors.neighbors(map[i]);
      o.report.expect(mapped == std::vector<std::size_t>(nb.begin(), nb.end()),
                      "n=" + std::to_string(n) + " adjacency differs at " + str(i));
    }
  }
  o.detail = str(checked) + " assignments, crease and coloring graphs isomorphic, n<=6";
  return o;
}

Outcome distance_oracle() {
  Outcome o{{}, "", 60.0};
  std::size_t pairs = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto& g = strip(n);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      const auto dist = bfs_distances(g, i);
      for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
        const bool ok = ofg_distance(g.assignments()[i], g.assignments()[j]) == dist[j];
        o.report.expect(ok, ok ? "" : g.state_label(i) + " -> " + g.state_label(j));
        ++pairs;
      }
    }
  }
  std::mt19937_64 rng(20261019);
  std::size_t sampled = 0;
  for (int n : {6, 7}) {
    const auto& g = strip(n);
    std::uniform_int_distribution<std::size_t> pick(0, g.vertex_count() - 1);
    std::vector<std::pair<std::size_t, std::size_t>> sample;
    for (int k = 0; k < 5000; ++k) sample.emplace_back(pick(rng), pick(rng));
    std::sort(sample.begin(), sample.end());
    std::size_t cached = g.vertex_count();
    std::vector<int> dist;
    for (auto [i, j] : sample) {
      if (i != cached) {
        dist = bfs_distances(g, i);
        cached = i;
      }
      const bool ok = ofg_distance(g.assignments()[i], g.assignments()[j]) == dist[j];
      o.report.expect(ok, ok ? "" : g.state_label(i) + " -> " + g.state_label(j));
      ++sampled;
    }
  }
  o.report.expect(pairs == 1 + 15 + 153 + 1431 + 13041, "pair count " + str(pairs));
  o.detail = str(pairs) + " exhaustive pairs n<=5 (13041 at n=5), " + str(sampled) +
             " sampled pairs n=6,7";
  return o;
}

Outcome diameter() {
  Outcome o;
  std::string bfs_values;
  for (int n = 2; n <= 8; ++n) {
    const auto& g = strip(n);
    const auto d = diameter_bfs(g);
    o.report.expect(d.diameter == diameter_closed_form(n),
                    "n=" + std::to_string(n) + ": bfs " + std::to_string(d.diameter));
    bool witnessed = false;
    if (d.opposite_witness) {
      const auto [a, b] = *d.opposite_witness;
      witnessed = g.degree(a) == 2 && g.degree(b) == 2 &&
                  g.assignments()[b] == opposite(g.assignments()[a]);
    }
    o.report.expect(witnessed, "n=" + std::to_string(n) + ": no opposite degree-2 witness");
    bfs_values += (n > 2 ? "," : "") + std::to_string(d.diameter);
  }
  for (int n = 2; n <= 12; ++n) {
    const auto f = diameter_formula(n);
    o.report.expect(f.verified && f.value == (n * n + 1) / 2,
                    "formula n=" + std::to_string(n));
  }
  const auto d3 = degree2_assignments(3);
  o.report.expect(ofg_distance(d3[0], d3[1]) == 5 && ofg_distance(d3[2], d3[3]) == 5,
                  "2 x 3 opposite degree-2 distance");
  o.detail = "bfs n=2..8 = " + bfs_values + ", formula n<=12, 2x3 pair at 5";
  return o;
}

GridColoring random_coloring(int m, int n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> colors(static_cast<std::size_t>(m * n));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      std::vector<std::uint8_t> options;
      for (std::uint8_t x = 0; x < 3; ++x) {
        if (c > 0 && colors[static_cast<std::size_t>(r * n + c - 1)] == x) continue;
        if (r > 0 && colors[static_cast<std::size_t>((r - 1) * n + c)] == x) continue;
        options.push_back(x);
      }
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      colors[static_cast<std::size_t>(r * n + c)] = options[pick(rng)];
    }
  }
  return GridColoring(m, n, std::move(colors));
}

Outcome reconfiguration() {
  Outcome o;
  std::mt19937_64 rng(42);
  for (auto [m, n] : {std::pair{2, 5}, {3, 4}, {4, 4}}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto c = random_coloring(m, n, rng);
      for (int r = 1; r < m; ++r) {
        for (int k = 1; k < n; ++k) {
          const std::vector<GridVertex> square{{r, k}, {r, k + 1}, {r + 1, k + 1},
                                               {r + 1, k}, {r, k}};
          o.report.expect(path_weight(c, square) == 0, "cycle weight " + c.to_string());
        }
      }
      // Row-first and column-first routes to the far corner.
      std::vector<GridVertex> a, b;
      for (int k = 1; k <= n; ++k) a.push_back({1, k});
      for (int r = 2; r <= m; ++r) a.push_back({r, n});
      for (int r = 1; r <= m; ++r) b.push_back({r, 1});
      for (int k = 2; k <= n; ++k) b.push_back({m, k});
      o.report.expect(path_weight(c, a) == path_weight(c, b), "path dependence");
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + trial % 3;
    const int n = 4 + trial % 2;
    const auto gamma = random_coloring(m, n, rng);
    const auto beta = random_coloring(m, n, rng);
    const auto h = height_profile(gamma, beta);
    for (int r = 1; r <= m; ++r) {
      for (int k = 1; k <= n; ++k) {
        for (GridVertex v : grid_neighbors(m, n, {r, k})) {
          const int step = std::abs(h(r, k) - h(v.row, v.col));
          o.report.expect(step == 0 || step == 2, "height step " + std::to_string(step));
        }
      }
    }
    const auto best = minimize_bound(h);
    o.report.expect(HeightMultiset(h, AbsoluteHeight(best.height)).has_zero_median(),
                    "median not zero at H=" + std::to_string(best.height));
  }
  o.detail = "3000 colorings on 2x5, 3x4, 4x4; 1000 random pairs";
  return o;
}

Outcome connectivity() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    o.report.expect(is_connected(strip(n)), "2x" + std::to_string(n));
  }
  for (int n = 1; n <= 4; ++n) {
    o.report.expect(is_connected(build_ofg(MiuraSpec(3, n))), "3x" + std::to_string(n));
  }
  o.detail = "m=2 n<=8, m=3 n<=4";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "vertex-count", vertex_count},
      {2, "edge-count", edge_count},
      {3, "degree-tables", degree_tables},
      {4, "degree-structure", degree_structure},
      {5, "recurrences", recurrences},
      {6, "polynomial-laws", polynomial_laws},
      {7, "bijection", bijection},
      {8, "distance-oracle", distance_oracle},
      {9, "diameter", diameter},
      {10, "reconfiguration", reconfiguration},
      {11, "connectivity", connectivity},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.report.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool ok = o.report.passed();
    std::string why = o.report.failures.empty() ? "" : o.report.failures.front();
    if (ok && o.budget_seconds > 0 && secs > o.budget_seconds) {
      ok = false;
      why = "took longer than " + std::to_string(o.budget_seconds) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": "
              << o.detail << " [" << o.report.checks << " checks, " << timing << "]";
    if (!ok) std::cout << " -- " << why;
    std::cout << std::endl;
    failed += !ok;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
