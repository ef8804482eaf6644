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

#include "verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "miura/coloring.hpp"
#include "miura/flip_graph.hpp"
#include "miura/forest.hpp"
#include "miura/heights_distance.hpp"
#include "reference_data.hpp"

namespace miura::cli {

namespace {

std::string range(const char* var, int lo, int hi) {
  return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

std::string first_failure(const std::vector<std::string>& failures) {
  if (failures.empty()) return "all equal";
  std::string out = failures.front();
  if (failures.size() > 1) {
    out += " (+" + std::to_string(failures.size() - 1) + " more)";
  }
  return out;
}

Claim from_report(std::string id, std::string parameters, std::string expected,
                  const CheckReport& r) {
  return {std::move(id), std::move(parameters), std::move(expected),
          std::to_string(r.checks) + " checks; " + first_failure(r.failures),
          r.passed()};
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {
    const int n_max = options.n_max;
    const BuildOptions build{options.state_cap, options.threads};
    for (int n = 1; n <= n_max; ++n) {
      graphs_.push_back(build_ofg(MiuraSpec::strip(n), build));
    }
    tables_ = generate_chi_d(std::max(n_max, options.forest_max));
  }

  VerifyReport run() {
    VerifyReport report;
    auto& c = report.claims;
    c.push_back(vertex_count());
    c.push_back(edge_count());
    c.push_back(degree_table());
    c.push_back(forest_vs_graph());
    c.push_back(per_generation("lem-min-degree", "v_n^2 = 4",
                               [](const GenerationTable& t, int) {
                                 return t.v(2) == 4;
                               }));
    c.push_back(per_generation("lem-max-degree", "v_n^{2n} = 2",
                               [](const GenerationTable& t, int n) {
                                 return t.v(2 * n) == 2;
                               }));
    c.push_back(per_generation("lem-no-2n-1", "v_n^{2n-1} = 0",
                               [](const GenerationTable& t, int n) {
                                 return t.v(2 * n - 1) == 0;
                               }));
    c.push_back(per_generation("thm-set", "support = {2..2n-2} u {2n}",
                               [](const GenerationTable& t, int n) {
                                 std::vector<int> want;
                                 for (int d = 2; d <= 2 * n - 2; ++d) want.push_back(d);
                                 want.push_back(2 * n);
                                 return t.support() == want;
                               }));
    c.push_back(from_report("prop-recurrences", range("n", 3, forest_max()),
                            "b, w and v recurrences hold for all d",
                            verify_recurrences(tables_)));
    auto laws = polynomial_law_checks(tables_, 10, 6);
    c.push_back(poly_degree(laws));
    c.push_back(poly_offset(laws));
    c.push_back(offset_rows());
    c.push_back(diameter());
    c.push_back(opposite_degree2());
    c.push_back(bijection());
    c.push_back(connected());
    return report;
  }

 private:
  int n_max() const { return options_.n_max; }
  int forest_max() const { return static_cast<int>(tables_.size()); }

  Claim vertex_count() {
    CheckReport r;
    for (const auto& g : graphs_) {
      const auto cr = count_checks(g);
      r.expect(cr.vertices_ok(), "n=" + std::to_string(g.spec().cols()) + ": " +
                                     std::to_string(cr.vertices) + " != " +
                                     std::to_string(cr.expected_vertices));
    }
    return from_report("thm-vertex-count", range("n", 1, n_max()),
                       "|V| = 2*3^(n-1)", r);
  }

  Claim edge_count() {
    CheckReport r;
    for (const auto& g : graphs_) {
      const auto cr = count_checks(g);
      const std::string tag = "n=" + std::to_string(g.spec().cols());
      r.expect(cr.handshake_ok(), tag + ": degree sum != 2|E|");
      if (cr.expected_edges) {
        r.expect(cr.edges_ok(), tag + ": " + std::to_string(cr.edges) + " != " +
                                    std::to_string(*cr.expected_edges));
      }
    }
    return from_report("thm-edge-count", range("n", 2, n_max()),
                       "|E| = 8(n+1)3^(n-3), sum deg = 2|E|", r);
  }

  Claim degree_table() {
    CheckReport r;
    const int hi = std::min(n_max(), reference::kDegreeLastN);
    for (int n = reference::kDegreeFirstN; n <= hi; ++n) {
      const auto dist = degree_distribution(graphs_[static_cast<std::size_t>(n - 1)]);
      for (int d = 0; d <= 2 * n; ++d) {
        const auto it = dist.find(d);
        const std::uint64_t got = it == dist.end() ? 0 : it->second;
        r.expect(got == reference::degree_count(n, d),
                 "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": " +
                     std::to_string(got));
      }
    }
    for (int n = reference::kDegreeFirstN; n <= reference::kDegreeLastN; ++n) {
      for (int d = 0; d <= 2 * n; ++d) {
        r.expect(tables_[static_cast<std::size_t>(n - 1)].v(d) ==
                     reference::degree_count(n, d),
                 "forest n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
    }
    return from_report("table1-degrees",
                       range("n", 2, hi) + " (graphs), n=2..9 (forest)",
                       "published degree counts", r);
  }

  Claim forest_vs_graph() {
    std::vector<FlipGraph> from_two(graphs_.begin() + std::min<std::ptrdiff_t>(1, graphs_.size()),
                                    graphs_.end());
    return from_report("forest-vs-graph", range("n", 2, n_max()),
                       "forest labels = graph degrees; blue = MVM/VMV ends",
                       cross_validate(tables_, from_two));
  }

  template <typename Pred>
  Claim per_generation(std::string id, std::string expected, Pred pred) {
    CheckReport r;
    for (int n = 2; n <= forest_max(); ++n) {
      r.expect(pred(tables_[static_cast<std::size_t>(n - 1)], n),
               "fails at n=" + std::to_string(n));
    }
    return from_report(std::move(id), range("n", 2, forest_max()),
                       std::move(expected), r);
  }

  Claim poly_degree(const PolynomialLawReport& laws) {
    CheckReport r;
    // A fitted degree of k means Delta^(k+1) vanishes and Delta^k does not.
    for (std::size_t i = 0; i < laws.by_degree.size(); ++i) {
      r.expect(laws.by_degree[i].degree == static_cast<int>(i),
               "d=" + std::to_string(i + 2) + " has degree " +
                   std::to_string(laws.by_degree[i].degree));
    }
    const auto& v3 = laws.by_degree.at(1);
    r.expect(v3.monomial == std::vector<Fraction>{{-8, 1}, {4, 1}},
             "v_n^3 = " + v3.to_string());
    return from_report("thm-poly-d", "d=2..10, " + range("n", 2, forest_max()),
                       "v_n^d has degree d-2; v_n^3 = 4n - 8", r);
  }

  Claim poly_offset(const PolynomialLawReport& laws) {
    CheckReport r;
    for (std::size_t a = 0; a < laws.by_offset.size(); ++a) {
      r.expect(laws.by_offset[a].degree <= static_cast<int>(a / 2),
               "a=" + std::to_string(a) + " has degree " +
                   std::to_string(laws.by_offset[a].degree));
    }
    return from_report("thm-poly-2n-a", "a=0..6, " + range("n", 2, forest_max()),
                       "v_n^{2n-a} has degree <= floor(a/2)", r);
  }

  Claim offset_rows() {
    CheckReport r;
    const auto& rows = reference::offset_rows();
    for (std::size_t a = 0; a < rows.size(); ++a) {
      const int start = offset_series_start(static_cast<int>(a));
      auto seq = offset_series(tables_, static_cast<int>(a), start);
      seq.resize(std::min<std::size_t>(seq.size(),
                                       static_cast<std::size_t>(reference::kDegreeLastN - start + 1)));
      r.expect(seq == rows[a], "row a=" + std::to_string(a) + " differs");
    }
    return from_report("table2-rows", "a=0..5, n up to 9",
                       "published (v_n^{2n-a}) sequences", r);
  }

  Claim diameter() {
    CheckReport r;
    for (int n = 2; n <= n_max(); ++n) {
      const auto& g = graphs_[static_cast<std::size_t>(n - 1)];
      const auto d = diameter_bfs(g, options_.threads);
      r.expect(d.diameter == diameter_closed_form(n),
               "n=" + std::to_string(n) + ": bfs " + std::to_string(d.diameter));
      bool witnessed = false;
      if (d.opposite_witness) {
        const auto [a, b] = *d.opposite_witness;
        witnessed = g.degree(a) == 2 && g.degree(b) == 2;
      }
      r.expect(witnessed, "n=" + std::to_string(n) + ": no opposite degree-2 witness");
    }
    return from_report("cor-diameter", range("n", 2, n_max()),
                       "bfs diameter = ceil(n^2/2), attained by opposite degree-2 pair", r);
  }

  Claim opposite_degree2() {
    CheckReport r;
    const int hi = std::max(12, n_max());
    for (int n = 2; n <= hi; ++n) {
      const auto f = diameter_formula(n);
      r.expect(f.verified, "n=" + std::to_string(n) + ": distances " +
                               std::to_string(f.pair_distances[0]) + ", " +
                               std::to_string(f.pair_distances[1]));
    }
    return from_report("thm-opposite-deg2-distance", range("n", 2, hi),
                       "opposite degree-2 pairs at distance ceil(n^2/2)", r);
  }

  Claim bijection() {
    CheckReport r;
    for (const auto& g : graphs_) {
      for (const auto& mv : g.assignments()) {
        const auto c = mv_to_coloring(mv);
        r.expect(c.is_proper() && coloring_to_mv(c) == mv, mv.to_string());
      }
    }
    return from_report("bijection-roundtrip", range("n", 1, n_max()),
                       "coloring_to_mv(mv_to_coloring(mu)) = mu", r);
  }

  Claim connected() {
    CheckReport r;
    for (const auto& g : graphs_) {
      r.expect(is_connected(g), "2x" + std::to_string(g.spec().cols()));
    }
    const BuildOptions build{options_.state_cap, options_.threads};
    for (int n = 1; n <= 4; ++n) {
      r.expect(is_connected(build_ofg(MiuraSpec(3, n), build)), "3x" + std::to_string(n));
    }
    return from_report("lem-connected", range("n", 1, n_max()) + " (m=2), n=1..4 (m=3)",
                       "flip graph connected", r);
  }

  VerifyOptions options_;
  std::vector<FlipGraph> graphs_;
  std::vector<GenerationTable> tables_;
};

}  // namespace

bool VerifyReport::passed() const {
  return !claims.empty() &&
         std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json out;
  out["passed"] = passed();
  auto& list = out["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : claims) {
    list.push_back({{"id", c.id},
                    {"parameters", c.parameters},
                    {"expected", c.expected},
                    {"actual", c.actual},
                    {"passed", c.passed}});
  }
  return out.dump(2) + "\n";
}

std::string VerifyReport::to_table() const {
  std::size_t id_width = 2;
  std::size_t param_width = 10;
  for (const auto& c : claims) {
    id_width = std::max(id_width, c.id.size());
    param_width = std::max(param_width, c.parameters.size());
  }
  std::ostringstream out;
  out << std::left << "STATUS  " << std::setw(static_cast<int>(id_width)) << "ID"
      << "  " << std::setw(static_cast<int>(param_width)) << "PARAMETERS"
      << "  RESULT\n";
  for (const auto& c : claims) {
    out << (c.passed ? "PASS    " : "FAIL    ") << std::setw(static_cast<int>(id_width))
        << c.id << "  " << std::setw(static_cast<int>(param_width)) << c.parameters
        << "  " << c.expected << ": " << c.actual << "\n";
  }
  out << (passed() ? "all claims passed\n" : "some claims FAILED\n");
  return out.str();
}

VerifyReport run_verify(const VerifyOptions& options) {
  return Suite(options).run();
}

}  // namespace miura::cli
