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

#ifndef MIURA_FLIP_GRAPH_HPP
#define MIURA_FLIP_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "miura/coloring.hpp"
#include "miura/miura_core.hpp"

namespace miura {

/// What a graph vertex stands for: a 2 x n MV assignment, the canonical
/// representative of a grid-coloring rotation class (any m), or a raw
/// proper coloring (vertices of the 3-coloring reconfiguration graph).
enum class StateKind { kAssignment, kColoring, kRawColoring };

struct BuildOptions {
  /// Refuse to build graphs with more states than this.
  std::size_t state_cap = 2'000'000;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Origami flip graph: sorted canonical states, adjacency by a single face
/// flip (equivalently, a single vertex recoloring). Simple and undirected;
/// neighbour lists are sorted. Immutable once built.
class FlipGraph {
 public:
  FlipGraph(MiuraSpec spec, std::vector<MVAssignment> states,
            std::vector<std::vector<std::size_t>> adjacency);
  FlipGraph(MiuraSpec spec, std::vector<GridColoring> states,
            std::vector<std::vector<std::size_t>> adjacency,
            StateKind kind = StateKind::kColoring);

  const MiuraSpec& spec() const { return spec_; }
  StateKind kind() const { return kind_; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }
  const std::vector<std::vector<std::size_t>>& adjacency() const {
    return adjacency_;
  }

  /// States of an assignment-kind graph. Throws for coloring graphs.
  const std::vector<MVAssignment>& assignments() const;
  /// States of a coloring or raw-coloring graph. Throws for assignment
  /// graphs.
  const std::vector<GridColoring>& colorings() const;

  /// MV string or coloring text of vertex v.
  std::string state_label(std::size_t v) const;

  std::optional<std::size_t> find(const MVAssignment& mv) const;
  /// Looks up the rotation class of `coloring` (the exact coloring in a
  /// raw-coloring graph).
  std::optional<std::size_t> find(const GridColoring& coloring) const;

  /// Index of the state with every parity negated (every color negated for
  /// coloring graphs, which negates every edge weight).
  std::size_t opposite_of(std::size_t v) const;

 private:
  void validate();

  MiuraSpec spec_;
  StateKind kind_;
  std::vector<MVAssignment> assignments_;
  std::vector<GridColoring> colorings_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// degree -> number of vertices with that degree.
using DegreeDistribution = std::map<int, std::uint64_t>;

/// m = 2: states are MV assignments, edges come from face flips. Other m:
/// delegates to build_coloring_ofg.
FlipGraph build_ofg(const MiuraSpec& spec, const BuildOptions& options = {});

/// Crease-level construction (m = 2 only).
FlipGraph build_crease_ofg(const MiuraSpec& spec,
                           const BuildOptions& options = {});

/// Coloring-level construction for any m: states are canonical colorings,
/// edges come from recoloring one vertex and re-canonicalizing.
FlipGraph build_coloring_ofg(const MiuraSpec& spec,
                             const BuildOptions& options = {});

/// Same vertex as raw (non-canonical) colorings: the 3-coloring
/// reconfiguration graph of the grid.
FlipGraph build_reconfiguration_graph(const MiuraSpec& spec,
                                      const BuildOptions& options = {});

DegreeDistribution degree_distribution(const FlipGraph& g);

/// 2 * 3^(n-1).
std::uint64_t closed_form_vertex_count(int n);
/// 8 (n+1) 3^(n-3), defined for n >= 2.
std::uint64_t closed_form_edge_count(int n);

struct CountReport {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t degree_sum = 0;
  std::uint64_t expected_vertices = 0;
  /// Absent for n = 1, where the closed form does not apply.
  std::optional<std::uint64_t> expected_edges;

  bool vertices_ok() const { return vertices == expected_vertices; }
  bool edges_ok() const { return !expected_edges || edges == *expected_edges; }
  bool handshake_ok() const { return degree_sum == 2 * edges; }
  bool passed() const { return vertices_ok() && edges_ok() && handshake_ok(); }
};

/// Compares |V| and |E| of a 2 x n graph against the closed forms.
CountReport count_checks(const FlipGraph& g);

inline constexpr int kUnreachable = -1;

/// Hop distances from `source`; kUnreachable where no path exists.
std::vector<int> bfs_distances(const FlipGraph& g, std::size_t source);

/// One shortest vertex sequence from `from` to `to`, both ends included.
/// Empty when unreachable.
std::vector<std::size_t> shortest_path(const FlipGraph& g, std::size_t from,
                                       std::size_t to);

bool is_connected(const FlipGraph& g);

struct DiameterResult {
  int diameter = 0;
  /// First attaining pair (from < to) in index order.
  std::size_t from = 0;
  std::size_t to = 0;
  /// First vertex whose opposite state is at distance `diameter`, if any.
  std::optional<std::pair<std::size_t, std::size_t>> opposite_witness;
};

/// Exact diameter by BFS from every vertex. Throws ResourceLimit above
/// `vertex_cap` vertices and InvalidArgument for a disconnected graph.
DiameterResult diameter_bfs(const FlipGraph& g, unsigned threads = 0,
                            std::size_t vertex_cap = 200'000);

/// Vertices of degree 2, in index order.
std::vector<std::size_t> degree2_vertices(const FlipGraph& g);

enum class ExportFormat { kDot, kJson, kEdgeList };

ExportFormat parse_export_format(std::string_view name);

/// Deterministic serialization. JSON schema:
/// {spec:{rows,cols}, states[], adjacency[][], degrees{}, vertex_count,
///  edge_count}.
std::string export_graph(const FlipGraph& g, ExportFormat format);

/// Reads the JSON produced by export_graph.
FlipGraph parse_graph_json(std::string_view text);

}  // namespace miura

#endif  // MIURA_FLIP_GRAPH_HPP
