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

#include "miura/flip_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "miura/error.hpp"
#include "parallel.hpp"

namespace miura {

namespace {

std::uint64_t pow3(int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / 3) {
      throw ResourceLimit("3^" + std::to_string(e) + " overflows 64 bits");
    }
    out *= 3;
  }
  return out;
}

void check_cap(std::uint64_t states, const BuildOptions& options) {
  if (states > options.state_cap) {
    throw ResourceLimit("graph would have " + std::to_string(states) +
                        " states, above the cap of " +
                        std::to_string(options.state_cap));
  }
}

void require_vertex(const FlipGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) {
    throw InvalidArgument("vertex index " + std::to_string(v) +
                          " out of range (graph has " +
                          std::to_string(g.vertex_count()) + " vertices)");
  }
}

void sort_unique(std::vector<std::size_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::size_t lookup(const std::vector<std::uint64_t>& codes, std::uint64_t code) {
  auto it = std::lower_bound(codes.begin(), codes.end(), code);
  if (it == codes.end() || *it != code) {
    throw InternalError("neighbour state missing from the enumeration");
  }
  return static_cast<std::size_t>(it - codes.begin());
}

// Edges from recolorings. States must be sorted by code; `canonical`
// selects whether neighbours are folded into their rotation class.
std::vector<std::vector<std::size_t>> recoloring_adjacency(
    const std::vector<GridColoring>& states, bool canonical, unsigned threads) {
  std::vector<std::uint64_t> codes;
  codes.reserve(states.size());
  for (const auto& s : states) codes.push_back(s.code());

  std::vector<std::vector<std::size_t>> adjacency(states.size());
  detail::parallel_for(states.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const GridColoring& s = states[i];
      auto& out = adjacency[i];
      for (int r = 1; r <= s.rows(); ++r) {
        for (int c = 1; c <= s.cols(); ++c) {
          for (std::uint8_t color : recolor_options(s, {r, c})) {
            GridColoring next = s.with_color({r, c}, color);
            if (canonical) next = next.canonical();
            const std::size_t j = lookup(codes, next.code());
            if (j != i) out.push_back(j);
          }
        }
      }
      sort_unique(out);
    }
  });
  return adjacency;
}

}  // namespace

FlipGraph::FlipGraph(MiuraSpec spec, std::vector<MVAssignment> states,
                     std::vector<std::vector<std::size_t>> adjacency)
    : spec_(spec),
      kind_(StateKind::kAssignment),
      assignments_(std::move(states)),
      adjacency_(std::move(adjacency)) {
  if (assignments_.size() != adjacency_.size()) {
    throw InvalidArgument("state and adjacency counts differ");
  }
  for (const auto& s : assignments_) {
    if (s.spec() != spec_) throw InvalidArgument("state has a foreign spec");
  }
  validate();
}

FlipGraph::FlipGraph(MiuraSpec spec, std::vector<GridColoring> states,
                     std::vector<std::vector<std::size_t>> adjacency,
                     StateKind kind)
    : spec_(spec),
      kind_(kind),
      colorings_(std::move(states)),
      adjacency_(std::move(adjacency)) {
  if (kind_ == StateKind::kAssignment) {
    throw InvalidArgument("coloring states need a coloring state kind");
  }
  if (colorings_.size() != adjacency_.size()) {
    throw InvalidArgument("state and adjacency counts differ");
  }
  for (const auto& s : colorings_) {
    if (s.rows() != spec_.rows() || s.cols() != spec_.cols()) {
      throw InvalidArgument("state has foreign dimensions");
    }
    if (kind_ == StateKind::kColoring && !s.is_canonical()) {
      throw InvalidArgument("coloring states must be canonical");
    }
  }
  validate();
}

void FlipGraph::validate() {
  const std::size_t n = adjacency_.size();
  std::uint64_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& nbrs = adjacency_[v];
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const std::size_t u = nbrs[k];
      if (u >= n) throw InvalidArgument("neighbour index out of range");
      if (u == v) throw InvalidArgument("self-loop at " + std::to_string(v));
      if (k > 0 && nbrs[k - 1] >= u) {
        throw InvalidArgument("neighbour lists must be strictly ascending");
      }
      if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v)) {
        throw InvalidArgument("adjacency is not symmetric");
      }
    }
    degree_sum += nbrs.size();
  }
  edge_count_ = degree_sum / 2;
}

std::span<const std::size_t> FlipGraph::neighbors(std::size_t v) const {
  require_vertex(*this, v);
  return adjacency_[v];
}

const std::vector<MVAssignment>& FlipGraph::assignments() const {
  if (kind_ != StateKind::kAssignment) {
    throw InvalidArgument("graph states are colorings, not assignments");
  }
  return assignments_;
}

const std::vector<GridColoring>& FlipGraph::colorings() const {
  if (kind_ == StateKind::kAssignment) {
    throw InvalidArgument("graph states are assignments, not colorings");
  }
  return colorings_;
}

std::string FlipGraph::state_label(std::size_t v) const {
  require_vertex(*this, v);
  return kind_ == StateKind::kAssignment ? assignments_[v].to_string()
                                         : colorings_[v].to_string();
}

std::optional<std::size_t> FlipGraph::find(const MVAssignment& mv) const {
  if (kind_ == StateKind::kAssignment) {
    auto it = std::lower_bound(assignments_.begin(), assignments_.end(), mv);
    if (it == assignments_.end() || *it != mv) return std::nullopt;
    return static_cast<std::size_t>(it - assignments_.begin());
  }
  if (kind_ == StateKind::kColoring && is_locally_valid(mv) &&
      mv.spec() == spec_) {
    return find(mv_to_coloring(mv));
  }
  return std::nullopt;
}

std::optional<std::size_t> FlipGraph::find(const GridColoring& coloring) const {
  if (kind_ == StateKind::kAssignment) {
    if (coloring.rows() != 2 || !coloring.is_proper()) return std::nullopt;
    return find(coloring_to_mv(coloring));
  }
  const GridColoring key =
      kind_ == StateKind::kColoring ? coloring.canonical() : coloring;
  auto it = std::lower_bound(colorings_.begin(), colorings_.end(), key);
  if (it == colorings_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - colorings_.begin());
}

std::size_t FlipGraph::opposite_of(std::size_t v) const {
  require_vertex(*this, v);
  std::optional<std::size_t> out;
  if (kind_ == StateKind::kAssignment) {
    out = find(opposite(assignments_[v]));
  } else {
    const GridColoring& c = colorings_[v];
    std::vector<std::uint8_t> negated(c.colors().begin(), c.colors().end());
    for (auto& x : negated) x = static_cast<std::uint8_t>((3 - x) % 3);
    out = find(GridColoring(c.rows(), c.cols(), std::move(negated)));
  }
  if (!out) throw InternalError("opposite state missing from the graph");
  return *out;
}

FlipGraph build_ofg(const MiuraSpec& spec, const BuildOptions& options) {
  return spec.rows() == 2 ? build_crease_ofg(spec, options)
                          : build_coloring_ofg(spec, options);
}

FlipGraph build_crease_ofg(const MiuraSpec& spec, const BuildOptions& options) {
  crease_count(spec);  // rejects rows != 2
  check_cap(2 * pow3(spec.cols() - 1), options);
  std::vector<MVAssignment> states = enumerate_valid(spec);
  std::vector<std::uint64_t> codes;
  codes.reserve(states.size());
  for (const auto& s : states) codes.push_back(s.code());

  const std::vector<FaceId> all_faces = faces(spec);
  std::vector<std::vector<std::size_t>> adjacency(states.size());
  detail::parallel_for(states.size(), options.threads,
                       [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      auto& out = adjacency[i];
      for (FaceId f : all_faces) {
        if (!is_flippable(states[i], f)) continue;
        const std::size_t j = lookup(codes, flip_face(states[i], f).code());
        if (j != i) out.push_back(j);
      }
      sort_unique(out);
    }
  });
  return FlipGraph(spec, std::move(states), std::move(adjacency));
}

FlipGraph build_coloring_ofg(const MiuraSpec& spec, const BuildOptions& options) {
  check_cap(count_colorings(spec.rows(), spec.cols()), options);
  std::vector<GridColoring> states = enumerate_colorings(spec.rows(), spec.cols());
  auto adjacency = recoloring_adjacency(states, true, options.threads);
  return FlipGraph(spec, std::move(states), std::move(adjacency),
                   StateKind::kColoring);
}

FlipGraph build_reconfiguration_graph(const MiuraSpec& spec,
                                      const BuildOptions& options) {
  check_cap(3 * count_colorings(spec.rows(), spec.cols()), options);
  std::vector<GridColoring> states;
  for (const auto& c : enumerate_colorings(spec.rows(), spec.cols())) {
    for (int shift = 0; shift < 3; ++shift) states.push_back(c.rotated(shift));
  }
  std::sort(states.begin(), states.end());
  auto adjacency = recoloring_adjacency(states, false, options.threads);
  return FlipGraph(spec, std::move(states), std::move(adjacency),
                   StateKind::kRawColoring);
}

DegreeDistribution degree_distribution(const FlipGraph& g) {
  DegreeDistribution out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    ++out[static_cast<int>(g.degree(v))];
  }
  return out;
}

std::uint64_t closed_form_vertex_count(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  return 2 * pow3(n - 1);
}

std::uint64_t closed_form_edge_count(int n) {
  if (n < 2) throw InvalidArgument("the edge-count formula needs n >= 2");
  // 8 (n+1) 3^(n-3) = 8 (n+1) 3^(n-1) / 9, exact for n >= 2.
  return 8 * static_cast<std::uint64_t>(n + 1) * pow3(n - 1) / 9;
}

CountReport count_checks(const FlipGraph& g) {
  if (g.spec().rows() != 2) {
    throw InvalidArgument("count checks apply to 2 x n graphs");
  }
  const int n = g.spec().cols();
  CountReport report;
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    report.degree_sum += g.degree(v);
  }
  report.expected_vertices = closed_form_vertex_count(n);
  if (n >= 2) report.expected_edges = closed_form_edge_count(n);
  return report;
}

std::vector<int> bfs_distances(const FlipGraph& g, std::size_t source) {
  require_vertex(g, source);
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u : g.adjacency()[v]) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> shortest_path(const FlipGraph& g, std::size_t from,
                                       std::size_t to) {
  require_vertex(g, from);
  require_vertex(g, to);
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(g.vertex_count(), kNone);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty() && parent[to] == kNone) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u : g.adjacency()[v]) {
      if (parent[u] == kNone) {
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  if (parent[to] == kNone) return {};
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_connected(const FlipGraph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

DiameterResult diameter_bfs(const FlipGraph& g, unsigned threads,
                            std::size_t vertex_cap) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_cap) {
    throw ResourceLimit("all-pairs BFS over " + std::to_string(n) +
                        " vertices exceeds the cap of " +
                        std::to_string(vertex_cap));
  }
  if (n == 0) throw InvalidArgument("empty graph has no diameter");

  struct SourceResult {
    int eccentricity = 0;
    std::size_t farthest = 0;
    int opposite_distance = 0;
  };
  std::vector<std::size_t> opposite(n);
  for (std::size_t v = 0; v < n; ++v) opposite[v] = g.opposite_of(v);

  std::vector<SourceResult> per_source(n);
  detail::parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t s = b; s < e; ++s) {
      const auto dist = bfs_distances(g, s);
      SourceResult r;
      for (std::size_t t = 0; t < n; ++t) {
        if (dist[t] == kUnreachable) {
          throw InvalidArgument("graph is disconnected; diameter is infinite");
        }
        if (dist[t] > r.eccentricity) {
          r.eccentricity = dist[t];
          r.farthest = t;
        }
      }
      r.opposite_distance = dist[opposite[s]];
      per_source[s] = r;
    }
  });

  DiameterResult out;
  out.diameter = -1;
  for (std::size_t s = 0; s < n; ++s) {
    if (per_source[s].eccentricity > out.diameter) {
      out.diameter = per_source[s].eccentricity;
      out.from = std::min(s, per_source[s].farthest);
      out.to = std::max(s, per_source[s].farthest);
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (per_source[s].opposite_distance == out.diameter) {
      out.opposite_witness = std::pair{s, opposite[s]};
      break;
    }
  }
  return out;
}

std::vector<std::size_t> degree2_vertices(const FlipGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 2) out.push_back(v);
  }
  return out;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::kDot;
  if (name == "json") return ExportFormat::kJson;
  if (name == "edges" || name == "edge-list") return ExportFormat::kEdgeList;
  throw InvalidArgument("unknown graph format '" + std::string(name) +
                        "' (expected dot, json or edges)");
}

std::string export_graph(const FlipGraph& g, ExportFormat format) {
  const std::size_t n = g.vertex_count();
  std::ostringstream os;
  switch (format) {
    case ExportFormat::kDot: {
      os << "graph ofg_" << g.spec().rows() << "x" << g.spec().cols() << " {\n";
      for (std::size_t v = 0; v < n; ++v) {
        std::string label = g.state_label(v);
        std::string escaped;
        for (char c : label) {
          if (c == '\n') {
            escaped += "\\n";
          } else {
            escaped.push_back(c);
          }
        }
        os << "  " << v << " [label=\"" << escaped << "\"];\n";
      }
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u : g.adjacency()[v]) {
          if (v < u) os << "  " << v << " -- " << u << ";\n";
        }
      }
      os << "}\n";
      return os.str();
    }
    case ExportFormat::kEdgeList: {
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u : g.adjacency()[v]) {
          if (v < u) os << v << ' ' << u << '\n';
        }
      }
      return os.str();
    }
    case ExportFormat::kJson: {
      nlohmann::ordered_json j;
      j["spec"] = {{"rows", g.spec().rows()}, {"cols", g.spec().cols()}};
      j["states"] = nlohmann::ordered_json::array();
      for (std::size_t v = 0; v < n; ++v) j["states"].push_back(g.state_label(v));
      j["adjacency"] = g.adjacency();
      nlohmann::ordered_json degrees = nlohmann::ordered_json::object();
      for (const auto& [d, count] : degree_distribution(g)) {
        degrees[std::to_string(d)] = count;
      }
      j["degrees"] = degrees;
      j["vertex_count"] = n;
      j["edge_count"] = g.edge_count();
      return j.dump(2) + "\n";
    }
  }
  throw InvalidArgument("unknown export format");
}

FlipGraph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const MiuraSpec spec(j.at("spec").at("rows").get<int>(),
                         j.at("spec").at("cols").get<int>());
    auto states = j.at("states").get<std::vector<std::string>>();
    auto adjacency = j.at("adjacency").get<std::vector<std::vector<std::size_t>>>();
    const bool mv_labels =
        !states.empty() &&
        states.front().find_first_of("MV") != std::string::npos;
    std::optional<FlipGraph> g;
    if (mv_labels) {
      std::vector<MVAssignment> parsed;
      for (const auto& s : states) parsed.push_back(MVAssignment::parse(s, spec));
      g.emplace(spec, std::move(parsed), std::move(adjacency));
    } else {
      std::vector<GridColoring> parsed;
      bool canonical = true;
      for (const auto& s : states) {
        const auto c = GridColoring::parse(s, ColoringInput::kCanonicalize);
        const int shift = s.front() - '0';
        if (shift != 0) canonical = false;
        parsed.push_back(c.rotated(shift));
      }
      g.emplace(spec, std::move(parsed), std::move(adjacency),
                canonical ? StateKind::kColoring : StateKind::kRawColoring);
    }
    if (j.at("vertex_count").get<std::size_t>() != g->vertex_count() ||
        j.at("edge_count").get<std::size_t>() != g->edge_count()) {
      throw InvalidArgument("graph JSON counts disagree with its adjacency");
    }
    return std::move(*g);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace miura
