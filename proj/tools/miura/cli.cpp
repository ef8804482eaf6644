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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "miura/coloring.hpp"
#include "miura/error.hpp"
#include "miura/flip_graph.hpp"
#include "miura/forest.hpp"
#include "miura/heights_distance.hpp"
#include "miura/miura_core.hpp"
#include "verify.hpp"

namespace miura::cli {

namespace {

using Json = nlohmann::ordered_json;

// Widest m = 2 strip the BFS-based commands accept without --force.
constexpr int kBfsWidthLimit = 9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned threads = 0;
  std::string out_path;
  bool force = false;
  std::size_t cap = BuildOptions{}.state_cap;

  BuildOptions build() const { return {cap, threads}; }
};

struct Shape {
  int rows = 2;
  int cols = 0;
  MiuraSpec spec() const { return MiuraSpec(rows, cols); }
};

unsigned threads_from_env() {
  const char* raw = std::getenv("MIURA_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > 4096) {
    throw UsageError(std::string("MIURA_THREADS must be a thread count, got '") +
                     raw + "'");
  }
  return static_cast<unsigned>(v);
}

void guard_bfs(const Globals& g, const Shape& s) {
  if (s.rows == 2 && s.cols > kBfsWidthLimit && !g.force) {
    throw UsageError("BFS on the 2 x " + std::to_string(s.cols) +
                     " graph is expensive; pass --force to run it anyway");
  }
}

Json degrees_json(const DegreeDistribution& dist) {
  Json out = Json::object();
  for (const auto& [d, count] : dist) out[std::to_string(d)] = count;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// A state on the command line: an MV string ("MMVM") or coloring rows
// separated by '/' or newlines ("01/10").
struct State {
  std::optional<MVAssignment> mv;
  std::optional<GridColoring> coloring;
};

State parse_state(const std::string& text, bool raw) {
  const bool is_mv = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return c == 'M' || c == 'V';
  });
  if (is_mv) {
    if (raw) throw UsageError("--raw compares colorings, not MV assignments");
    return {MVAssignment::parse(text), std::nullopt};
  }
  std::string rows = text;
  std::replace(rows.begin(), rows.end(), '/', '\n');
  auto c = GridColoring::parse(rows, ColoringInput::kCanonicalize);
  if (raw) {
    // kCanonicalize rotated the input; undo it to keep the raw colors.
    const int first = rows.front() - '0';
    c = c.rotated(first);
  }
  return {std::nullopt, c};
}

GridColoring as_coloring(const State& s) {
  return s.coloring ? *s.coloring : mv_to_coloring(*s.mv);
}

Shape shape_of(const GridColoring& c) { return {c.rows(), c.cols()}; }

// --- subcommands -----------------------------------------------------------

std::string cmd_enumerate(const Globals& g, const Shape& s, bool count_only) {
  Json out;
  out["rows"] = s.rows;
  out["cols"] = s.cols;
  const auto spec = s.spec();
  const std::uint64_t count = count_colorings(s.rows, s.cols);
  out["count"] = count;
  if (count_only) return dump(out);
  if (count > g.cap) {
    throw ResourceLimit(std::to_string(count) + " states exceed the cap of " +
                        std::to_string(g.cap) + "; raise --cap or use --count-only");
  }
  Json states = Json::array();
  if (s.rows == 2) {
    for (const auto& mv : enumerate_valid(spec)) states.push_back(mv.to_string());
  } else {
    for (const auto& c : enumerate_colorings(s.rows, s.cols)) {
      states.push_back(c.to_string());
    }
  }
  out["states"] = std::move(states);
  return dump(out);
}

std::string cmd_stats(const Globals& g, const Shape& s) {
  const FlipGraph graph = build_ofg(s.spec(), g.build());
  Json out;
  out["rows"] = s.rows;
  out["cols"] = s.cols;
  out["vertices"] = graph.vertex_count();
  out["edges"] = graph.edge_count();
  out["degrees"] = degrees_json(degree_distribution(graph));
  if (s.rows == 2) {
    const auto report = count_checks(graph);
    Json closed;
    closed["vertices"] = report.expected_vertices;
    closed["edges"] = report.expected_edges ? Json(*report.expected_edges) : Json(nullptr);
    out["closed_form"] = std::move(closed);
    out["closed_form_ok"] = report.passed();
    if (!report.passed()) throw CheckFailed(dump(out));
  }
  return dump(out);
}

std::string cmd_graph(const Globals& g, const Shape& s, const std::string& format,
                      bool raw) {
  const ExportFormat f = parse_export_format(format);
  const FlipGraph graph = raw ? build_reconfiguration_graph(s.spec(), g.build())
                              : build_ofg(s.spec(), g.build());
  return export_graph(graph, f);
}

std::string cmd_distance(const Globals& g, const std::string& from,
                         const std::string& to, const std::string& method, bool raw) {
  const State a = parse_state(from, raw);
  const State b = parse_state(to, raw);
  const GridColoring ca = as_coloring(a);
  const GridColoring cb = as_coloring(b);
  if (ca.rows() != cb.rows() || ca.cols() != cb.cols()) {
    throw UsageError("--from and --to describe different grid sizes");
  }
  const bool want_formula = method == "formula" || method == "both";
  const bool want_bfs = method == "bfs" || method == "both";

  Json out;
  out["from"] = a.mv ? a.mv->to_string() : ca.to_string();
  out["to"] = b.mv ? b.mv->to_string() : cb.to_string();
  std::optional<int> formula;
  std::optional<int> bfs;
  if (want_formula) {
    formula = raw ? r3_distance(ca, cb) : class_distance(ca, cb);
    out["formula"] = *formula;
  }
  if (want_bfs) {
    const Shape s = shape_of(ca);
    guard_bfs(g, s);
    const FlipGraph graph = raw ? build_reconfiguration_graph(s.spec(), g.build())
                                : build_ofg(s.spec(), g.build());
    const auto src = graph.find(ca);
    const auto dst = graph.find(cb);
    if (!src || !dst) throw InternalError("state missing from its own flip graph");
    const int d = bfs_distances(graph, *src)[*dst];
    bfs = d;
    out["bfs"] = d;
    if (method == "both") {
      out["agree"] = *formula == d;
      if (*formula != d) throw CheckFailed(dump(out));
    }
    const auto path = shortest_path(graph, *src, *dst);
    Json p = Json::array();
    for (std::size_t v : path) p.push_back(graph.state_label(v));
    out["path"] = std::move(p);
  }
  return dump(out);
}

std::string cmd_diameter(const Globals& g, const Shape& s, const std::string& method) {
  const bool want_formula = method == "formula" || method == "both";
  const bool want_bfs = method == "bfs" || method == "both";
  if (want_formula && s.rows != 2) {
    throw UsageError("the diameter formula covers 2 x n strips; use --method bfs");
  }
  Json out;
  out["rows"] = s.rows;
  out["cols"] = s.cols;
  std::optional<std::int64_t> formula;
  bool failed = false;
  if (want_formula) {
    formula = diameter_closed_form(s.cols);
    out["formula"] = *formula;
    if (s.cols >= 2) {
      const auto check = diameter_formula(s.cols);
      out["opposite_degree2_distances"] = check.pair_distances;
      out["formula_verified"] = check.verified;
      failed = failed || !check.verified;
    }
  }
  if (want_bfs) {
    guard_bfs(g, s);
    const FlipGraph graph = build_ofg(s.spec(), g.build());
    const auto d = diameter_bfs(graph, g.threads, std::max<std::size_t>(g.cap, 1));
    out["bfs"] = d.diameter;
    out["witness"] = {graph.state_label(d.from), graph.state_label(d.to)};
    if (d.opposite_witness) {
      out["opposite_witness"] = {graph.state_label(d.opposite_witness->first),
                                 graph.state_label(d.opposite_witness->second)};
    }
    if (formula && *formula != d.diameter) failed = true;
  }
  if (method == "both") out["agree"] = !failed;
  if (failed) throw CheckFailed(dump(out));
  return dump(out);
}

std::string forest_json(const std::vector<GenerationTable>& tables) {
  Json out;
  out["generations"] = tables.size();
  Json list = Json::array();
  for (const auto& t : tables) {
    Json gen;
    gen["n"] = t.generation();
    gen["total"] = t.total();
    Json v = Json::object(), b = Json::object(), w = Json::object();
    for (int d : t.support()) {
      const std::string key = std::to_string(d);
      v[key] = t.v(d);
      if (t.b(d) != 0) b[key] = t.b(d);
      if (t.w(d) != 0) w[key] = t.w(d);
    }
    gen["v"] = std::move(v);
    gen["b"] = std::move(b);
    gen["w"] = std::move(w);
    list.push_back(std::move(gen));
  }
  out["tables"] = std::move(list);
  return dump(out);
}

std::string forest_grid(const std::vector<GenerationTable>& tables, bool csv) {
  const int n_max = static_cast<int>(tables.size());
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"d"};
  for (int n = 1; n <= n_max; ++n) header.push_back("n=" + std::to_string(n));
  grid.push_back(header);
  for (int d = 2; d <= 2 * n_max; ++d) {
    std::vector<std::string> row{std::to_string(d)};
    for (const auto& t : tables) row.push_back(std::to_string(t.v(d)));
    grid.push_back(std::move(row));
  }
  std::ostringstream out;
  if (csv) {
    for (const auto& row : grid) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << "\n";
    }
    return out.str();
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string cmd_forest(int generations, const std::string& emit) {
  const auto tables = generate_chi_d(generations);
  if (emit == "json") return forest_json(tables);
  return forest_grid(tables, emit == "csv");
}

std::string cmd_verify(const Globals& g, int n_max, const std::string& format) {
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  guard_bfs(g, {2, n_max});
  VerifyOptions options;
  options.n_max = n_max;
  options.threads = g.threads;
  options.state_cap = g.cap;
  const VerifyReport report = run_verify(options);
  std::string text = format == "json" ? report.to_json() : report.to_table();
  if (!report.passed()) throw CheckFailed(text);
  return text;
}

std::string cmd_bijection(const std::string& mv_text, const std::string& coloring_text) {
  Json out;
  if (!mv_text.empty()) {
    const auto mv = MVAssignment::parse(mv_text);
    if (!is_locally_valid(mv)) {
      throw InvalidArgument(mv_text + " is not a valid MV assignment");
    }
    const auto c = mv_to_coloring(mv);
    out["mv"] = mv.to_string();
    out["coloring"] = c.to_string();
    out["round_trip"] = coloring_to_mv(c) == mv;
  } else {
    std::string rows = coloring_text;
    std::replace(rows.begin(), rows.end(), '/', '\n');
    const auto c = GridColoring::parse(rows, ColoringInput::kCanonicalize);
    const auto mv = coloring_to_mv(c);
    out["coloring"] = c.to_string();
    out["mv"] = mv.to_string();
    out["round_trip"] = mv_to_coloring(mv) == c;
  }
  if (!out["round_trip"].get<bool>()) throw CheckFailed(dump(out));
  return dump(out);
}

void emit(const Globals& g, const std::string& text, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + g.out_path + " for writing");
  file << text;
  if (!file) throw UsageError("failed writing " + g.out_path);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flip graphs of 2 x n Miura-ori crease patterns and grid 3-colorings",
               "miura"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  try {
    g.threads = threads_from_env();
  } catch (const UsageError& e) {
    err << "miura: " << e.what() << "\n";
    return kExitUsage;
  }
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores; env MIURA_THREADS)");
  app.add_option("--out", g.out_path, "Write results to this file instead of stdout");
  app.add_flag("--force", g.force, "Allow BFS on strips wider than 9");
  app.add_option("--cap", g.cap, "Refuse to build graphs with more states")
      ->check(CLI::PositiveNumber);

  Shape shape;
  auto add_shape = [&shape](CLI::App* sub) {
    sub->add_option("--n", shape.cols, "Columns")->required()->check(CLI::PositiveNumber);
    sub->add_option("--m", shape.rows, "Rows (default 2)")->check(CLI::PositiveNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List the states of a grid");
  add_shape(enumerate);
  bool count_only = false;
  enumerate->add_flag("--count-only", count_only, "Print only the count");

  auto* stats = app.add_subcommand("stats", "Vertex, edge and degree counts");
  add_shape(stats);

  auto* graph = app.add_subcommand("graph", "Export a flip graph");
  add_shape(graph);
  std::string format = "json";
  bool raw = false;
  graph->add_option("--format", format, "dot, json or edges")
      ->check(CLI::IsMember({"dot", "json", "edges", "edge-list"}));
  graph->add_flag("--raw", raw, "Raw colorings (3-coloring reconfiguration graph)");

  auto* distance = app.add_subcommand("distance", "Flip distance between two states");
  std::string from, to, method = "formula";
  distance->add_option("--from", from, "MV string or coloring rows joined by '/'")->required();
  distance->add_option("--to", to, "MV string or coloring rows joined by '/'")->required();
  distance->add_option("--method", method, "formula, bfs or both")
      ->check(CLI::IsMember({"formula", "bfs", "both"}));
  distance->add_flag("--raw", raw, "Distance between raw colorings");

  auto* diameter = app.add_subcommand("diameter", "Diameter of a flip graph");
  add_shape(diameter);
  std::string diameter_method = "formula";
  diameter->add_option("--method", diameter_method, "formula, bfs or both")
      ->check(CLI::IsMember({"formula", "bfs", "both"}));

  auto* forest = app.add_subcommand("forest", "Degree extension forest tables");
  int generations = 9;
  std::string forest_emit = "json";
  forest->add_option("--generations", generations, "Number of generations")
      ->check(CLI::Range(1, 40));
  forest->add_option("--emit", forest_emit, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Run the claim suite");
  int n_max = 7;
  std::string verify_format = "table";
  verify->add_option("--n-max", n_max, "Largest strip width for graph claims");
  verify->add_option("--format", verify_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* bijection = app.add_subcommand("bijection", "Map between MV assignments and colorings");
  std::string mv_text, coloring_text;
  auto* mv_opt = bijection->add_option("--mv", mv_text, "MV string, e.g. MMVM");
  auto* col_opt = bijection->add_option("--coloring", coloring_text, "Rows joined by '/'");
  mv_opt->excludes(col_opt);
  bijection->require_option(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "miura: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string text;
    if (*enumerate) {
      text = cmd_enumerate(g, shape, count_only);
    } else if (*stats) {
      text = cmd_stats(g, shape);
    } else if (*graph) {
      text = cmd_graph(g, shape, format, raw);
    } else if (*distance) {
      text = cmd_distance(g, from, to, method, raw);
    } else if (*diameter) {
      text = cmd_diameter(g, shape, diameter_method);
    } else if (*forest) {
      text = cmd_forest(generations, forest_emit);
    } else if (*verify) {
      text = cmd_verify(g, n_max, verify_format);
    } else if (*bijection) {
      text = cmd_bijection(mv_text, coloring_text);
    }
    emit(g, text, out);
    return kExitOk;
  } catch (const CheckFailed& e) {
    try {
      emit(g, e.what(), out);
    } catch (const UsageError& io) {
      err << "miura: " << io.what() << "\n";
    }
    err << "miura: check failed\n";
    return kExitCheckFailed;
  } catch (const UsageError& e) {
    err << "miura: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "miura: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "miura: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "miura: internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace miura::cli
