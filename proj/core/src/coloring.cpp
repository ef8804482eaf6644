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

#include "miura/coloring.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "miura/error.hpp"

namespace miura {

namespace {

std::uint8_t mod3(int x) { return static_cast<std::uint8_t>(((x % 3) + 3) % 3); }

std::string vertex_name(GridVertex v) {
  return "v(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

bool in_grid(int rows, int cols, GridVertex v) {
  return v.row >= 1 && v.row <= rows && v.col >= 1 && v.col <= cols;
}

void require_vertex(const GridColoring& c, GridVertex v) {
  if (!in_grid(c.rows(), c.cols(), v)) {
    throw InvalidArgument("vertex " + vertex_name(v) + " is outside the grid");
  }
}

void require_proper(const GridColoring& c) {
  if (!c.is_proper()) {
    throw InvalidArgument("coloring is not proper:\n" + c.to_string());
  }
}

bool adjacent(GridVertex u, GridVertex v) {
  const int dr = u.row - v.row;
  const int dc = u.col - v.col;
  return dr * dr + dc * dc == 1;
}

// Proper vertical columns of height m, as color vectors.
std::vector<std::vector<std::uint8_t>> column_states(int rows) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> col(static_cast<std::size_t>(rows));
  std::function<void(int)> fill = [&](int i) {
    if (i == rows) {
      out.push_back(col);
      return;
    }
    for (std::uint8_t c = 0; c < 3; ++c) {
      if (i > 0 && col[static_cast<std::size_t>(i - 1)] == c) continue;
      col[static_cast<std::size_t>(i)] = c;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

bool compatible(const std::vector<std::uint8_t>& a,
                const std::vector<std::uint8_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) return false;
  }
  return true;
}

}  // namespace

GridColoring::GridColoring(int rows, int cols, std::vector<std::uint8_t> colors)
    : rows_(rows), cols_(cols), colors_(std::move(colors)) {
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("grid dimensions must be positive");
  }
  if (colors_.size() != static_cast<std::size_t>(rows) * cols) {
    throw InvalidArgument("expected " + std::to_string(rows * cols) +
                          " colors, got " + std::to_string(colors_.size()));
  }
  for (std::uint8_t c : colors_) {
    if (c > 2) throw InvalidArgument("colors must lie in {0, 1, 2}");
  }
}

GridColoring GridColoring::parse(std::string_view text, ColoringInput policy) {
  std::vector<std::string> lines;
  std::string line;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(std::move(line));
      line.clear();
    } else if (ch != '\r') {
      line.push_back(ch);
    }
  }
  if (!line.empty()) lines.push_back(std::move(line));
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front().empty()) {
    throw InvalidArgument("empty coloring text");
  }
  const std::size_t cols = lines.front().size();
  std::vector<std::uint8_t> colors;
  for (const auto& l : lines) {
    if (l.size() != cols) {
      throw InvalidArgument("coloring rows have different lengths");
    }
    for (char ch : l) {
      if (ch < '0' || ch > '2') {
        throw InvalidArgument(std::string("coloring contains '") + ch +
                              "', expected digits 0..2");
      }
      colors.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
  }
  GridColoring out(static_cast<int>(lines.size()), static_cast<int>(cols),
                   std::move(colors));
  require_proper(out);
  if (!out.is_canonical()) {
    if (policy == ColoringInput::kRequireCanonical) {
      throw InvalidArgument("coloring is not canonical (v_{1,1} must be 0)");
    }
    out = out.canonical();
  }
  return out;
}

std::uint8_t GridColoring::at(GridVertex v) const {
  require_vertex(*this, v);
  return colors_[index(v.row, v.col)];
}

bool GridColoring::is_proper() const {
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) {
      if (j < cols_ && (*this)(i, j) == (*this)(i, j + 1)) return false;
      if (i < rows_ && (*this)(i, j) == (*this)(i + 1, j)) return false;
    }
  }
  return true;
}

GridColoring GridColoring::rotated(int shift) const {
  std::vector<std::uint8_t> colors(colors_.size());
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    colors[i] = mod3(colors_[i] + shift);
  }
  return GridColoring(rows_, cols_, std::move(colors));
}

GridColoring GridColoring::with_color(GridVertex v, std::uint8_t color) const {
  require_vertex(*this, v);
  if (color > 2) throw InvalidArgument("colors must lie in {0, 1, 2}");
  GridColoring out = *this;
  out.colors_[index(v.row, v.col)] = color;
  return out;
}

std::string GridColoring::to_string() const {
  std::string out;
  for (int i = 1; i <= rows_; ++i) {
    if (i > 1) out.push_back('\n');
    for (int j = 1; j <= cols_; ++j) {
      out.push_back(static_cast<char>('0' + (*this)(i, j)));
    }
  }
  return out;
}

std::uint64_t GridColoring::code() const {
  if (colors_.size() > 40) {
    throw InvalidArgument("coloring too large for a 64-bit code");
  }
  std::uint64_t code = 0;
  for (std::uint8_t c : colors_) code = code * 3 + c;
  return code;
}

HeightProfile::HeightProfile(int rows, int cols, std::vector<int> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(rows) * cols) {
    throw InvalidArgument("height profile has the wrong number of values");
  }
}

GridColoring canonicalize(const GridColoring& coloring) {
  return coloring.canonical();
}

GridColoring mv_to_coloring(const MVAssignment& mv) {
  if (!is_locally_valid(mv)) {
    throw InvalidArgument("cannot color an invalid assignment: " +
                          mv.to_string());
  }
  const int n = mv.cols();
  auto mu = [&](int label) { return value(mv[CreaseId(label)]); };
  std::vector<std::uint8_t> colors(static_cast<std::size_t>(2 * n));
  auto top = [&](int j) -> std::uint8_t& {
    return colors[static_cast<std::size_t>(j - 1)];
  };
  auto bottom = [&](int j) -> std::uint8_t& {
    return colors[static_cast<std::size_t>(n + j - 1)];
  };
  top(1) = 0;
  for (int j = 1; j < n; ++j) top(j + 1) = mod3(top(j) + mu(3 * j - 1));
  bottom(n) = mod3(top(n) + mu(3 * n - 3));
  for (int j = n; j > 1; --j) bottom(j - 1) = mod3(bottom(j) + mu(3 * j - 2));
  GridColoring out(2, n, std::move(colors));
  if (!out.is_proper()) {
    throw InternalError("boustrophedon coloring of a valid assignment is "
                        "not proper");
  }
  return out;
}

MVAssignment coloring_to_mv(const GridColoring& coloring) {
  if (coloring.rows() != 2) {
    throw InvalidArgument("crease-level assignments exist for 2-row grids only");
  }
  require_proper(coloring);
  const int n = coloring.cols();
  const MiuraSpec spec = MiuraSpec::strip(n);
  std::vector<Parity> parities(static_cast<std::size_t>(crease_count(spec)));
  auto set = [&](int label, GridVertex from, GridVertex to) {
    parities[CreaseId(label).slot()] =
        edge_weight(coloring, from, to) > 0 ? Parity::Mountain : Parity::Valley;
  };
  for (int j = 1; j <= n; ++j) {
    set(3 * j - 3, {1, j}, {2, j});
    if (j < n) {
      set(3 * j - 1, {1, j}, {1, j + 1});
      set(3 * j + 1, {2, j + 1}, {2, j});
    }
  }
  return MVAssignment(spec, std::move(parities));
}

std::vector<GridColoring> enumerate_colorings(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("grid dimensions must be positive");
  }
  const auto states = column_states(rows);
  std::vector<std::vector<std::size_t>> next(states.size());
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = 0; b < states.size(); ++b) {
      if (compatible(states[a], states[b])) next[a].push_back(b);
    }
  }

  std::vector<GridColoring> out;
  std::vector<std::size_t> chosen(static_cast<std::size_t>(cols));
  std::vector<std::uint8_t> colors(static_cast<std::size_t>(rows) * cols);
  std::function<void(int)> walk = [&](int j) {
    if (j == cols) {
      for (int c = 0; c < cols; ++c) {
        const auto& col = states[chosen[static_cast<std::size_t>(c)]];
        for (int r = 0; r < rows; ++r) {
          colors[static_cast<std::size_t>(r * cols + c)] =
              col[static_cast<std::size_t>(r)];
        }
      }
      out.emplace_back(rows, cols, colors);
      return;
    }
    for (std::size_t s : next[chosen[static_cast<std::size_t>(j - 1)]]) {
      chosen[static_cast<std::size_t>(j)] = s;
      walk(j + 1);
    }
  };
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (states[s][0] != 0) continue;
    chosen[0] = s;
    walk(1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_colorings(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("grid dimensions must be positive");
  }
  const auto states = column_states(rows);
  std::vector<std::uint64_t> ways(states.size(), 0);
  for (std::size_t s = 0; s < states.size(); ++s) ways[s] = states[s][0] == 0;
  for (int j = 1; j < cols; ++j) {
    std::vector<std::uint64_t> step(states.size(), 0);
    for (std::size_t a = 0; a < states.size(); ++a) {
      if (ways[a] == 0) continue;
      for (std::size_t b = 0; b < states.size(); ++b) {
        if (compatible(states[a], states[b])) step[b] += ways[a];
      }
    }
    ways = std::move(step);
  }
  std::uint64_t total = 0;
  for (std::uint64_t w : ways) total += w;
  return total;
}

std::vector<GridVertex> grid_neighbors(int rows, int cols, GridVertex v) {
  if (!in_grid(rows, cols, v)) {
    throw InvalidArgument("vertex is outside the grid");
  }
  std::vector<GridVertex> out;
  if (v.row > 1) out.push_back({v.row - 1, v.col});
  if (v.col > 1) out.push_back({v.row, v.col - 1});
  if (v.col < cols) out.push_back({v.row, v.col + 1});
  if (v.row < rows) out.push_back({v.row + 1, v.col});
  return out;
}

std::vector<GridVertex> boustrophedon_path(int rows, int cols) {
  std::vector<GridVertex> out;
  out.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = 1; i <= rows; ++i) {
    if (i % 2 == 1) {
      for (int j = 1; j <= cols; ++j) out.push_back({i, j});
    } else {
      for (int j = cols; j >= 1; --j) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<std::uint8_t> recolor_options(const GridColoring& coloring,
                                          GridVertex v) {
  const std::uint8_t current = coloring.at(v);
  bool used[3] = {false, false, false};
  for (GridVertex u : grid_neighbors(coloring.rows(), coloring.cols(), v)) {
    used[coloring.at(u)] = true;
  }
  std::vector<std::uint8_t> out;
  for (std::uint8_t c = 0; c < 3; ++c) {
    if (c != current && !used[c]) out.push_back(c);
  }
  return out;
}

int edge_weight(const GridColoring& coloring, GridVertex u, GridVertex v) {
  require_vertex(coloring, u);
  require_vertex(coloring, v);
  if (!adjacent(u, v)) {
    throw InvalidArgument("edge weight needs adjacent vertices, got " +
                          vertex_name(u) + " and " + vertex_name(v));
  }
  const std::uint8_t diff = mod3(coloring.at(v) - coloring.at(u));
  if (diff == 0) {
    throw InvalidArgument("edge weight is undefined on a monochromatic edge");
  }
  return diff == 1 ? 1 : -1;
}

int path_weight(const GridColoring& coloring, std::span<const GridVertex> path) {
  int total = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    total += edge_weight(coloring, path[i - 1], path[i]);
  }
  return total;
}

HeightProfile height_profile(const GridColoring& gamma,
                             const GridColoring& beta) {
  if (gamma.rows() != beta.rows() || gamma.cols() != beta.cols()) {
    throw InvalidArgument("height profile needs colorings of equal dimensions");
  }
  require_proper(gamma);
  require_proper(beta);
  std::vector<int> values(gamma.size(), 0);
  const auto path = boustrophedon_path(gamma.rows(), gamma.cols());
  int h = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    h += edge_weight(beta, path[i - 1], path[i]) -
         edge_weight(gamma, path[i - 1], path[i]);
    values[gamma.index(path[i].row, path[i].col)] = h;
  }
  return HeightProfile(gamma.rows(), gamma.cols(), std::move(values));
}

}  // namespace miura
