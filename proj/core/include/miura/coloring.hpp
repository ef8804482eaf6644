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

#ifndef MIURA_COLORING_HPP
#define MIURA_COLORING_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "miura/miura_core.hpp"

namespace miura {

/// Vertex v_{row,col} of the dual grid graph; it sits on face alpha_{row,col}.
using GridVertex = FaceId;

/// How text input that is not in canonical form is handled.
enum class ColoringInput { kRequireCanonical, kCanonicalize };

/// A coloring of the rows x cols grid graph with colors in Z_3, stored
/// row-major. Proper-ness is checked by is_proper(), not by the constructor,
/// so that improper intermediate colorings can be represented and rejected
/// by the operations that need proper input.
class GridColoring {
 public:
  GridColoring(int rows, int cols, std::vector<std::uint8_t> colors);

  /// Parses `rows` lines of digits 0..2. The coloring must be proper.
  static GridColoring parse(std::string_view text, ColoringInput policy);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return colors_.size(); }

  std::uint8_t operator()(int row, int col) const {
    return colors_[index(row, col)];
  }
  std::uint8_t at(GridVertex v) const;
  std::span<const std::uint8_t> colors() const { return colors_; }

  bool is_proper() const;
  bool is_canonical() const { return colors_.front() == 0; }

  /// Adds `shift` to every color mod 3.
  GridColoring rotated(int shift) const;
  /// Rotation that puts color 0 at v_{1,1}.
  GridColoring canonical() const { return rotated(3 - colors_.front()); }
  GridColoring with_color(GridVertex v, std::uint8_t color) const;

  /// One line of digits per row, rows separated by '\n'.
  std::string to_string() const;

  /// Row-major base-3 rank; order-preserving. Needs rows*cols <= 40.
  std::uint64_t code() const;

  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>((row - 1) * cols_ + (col - 1));
  }

  friend bool operator==(const GridColoring&, const GridColoring&) = default;
  friend auto operator<=>(const GridColoring&, const GridColoring&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> colors_;
};

/// Relative heights h(v) of one coloring against another, based at v_{1,1}.
class HeightProfile {
 public:
  HeightProfile(int rows, int cols, std::vector<int> values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int row, int col) const {
    return values_[static_cast<std::size_t>((row - 1) * cols_ + (col - 1))];
  }
  std::span<const int> values() const { return values_; }

  friend bool operator==(const HeightProfile&, const HeightProfile&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<int> values_;
};

GridColoring canonicalize(const GridColoring& coloring);

/// Coloring of the 2 x n dual grid built along the boustrophedon path from
/// a valid assignment. Canonical.
GridColoring mv_to_coloring(const MVAssignment& mv);

/// Inverse of mv_to_coloring. Any rotation of a proper 2 x n coloring maps
/// to the same assignment.
MVAssignment coloring_to_mv(const GridColoring& coloring);

/// All proper colorings with color 0 at v_{1,1}, row-major lexicographic.
std::vector<GridColoring> enumerate_colorings(int rows, int cols);

/// Number of colorings enumerate_colorings would return (transfer matrix).
std::uint64_t count_colorings(int rows, int cols);

/// Orthogonal neighbours of v, in the order up, left, right, down.
std::vector<GridVertex> grid_neighbors(int rows, int cols, GridVertex v);

/// Snake order: row 1 left to right, row 2 right to left, and so on.
std::vector<GridVertex> boustrophedon_path(int rows, int cols);

/// Colors v can be changed to while the coloring stays proper.
std::vector<std::uint8_t> recolor_options(const GridColoring& coloring,
                                          GridVertex v);

/// The value in {+1, -1} congruent to color(v) - color(u) mod 3.
int edge_weight(const GridColoring& coloring, GridVertex u, GridVertex v);

/// Sum of edge weights along consecutive vertices of `path`.
int path_weight(const GridColoring& coloring, std::span<const GridVertex> path);

/// h(v) = w(beta, P_{u,v}) - w(gamma, P_{u,v}) with u = v_{1,1}, computed
/// along the boustrophedon path.
HeightProfile height_profile(const GridColoring& gamma,
                             const GridColoring& beta);

}  // namespace miura

#endif  // MIURA_COLORING_HPP
