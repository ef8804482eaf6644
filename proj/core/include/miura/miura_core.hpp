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

#ifndef MIURA_MIURA_CORE_HPP
#define MIURA_MIURA_CORE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace miura {

/// Mountain-valley parity of a crease. Mountain is +1, valley is -1.
enum class Parity : std::int8_t { Mountain = 1, Valley = -1 };

constexpr Parity operator-(Parity p) {
  return p == Parity::Mountain ? Parity::Valley : Parity::Mountain;
}
constexpr int value(Parity p) { return static_cast<int>(p); }
constexpr char to_char(Parity p) { return p == Parity::Mountain ? 'M' : 'V'; }

/// Dimensions of an m x n Miura-ori tessellation. Crease-level operations
/// need rows == 2; coloring-space operations accept any positive size.
class MiuraSpec {
 public:
  MiuraSpec(int rows, int cols);

  /// The 2 x n strip.
  static MiuraSpec strip(int cols) { return MiuraSpec(2, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int face_count() const { return rows_ * cols_; }

  friend bool operator==(const MiuraSpec&, const MiuraSpec&) = default;

 private:
  int rows_;
  int cols_;
};

/// A crease of the 2 x n strip, identified by its label e_k. The leftmost
/// horizontal crease is label 0 (labels 0 and 1 name the same crease, so
/// label 1 is never used). Labels map onto dense storage slots
/// 0, 1, ..., 3n-3.
class CreaseId {
 public:
  constexpr explicit CreaseId(int label) : label_(label) {}

  static constexpr CreaseId from_slot(std::size_t slot) {
    return CreaseId(slot == 0 ? 0 : static_cast<int>(slot) + 1);
  }

  constexpr int label() const { return label_; }
  constexpr std::size_t slot() const {
    return label_ == 0 ? 0 : static_cast<std::size_t>(label_ - 1);
  }

  friend constexpr auto operator<=>(CreaseId, CreaseId) = default;

 private:
  int label_;
};

/// Face alpha_{row,col} with 1-based indices. The same pair names the
/// matching vertex v_{row,col} of the dual grid graph.
struct FaceId {
  int row = 1;
  int col = 1;

  friend constexpr auto operator<=>(const FaceId&, const FaceId&) = default;
};

/// The four creases around the interior vertex x_k.
struct VertexCreases {
  CreaseId left;
  CreaseId top;
  CreaseId right;
  CreaseId bottom;

  std::array<CreaseId, 4> all() const { return {left, top, right, bottom}; }
};

/// Parities over the 3n-2 creases of a 2 x n strip, stored in slot order.
/// Ordering is lexicographic over the slot sequence with M before V.
class MVAssignment {
 public:
  MVAssignment(MiuraSpec spec, std::vector<Parity> parities);

  /// Parses "MMVM"-style text; n is inferred from the length 3n-2.
  static MVAssignment parse(std::string_view text);
  /// Parses text that must describe an assignment of `spec`.
  static MVAssignment parse(std::string_view text, MiuraSpec spec);

  const MiuraSpec& spec() const { return spec_; }
  int cols() const { return spec_.cols(); }
  std::size_t size() const { return parities_.size(); }

  Parity operator[](CreaseId crease) const { return parities_[crease.slot()]; }
  Parity at(CreaseId crease) const;
  std::span<const Parity> parities() const { return parities_; }

  std::string to_string() const;

  /// Rank of the parity sequence read as a binary number (M = 0, V = 1,
  /// slot 0 most significant). Order-preserving; needs size() <= 64.
  std::uint64_t code() const;

  friend bool operator==(const MVAssignment&, const MVAssignment&) = default;
  friend std::strong_ordering operator<=>(const MVAssignment& a,
                                          const MVAssignment& b);

 private:
  MiuraSpec spec_;
  std::vector<Parity> parities_;
};

/// Number of creases 3n-2 of a 2 x n strip.
int crease_count(const MiuraSpec& spec);

/// Creases around x_k for 1 <= k <= n-1: (3k-3, 3k-1, 3k, 3k+1).
VertexCreases vertex_creases(const MiuraSpec& spec, int k);

/// Maekawa plus the Miura rule at x_k: the four parities sum to +-2 and the
/// minority crease is not the left one (the crease between the two obtuse
/// sectors).
bool is_vertex_valid(const MVAssignment& mv, int k);

/// The three valid (top, right, bottom) triples at a vertex whose left
/// crease has parity `left`, in lexicographic order (M before V).
std::array<std::array<Parity, 3>, 3> valid_vertex_triples(Parity left);

/// True iff every interior vertex is valid.
bool is_locally_valid(const MVAssignment& mv);

/// All 2*3^(n-1) locally valid assignments in lexicographic order.
std::vector<MVAssignment> enumerate_valid(const MiuraSpec& spec);

/// Faces in row-major order.
std::vector<FaceId> faces(const MiuraSpec& spec);

/// Creases bordering a face, sorted by label. Corner faces have 2 creases,
/// interior faces 3 (both corner faces of the n = 1 strip share crease 0).
std::vector<CreaseId> face_border_creases(const MiuraSpec& spec, FaceId face);

/// Interior vertices k touched by a face (x_{col-1} and/or x_col).
std::vector<int> face_vertices(const MiuraSpec& spec, FaceId face);

/// Negates every crease bordering `face`. The result need not be valid.
MVAssignment flip_face(const MVAssignment& mv, FaceId face);

/// Whether flipping `face` keeps a valid assignment valid.
bool is_flippable(const MVAssignment& mv, FaceId face);

/// Flippable faces of a valid assignment, row-major.
std::vector<FaceId> flippable_faces(const MVAssignment& mv);

/// Every parity negated.
MVAssignment opposite(const MVAssignment& mv);

std::string to_string(const FaceId& face);

}  // namespace miura

#endif  // MIURA_MIURA_CORE_HPP
