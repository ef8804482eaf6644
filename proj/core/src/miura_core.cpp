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

#include "miura/miura_core.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "miura/error.hpp"

namespace miura {

namespace {

void require_strip(const MiuraSpec& spec) {
  if (spec.rows() != 2) {
    throw InvalidArgument("crease-level operations need a 2 x n strip, got " +
                          std::to_string(spec.rows()) + " rows");
  }
}

void require_face(const MiuraSpec& spec, FaceId face) {
  if (face.row < 1 || face.row > spec.rows() || face.col < 1 ||
      face.col > spec.cols()) {
    throw InvalidArgument("face " + to_string(face) + " is outside a " +
                          std::to_string(spec.rows()) + " x " +
                          std::to_string(spec.cols()) + " pattern");
  }
}

}  // namespace

// Exactly one of the three carries -p.
std::array<std::array<Parity, 3>, 3> valid_vertex_triples(Parity p) {
  const Parity q = -p;
  std::array<std::array<Parity, 3>, 3> out = {{
      {q, p, p},
      {p, q, p},
      {p, p, q},
  }};
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (a[i] != b[i]) return a[i] == Parity::Mountain;
    }
    return false;
  });
  return out;
}

MiuraSpec::MiuraSpec(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw InvalidArgument("Miura-ori dimensions must be positive, got " +
                          std::to_string(rows) + " x " + std::to_string(cols));
  }
}

MVAssignment::MVAssignment(MiuraSpec spec, std::vector<Parity> parities)
    : spec_(spec), parities_(std::move(parities)) {
  const int expected = crease_count(spec_);
  if (parities_.size() != static_cast<std::size_t>(expected)) {
    throw InvalidArgument("a 2 x " + std::to_string(spec_.cols()) +
                          " assignment has " + std::to_string(expected) +
                          " creases, got " + std::to_string(parities_.size()));
  }
}

MVAssignment MVAssignment::parse(std::string_view text) {
  if (text.empty() || (text.size() + 2) % 3 != 0) {
    throw InvalidArgument("MV string length " + std::to_string(text.size()) +
                          " is not of the form 3n-2");
  }
  return parse(text, MiuraSpec::strip(static_cast<int>(text.size() + 2) / 3));
}

MVAssignment MVAssignment::parse(std::string_view text, MiuraSpec spec) {
  require_strip(spec);
  std::vector<Parity> parities;
  parities.reserve(text.size());
  for (char c : text) {
    if (c == 'M') {
      parities.push_back(Parity::Mountain);
    } else if (c == 'V') {
      parities.push_back(Parity::Valley);
    } else {
      throw InvalidArgument(std::string("MV string contains '") + c +
                            "', expected only 'M' or 'V'");
    }
  }
  return MVAssignment(spec, std::move(parities));
}

Parity MVAssignment::at(CreaseId crease) const {
  if (crease.label() < 0 || crease.label() == 1 ||
      crease.slot() >= parities_.size()) {
    throw InvalidArgument("crease e_" + std::to_string(crease.label()) +
                          " does not exist");
  }
  return parities_[crease.slot()];
}

std::string MVAssignment::to_string() const {
  std::string out;
  out.reserve(parities_.size());
  for (Parity p : parities_) out.push_back(to_char(p));
  return out;
}

std::uint64_t MVAssignment::code() const {
  if (parities_.size() > 64) {
    throw InvalidArgument("assignment too long for a 64-bit code");
  }
  std::uint64_t code = 0;
  for (Parity p : parities_) code = (code << 1) | (p == Parity::Valley ? 1 : 0);
  return code;
}

std::strong_ordering operator<=>(const MVAssignment& a, const MVAssignment& b) {
  if (auto c = a.cols() <=> b.cols(); c != 0) return c;
  for (std::size_t i = 0; i < a.parities_.size(); ++i) {
    if (a.parities_[i] != b.parities_[i]) {
      return a.parities_[i] == Parity::Mountain ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

int crease_count(const MiuraSpec& spec) {
  require_strip(spec);
  return 3 * spec.cols() - 2;
}

VertexCreases vertex_creases(const MiuraSpec& spec, int k) {
  require_strip(spec);
  if (k < 1 || k > spec.cols() - 1) {
    throw InvalidArgument("vertex x_" + std::to_string(k) +
                          " does not exist for n = " +
                          std::to_string(spec.cols()));
  }
  return {CreaseId(3 * k - 3), CreaseId(3 * k - 1), CreaseId(3 * k),
          CreaseId(3 * k + 1)};
}

bool is_vertex_valid(const MVAssignment& mv, int k) {
  const VertexCreases v = vertex_creases(mv.spec(), k);
  const int sum = value(mv[v.left]) + value(mv[v.top]) + value(mv[v.right]) +
                  value(mv[v.bottom]);
  if (sum != 2 && sum != -2) return false;
  // The left crease must carry the majority parity, i.e. the sign of the sum.
  return value(mv[v.left]) * sum > 0;
}

bool is_locally_valid(const MVAssignment& mv) {
  for (int k = 1; k < mv.cols(); ++k) {
    if (!is_vertex_valid(mv, k)) return false;
  }
  return true;
}

std::vector<MVAssignment> enumerate_valid(const MiuraSpec& spec) {
  const int n = spec.cols();
  const auto size = static_cast<std::size_t>(crease_count(spec));
  std::vector<MVAssignment> out;
  std::vector<Parity> current(size, Parity::Mountain);

  // Slot layout: 0 is e_0, then (top, right, bottom) of x_k occupy slots
  // 3k-2 .. 3k. The right crease of x_k is the left crease of x_{k+1}.
  std::function<void(int)> extend = [&](int k) {
    if (k == n) {
      out.emplace_back(spec, current);
      return;
    }
    const Parity left = current[k == 1 ? 0 : static_cast<std::size_t>(3 * k - 4)];
    for (const auto& triple : valid_vertex_triples(left)) {
      const auto base = static_cast<std::size_t>(3 * k - 2);
      current[base] = triple[0];
      current[base + 1] = triple[1];
      current[base + 2] = triple[2];
      extend(k + 1);
    }
  };
  for (Parity first : {Parity::Mountain, Parity::Valley}) {
    current[0] = first;
    extend(1);
  }
  return out;
}

std::vector<FaceId> faces(const MiuraSpec& spec) {
  std::vector<FaceId> out;
  out.reserve(static_cast<std::size_t>(spec.face_count()));
  for (int i = 1; i <= spec.rows(); ++i) {
    for (int j = 1; j <= spec.cols(); ++j) out.push_back({i, j});
  }
  return out;
}

std::vector<CreaseId> face_border_creases(const MiuraSpec& spec, FaceId face) {
  require_strip(spec);
  require_face(spec, face);
  const int n = spec.cols();
  const int j = face.col;
  std::vector<CreaseId> out{CreaseId(3 * j - 3)};
  if (face.row == 1) {
    if (j > 1) out.emplace_back(3 * j - 4);
    if (j < n) out.emplace_back(3 * j - 1);
  } else {
    if (j > 1) out.emplace_back(3 * j - 2);
    if (j < n) out.emplace_back(3 * j + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> face_vertices(const MiuraSpec& spec, FaceId face) {
  require_strip(spec);
  require_face(spec, face);
  std::vector<int> out;
  if (face.col > 1) out.push_back(face.col - 1);
  if (face.col < spec.cols()) out.push_back(face.col);
  return out;
}

MVAssignment flip_face(const MVAssignment& mv, FaceId face) {
  std::vector<Parity> parities(mv.parities().begin(), mv.parities().end());
  for (CreaseId c : face_border_creases(mv.spec(), face)) {
    parities[c.slot()] = -parities[c.slot()];
  }
  return MVAssignment(mv.spec(), std::move(parities));
}

bool is_flippable(const MVAssignment& mv, FaceId face) {
  if (!is_locally_valid(mv)) {
    throw InvalidArgument("flippability is defined for valid assignments only: " +
                          mv.to_string());
  }
  const MVAssignment flipped = flip_face(mv, face);
  // Only the vertices touching the face can change.
  for (int k : face_vertices(mv.spec(), face)) {
    if (!is_vertex_valid(flipped, k)) return false;
  }
  return true;
}

std::vector<FaceId> flippable_faces(const MVAssignment& mv) {
  std::vector<FaceId> out;
  for (FaceId f : faces(mv.spec())) {
    if (is_flippable(mv, f)) out.push_back(f);
  }
  return out;
}

MVAssignment opposite(const MVAssignment& mv) {
  std::vector<Parity> parities;
  parities.reserve(mv.size());
  for (Parity p : mv.parities()) parities.push_back(-p);
  return MVAssignment(mv.spec(), std::move(parities));
}

std::string to_string(const FaceId& face) {
  return "alpha(" + std::to_string(face.row) + "," + std::to_string(face.col) +
         ")";
}

}  // namespace miura
