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

#ifndef MIURA_FOREST_HPP
#define MIURA_FOREST_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "miura/flip_graph.hpp"
#include "miura/miura_core.hpp"
#include "miura/report.hpp"

namespace miura {

/// Color of a degree-extension-forest node, named after the edge joining it
/// to its parent: blue adds 2 to the label, orange 1, magenta 0.
enum class NodeColor { kBlue, kOrange, kMagenta };

/// A node of the degree extension forest: the flippable-face count of one
/// assignment in generation n.
struct ChiDNode {
  int label = 2;
  NodeColor color = NodeColor::kBlue;
  int generation = 1;

  friend bool operator==(const ChiDNode&, const ChiDNode&) = default;
};

/// Children of a node: blue parents add (2, 0, 0), others add (2, 1, 0).
std::array<ChiDNode, 3> chi_d_children(const ChiDNode& parent);

/// Label counts of one generation, split by node color. Indices are labels
/// (degrees); labels beyond the stored range count as zero.
class GenerationTable {
 public:
  explicit GenerationTable(int generation);

  int generation() const { return generation_; }
  /// Largest label with a slot in the table (2n).
  int max_label() const { return static_cast<int>(blue_.size()) - 1; }

  std::uint64_t blue(int d) const { return get(blue_, d); }
  std::uint64_t orange(int d) const { return get(orange_, d); }
  std::uint64_t magenta(int d) const { return get(magenta_, d); }
  /// b_n^d.
  std::uint64_t b(int d) const { return blue(d); }
  /// w_n^d, the non-blue count.
  std::uint64_t w(int d) const { return orange(d) + magenta(d); }
  /// v_n^d.
  std::uint64_t v(int d) const { return b(d) + w(d); }

  std::uint64_t total() const;
  /// Labels with a nonzero count, ascending.
  std::vector<int> support() const;

  void add(int label, NodeColor color, std::uint64_t count);

 private:
  static std::uint64_t get(const std::vector<std::uint64_t>& xs, int d) {
    return d >= 0 && static_cast<std::size_t>(d) < xs.size()
               ? xs[static_cast<std::size_t>(d)]
               : 0;
  }

  int generation_;
  std::vector<std::uint64_t> blue_;
  std::vector<std::uint64_t> orange_;
  std::vector<std::uint64_t> magenta_;
};

/// The three valid extensions of a valid 2 x n assignment to 2 x (n+1),
/// sorted lexicographically.
std::array<MVAssignment, 3> extend_assignment(const MVAssignment& mv);

/// Whether the last vertex of `mv` carries MVM or VMV (top, right, bottom),
/// i.e. whether the assignment sits on a blue node. Single-crease roots
/// count as blue.
bool ends_blue(const MVAssignment& mv);

/// Generations 1..n_max of the degree extension forest as count tables.
std::vector<GenerationTable> generate_chi_d(int n_max);

/// b_n^d = v_{n-1}^{d-2}, w_n^d = v_{n-1}^d + w_{n-1}^{d-1} + v_{n-2}^{d-2}
/// and v_n^d = v_{n-1}^d + w_{n-1}^{d-1} + v_{n-1}^{d-2} + v_{n-2}^{d-2}
/// for every n >= 3 and d.
CheckReport verify_recurrences(std::span<const GenerationTable> tables);

/// For each generation n >= 2: v_n^2 = 4 (all magenta), v_n^{2n} = 2 (all
/// blue), v_n^{2n-1} = 0 and support {2, ..., 2n-2} u {2n}.
CheckReport structural_checks(std::span<const GenerationTable> tables);

/// Forward differences applied `order` times.
std::vector<std::int64_t> finite_differences(std::span<const std::int64_t> seq,
                                             int order);

/// An exact fraction in lowest terms with a positive denominator.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::string to_string() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Polynomial through a sequence f(first_n), f(first_n + 1), ... in
/// Newton forward-difference form.
struct PolynomialFit {
  int first_n = 0;
  int last_n = 0;
  /// Lowest k with Delta^(k+1) identically zero over the data; -1 for the
  /// zero sequence.
  int degree = -1;
  /// Delta^k f(first_n) for k = 0..degree.
  std::vector<std::int64_t> newton;
  /// Coefficients of n^0, n^1, ..., n^degree.
  std::vector<Fraction> monomial;

  std::int64_t evaluate(int n) const;
  /// e.g. "4n - 8".
  std::string to_string() const;
};

/// Fits the sequence, whose first term is at n = first_n. Needs at least
/// degree + 2 terms to certify the degree.
PolynomialFit fit_polynomial(std::span<const std::int64_t> seq, int first_n);

/// First n of the fixed-degree series (v_n^d)_n: ceil(d/2) + 1.
int degree_series_start(int d);
/// First n of the series (v_n^{2n-a})_n: ceil(a/2) + 1, skipping the
/// generation where 2n - a = 2.
int offset_series_start(int a);

/// v_n^d for n = first_n .. last generation.
std::vector<std::int64_t> degree_series(std::span<const GenerationTable> tables,
                                        int d, int first_n);
/// v_n^{2n-a} for n = first_n .. last generation.
std::vector<std::int64_t> offset_series(std::span<const GenerationTable> tables,
                                        int a, int first_n);

struct PolynomialLawReport {
  CheckReport checks;
  /// Fits of v_n^d for d = 2..d_max.
  std::vector<PolynomialFit> by_degree;
  /// Fits of v_n^{2n-a} for a = 0..a_max.
  std::vector<PolynomialFit> by_offset;
};

/// Delta^(d-1) (v_n^d) = 0 with Delta^(d-2) nonzero for d = 2..d_max, and
/// Delta^(floor(a/2)+1) (v_n^{2n-a}) = 0 for a = 0..a_max.
PolynomialLawReport polynomial_law_checks(
    std::span<const GenerationTable> tables, int d_max, int a_max);

/// Generation-n label counts against degree_distribution of each 2 x n
/// graph, and blue counts against assignments ending in MVM/VMV. Needs
/// n >= 2: the 2 x 1 graph is one edge while its roots carry label 2.
CheckReport cross_validate(std::span<const GenerationTable> tables,
                           std::span<const FlipGraph> graphs);

}  // namespace miura

#endif  // MIURA_FOREST_HPP
