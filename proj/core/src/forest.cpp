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

#include "miura/forest.hpp"

#include <algorithm>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "miura/error.hpp"

namespace miura {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

std::int64_t to_i64(std::uint64_t x) {
  if (x > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw ResourceLimit("count does not fit in a signed 64-bit integer");
  }
  return static_cast<std::int64_t>(x);
}

std::int64_t to_i64(const cpp_int& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceLimit("coefficient does not fit in a signed 64-bit integer");
  }
  return x.convert_to<std::int64_t>();
}

const GenerationTable* generation(std::span<const GenerationTable> tables,
                                  int n) {
  if (n < 1 || static_cast<std::size_t>(n) > tables.size()) return nullptr;
  return &tables[static_cast<std::size_t>(n - 1)];
}

std::uint64_t v_at(std::span<const GenerationTable> tables, int n, int d) {
  const auto* t = generation(tables, n);
  return t ? t->v(d) : 0;
}

std::uint64_t w_at(std::span<const GenerationTable> tables, int n, int d) {
  const auto* t = generation(tables, n);
  return t ? t->w(d) : 0;
}

std::string cell(const char* what, int n, int d) {
  return std::string(what) + " at n=" + std::to_string(n) +
         ", d=" + std::to_string(d);
}

void require_ordered(std::span<const GenerationTable> tables) {
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (tables[i].generation() != static_cast<int>(i) + 1) {
      throw InvalidArgument("tables must hold generations 1, 2, ... in order");
    }
  }
}

bool all_zero(std::span<const std::int64_t> xs) {
  return std::all_of(xs.begin(), xs.end(), [](std::int64_t x) { return x == 0; });
}

// Binomial C(x, k) for any integer x.
cpp_int binomial(std::int64_t x, int k) {
  cpp_int num = 1;
  cpp_int den = 1;
  for (int i = 0; i < k; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace

std::array<ChiDNode, 3> chi_d_children(const ChiDNode& parent) {
  const int d = parent.label;
  const int g = parent.generation + 1;
  if (parent.color == NodeColor::kBlue) {
    return {ChiDNode{d + 2, NodeColor::kBlue, g},
            ChiDNode{d, NodeColor::kMagenta, g},
            ChiDNode{d, NodeColor::kMagenta, g}};
  }
  return {ChiDNode{d + 2, NodeColor::kBlue, g},
          ChiDNode{d + 1, NodeColor::kOrange, g},
          ChiDNode{d, NodeColor::kMagenta, g}};
}

GenerationTable::GenerationTable(int generation) : generation_(generation) {
  if (generation < 1) throw InvalidArgument("generations start at 1");
  const auto slots = static_cast<std::size_t>(2 * generation + 1);
  blue_.assign(slots, 0);
  orange_.assign(slots, 0);
  magenta_.assign(slots, 0);
}

std::uint64_t GenerationTable::total() const {
  std::uint64_t out = 0;
  for (int d = 0; d <= max_label(); ++d) out += v(d);
  return out;
}

std::vector<int> GenerationTable::support() const {
  std::vector<int> out;
  for (int d = 0; d <= max_label(); ++d) {
    if (v(d) != 0) out.push_back(d);
  }
  return out;
}

void GenerationTable::add(int label, NodeColor color, std::uint64_t count) {
  if (label < 0 || label > max_label()) {
    throw InvalidArgument("label " + std::to_string(label) +
                          " exceeds the maximum 2n of generation " +
                          std::to_string(generation_));
  }
  const auto i = static_cast<std::size_t>(label);
  switch (color) {
    case NodeColor::kBlue: blue_[i] += count; break;
    case NodeColor::kOrange: orange_[i] += count; break;
    case NodeColor::kMagenta: magenta_[i] += count; break;
  }
}

std::array<MVAssignment, 3> extend_assignment(const MVAssignment& mv) {
  if (!is_locally_valid(mv)) {
    throw InvalidArgument("only valid assignments extend: " + mv.to_string());
  }
  const int n = mv.cols();
  const Parity left = mv[CreaseId(3 * n - 3)];
  const MiuraSpec next = MiuraSpec::strip(n + 1);
  const auto triples = valid_vertex_triples(left);
  auto child = [&](std::size_t i) {
    std::vector<Parity> parities(mv.parities().begin(), mv.parities().end());
    parities.insert(parities.end(), triples[i].begin(), triples[i].end());
    return MVAssignment(next, std::move(parities));
  };
  return {child(0), child(1), child(2)};
}

bool ends_blue(const MVAssignment& mv) {
  const int n = mv.cols();
  if (n == 1) return true;
  const VertexCreases last = vertex_creases(mv.spec(), n - 1);
  const Parity top = mv[last.top];
  return mv[last.right] == -top && mv[last.bottom] == top;
}

std::vector<GenerationTable> generate_chi_d(int n_max) {
  if (n_max < 1) throw InvalidArgument("need at least one generation");
  std::vector<GenerationTable> tables;
  tables.reserve(static_cast<std::size_t>(n_max));
  tables.emplace_back(1);
  tables.back().add(2, NodeColor::kBlue, 2);
  for (int n = 2; n <= n_max; ++n) {
    const GenerationTable& prev = tables.back();
    GenerationTable next(n);
    for (int d = 0; d <= prev.max_label(); ++d) {
      for (NodeColor color :
           {NodeColor::kBlue, NodeColor::kOrange, NodeColor::kMagenta}) {
        const std::uint64_t count = color == NodeColor::kBlue     ? prev.blue(d)
                                    : color == NodeColor::kOrange ? prev.orange(d)
                                                                  : prev.magenta(d);
        if (count == 0) continue;
        for (const ChiDNode& c : chi_d_children({d, color, n - 1})) {
          next.add(c.label, c.color, count);
        }
      }
    }
    tables.push_back(std::move(next));
  }
  return tables;
}

CheckReport verify_recurrences(std::span<const GenerationTable> tables) {
  require_ordered(tables);
  CheckReport report;
  report.name = "prop-recurrences";
  const int n_max = static_cast<int>(tables.size());
  for (int n = 3; n <= n_max; ++n) {
    const GenerationTable& t = tables[static_cast<std::size_t>(n - 1)];
    for (int d = 0; d <= t.max_label() + 2; ++d) {
      report.expect(t.b(d) == v_at(tables, n - 1, d - 2),
                    cell("b_n^d != v_{n-1}^{d-2}", n, d));
      report.expect(t.w(d) == v_at(tables, n - 1, d) + w_at(tables, n - 1, d - 1) +
                                  v_at(tables, n - 2, d - 2),
                    cell("w recurrence fails", n, d));
      report.expect(t.v(d) == v_at(tables, n - 1, d) + w_at(tables, n - 1, d - 1) +
                                  v_at(tables, n - 1, d - 2) +
                                  v_at(tables, n - 2, d - 2),
                    cell("v recurrence fails", n, d));
    }
  }
  return report;
}

CheckReport structural_checks(std::span<const GenerationTable> tables) {
  require_ordered(tables);
  CheckReport report;
  report.name = "degree-structure";
  for (const GenerationTable& t : tables) {
    const int n = t.generation();
    if (n < 2) continue;
    report.expect(t.v(2) == 4 && t.magenta(2) == 4,
                  cell("expected four magenta 2-labels", n, 2));
    report.expect(t.v(2 * n) == 2 && t.blue(2 * n) == 2,
                  cell("expected two blue maximum labels", n, 2 * n));
    report.expect(t.v(2 * n - 1) == 0, cell("label 2n-1 present", n, 2 * n - 1));
    std::vector<int> expected;
    for (int d = 2; d <= 2 * n - 2; ++d) expected.push_back(d);
    expected.push_back(2 * n);
    report.expect(t.support() == expected, cell("unexpected label set", n, 0));
  }
  return report;
}

std::vector<std::int64_t> finite_differences(std::span<const std::int64_t> seq,
                                             int order) {
  if (order < 0) throw InvalidArgument("difference order must be non-negative");
  if (static_cast<std::size_t>(order) >= seq.size() && order > 0) {
    throw InvalidArgument("sequence of length " + std::to_string(seq.size()) +
                          " is too short for order " + std::to_string(order));
  }
  std::vector<std::int64_t> out(seq.begin(), seq.end());
  for (int k = 0; k < order; ++k) {
    for (std::size_t i = 0; i + 1 < out.size(); ++i) out[i] = out[i + 1] - out[i];
    out.pop_back();
  }
  return out;
}

std::string Fraction::to_string() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

std::int64_t PolynomialFit::evaluate(int n) const {
  cpp_int total = 0;
  for (std::size_t k = 0; k < newton.size(); ++k) {
    total += newton[k] * binomial(n - first_n, static_cast<int>(k));
  }
  return to_i64(total);
}

std::string PolynomialFit::to_string() const {
  std::string out;
  for (int k = static_cast<int>(monomial.size()) - 1; k >= 0; --k) {
    const Fraction& c = monomial[static_cast<std::size_t>(k)];
    if (c.num == 0) continue;
    const bool negative = c.num < 0;
    const Fraction mag{negative ? -c.num : c.num, c.den};
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag.num == 1 && mag.den == 1;
    if (k == 0) {
      out += mag.to_string();
    } else if (mag.den != 1) {
      out += "(" + mag.to_string() + ")";
    } else if (!unit) {
      out += mag.to_string();
    }
    if (k >= 1) out += "n";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

PolynomialFit fit_polynomial(std::span<const std::int64_t> seq, int first_n) {
  if (seq.empty()) throw InvalidArgument("cannot fit an empty sequence");
  PolynomialFit fit;
  fit.first_n = first_n;
  fit.last_n = first_n + static_cast<int>(seq.size()) - 1;

  if (all_zero(seq)) return fit;
  int degree = -1;
  for (int k = 0; static_cast<std::size_t>(k) + 1 < seq.size(); ++k) {
    if (all_zero(finite_differences(seq, k + 1))) {
      degree = k;
      break;
    }
  }
  if (degree < 0) {
    throw InvalidArgument("sequence of length " + std::to_string(seq.size()) +
                          " is too short to certify a polynomial degree");
  }
  fit.degree = degree;
  for (int k = 0; k <= degree; ++k) {
    fit.newton.push_back(finite_differences(seq, k).front());
  }

  // Expand sum_k Delta^k * C(n - first_n, k) into powers of n.
  std::vector<cpp_rational> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  for (int k = 0; k <= degree; ++k) {
    std::vector<cpp_int> product{1};  // coefficients of prod (n - first_n - i)
    cpp_int factorial = 1;
    for (int i = 0; i < k; ++i) {
      std::vector<cpp_int> next(product.size() + 1, 0);
      const cpp_int shift = -(first_n + i);
      for (std::size_t p = 0; p < product.size(); ++p) {
        next[p + 1] += product[p];
        next[p] += product[p] * shift;
      }
      product = std::move(next);
      factorial *= i + 1;
    }
    for (std::size_t p = 0; p < product.size(); ++p) {
      coeffs[p] += cpp_rational(product[p] * fit.newton[static_cast<std::size_t>(k)],
                                factorial);
    }
  }
  for (const cpp_rational& c : coeffs) {
    fit.monomial.push_back(Fraction{to_i64(cpp_int(numerator(c))),
                                    to_i64(cpp_int(denominator(c)))});
  }
  return fit;
}

int degree_series_start(int d) { return (d + 1) / 2 + 1; }

int offset_series_start(int a) {
  const int start = (a + 1) / 2 + 1;
  return 2 * start - a == 2 ? start + 1 : start;
}

std::vector<std::int64_t> degree_series(std::span<const GenerationTable> tables,
                                        int d, int first_n) {
  require_ordered(tables);
  std::vector<std::int64_t> out;
  for (int n = first_n; n <= static_cast<int>(tables.size()); ++n) {
    out.push_back(to_i64(v_at(tables, n, d)));
  }
  return out;
}

std::vector<std::int64_t> offset_series(std::span<const GenerationTable> tables,
                                        int a, int first_n) {
  require_ordered(tables);
  std::vector<std::int64_t> out;
  for (int n = first_n; n <= static_cast<int>(tables.size()); ++n) {
    out.push_back(to_i64(v_at(tables, n, 2 * n - a)));
  }
  return out;
}

PolynomialLawReport polynomial_law_checks(
    std::span<const GenerationTable> tables, int d_max, int a_max) {
  require_ordered(tables);
  const int n_max = static_cast<int>(tables.size());
  PolynomialLawReport report;
  report.checks.name = "polynomial-laws";

  for (int d = 2; d <= d_max; ++d) {
    const int start = degree_series_start(d);
    const auto seq = degree_series(tables, d, start);
    // Delta^(d-1) must leave at least two terms to mean anything.
    if (static_cast<int>(seq.size()) < d + 1) {
      throw InvalidArgument("generation " + std::to_string(n_max) +
                            " is too small to test degree " + std::to_string(d));
    }
    report.checks.expect(all_zero(finite_differences(seq, d - 1)),
                         "Delta^(d-1) v_n^d != 0 for d=" + std::to_string(d));
    report.checks.expect(!all_zero(finite_differences(seq, d - 2)),
                         "v_n^d has degree below d-2 for d=" + std::to_string(d));
    report.by_degree.push_back(fit_polynomial(seq, start));
  }

  for (int a = 0; a <= a_max; ++a) {
    const int start = offset_series_start(a);
    const auto seq = offset_series(tables, a, start);
    const int order = a / 2 + 1;
    if (static_cast<int>(seq.size()) < order + 2) {
      throw InvalidArgument("generation " + std::to_string(n_max) +
                            " is too small to test offset a=" + std::to_string(a));
    }
    report.checks.expect(
        all_zero(finite_differences(seq, order)),
        "Delta^(floor(a/2)+1) v_n^{2n-a} != 0 for a=" + std::to_string(a));
    report.by_offset.push_back(fit_polynomial(seq, start));
  }
  return report;
}

CheckReport cross_validate(std::span<const GenerationTable> tables,
                           std::span<const FlipGraph> graphs) {
  require_ordered(tables);
  CheckReport report;
  report.name = "forest-vs-graph";
  for (const FlipGraph& g : graphs) {
    if (g.spec().rows() != 2) {
      throw InvalidArgument("cross validation needs 2 x n graphs");
    }
    const int n = g.spec().cols();
    if (n < 2) {
      throw InvalidArgument("the 2 x 1 graph is a single edge; compare n >= 2");
    }
    const GenerationTable* t = generation(tables, n);
    if (!t) {
      throw InvalidArgument("no forest generation for n=" + std::to_string(n));
    }
    const DegreeDistribution dist = degree_distribution(g);
    for (int d = 0; d <= t->max_label(); ++d) {
      const auto it = dist.find(d);
      const std::uint64_t from_graph = it == dist.end() ? 0 : it->second;
      report.expect(t->v(d) == from_graph, cell("v_n^d differs from graph", n, d));
    }
    report.expect(dist.empty() || dist.rbegin()->first <= t->max_label(),
                  cell("graph degree beyond 2n", n, dist.rbegin()->first));

    std::vector<std::uint64_t> blue(static_cast<std::size_t>(t->max_label()) + 1, 0);
    const auto& states = g.assignments();
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (ends_blue(states[i])) ++blue[g.degree(i)];
    }
    for (int d = 0; d <= t->max_label(); ++d) {
      report.expect(t->b(d) == blue[static_cast<std::size_t>(d)],
                    cell("b_n^d differs from MVM/VMV count", n, d));
    }
  }
  return report;
}

}  // namespace miura
