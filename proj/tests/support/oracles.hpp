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

// Brute-force reference implementations used to cross-check the library.
// Nothing here calls into the code under test except for the plain value
// types it returns, so a shared bug cannot hide on both sides.

#ifndef MIURA_TESTS_ORACLES_HPP
#define MIURA_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace oracle {

// Parities as +1/-1 per crease label; index = label, label 1 unused.
using Labels = std::vector<int>;

inline int slot_of(int label) { return label == 0 ? 0 : label - 1; }

// Every mask of 3n-2 creases whose vertices satisfy Maekawa and carry the
// majority parity on the left crease. Bit i of the mask is slot i; set = V.
// Returned in lexicographic M < V order over slots (slot 0 first).
inline std::vector<std::vector<int>> valid_assignments(int n) {
  const int creases = 3 * n - 2;
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << creases); ++mask) {
    std::vector<int> p(static_cast<std::size_t>(creases));
    for (int s = 0; s < creases; ++s) {
      // Most significant bit first gives lexicographic order.
      p[static_cast<std::size_t>(s)] =
          (mask >> (creases - 1 - s)) & 1 ? -1 : 1;
    }
    bool ok = true;
    for (int k = 1; k <= n - 1 && ok; ++k) {
      const int left = p[static_cast<std::size_t>(slot_of(3 * k - 3))];
      const int sum = left + p[static_cast<std::size_t>(slot_of(3 * k - 1))] +
                      p[static_cast<std::size_t>(slot_of(3 * k))] +
                      p[static_cast<std::size_t>(slot_of(3 * k + 1))];
      ok = (sum == 2 || sum == -2) && left * sum > 0;
    }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

// Border labels of face (row, col) in the 2 x n strip.
inline std::set<int> border(int n, int row, int col) {
  std::set<int> s{3 * col - 3};
  if (row == 1) {
    if (col > 1) s.insert(3 * col - 4);
    if (col < n) s.insert(3 * col - 1);
  } else {
    if (col > 1) s.insert(3 * col - 2);
    if (col < n) s.insert(3 * col + 1);
  }
  return s;
}

// Adjacency by definition: two valid assignments are adjacent iff the set
// of creases where they differ is exactly the border of some face.
inline std::vector<std::vector<std::size_t>> assignment_adjacency(
    int n, const std::vector<std::vector<int>>& states) {
  std::vector<std::set<int>> borders;
  for (int r = 1; r <= 2; ++r) {
    for (int c = 1; c <= n; ++c) {
      std::set<int> slots;
      for (int label : border(n, r, c)) slots.insert(slot_of(label));
      borders.push_back(slots);
    }
  }
  std::vector<std::vector<std::size_t>> adj(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      std::set<int> diff;
      for (std::size_t s = 0; s < states[i].size(); ++s) {
        if (states[i][s] != states[j][s]) diff.insert(static_cast<int>(s));
      }
      if (std::find(borders.begin(), borders.end(), diff) != borders.end()) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

using Grid = std::vector<int>;  // row-major colors

inline bool proper(int m, int n, const Grid& g) {
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      const int x = g[static_cast<std::size_t>(r * n + c)];
      if (c + 1 < n && x == g[static_cast<std::size_t>(r * n + c + 1)]) return false;
      if (r + 1 < m && x == g[static_cast<std::size_t>((r + 1) * n + c)]) return false;
    }
  }
  return true;
}

// All proper colorings by filtering 3^(mn); `canonical` fixes color 0 at
// the top-left vertex. Row-major lexicographic order.
inline std::vector<Grid> colorings(int m, int n, bool canonical) {
  const int cells = m * n;
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= 3;
  std::vector<Grid> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Grid g(static_cast<std::size_t>(cells));
    std::uint64_t x = code;
    for (int i = cells - 1; i >= 0; --i) {
      g[static_cast<std::size_t>(i)] = static_cast<int>(x % 3);
      x /= 3;
    }
    if (canonical && g[0] != 0) continue;
    if (proper(m, n, g)) out.push_back(std::move(g));
  }
  return out;
}

inline Grid rotate(const Grid& g, int shift) {
  Grid out(g);
  for (int& x : out) x = (x + shift) % 3;
  return out;
}

// Raw colorings adjacent iff they differ at exactly one vertex; classes
// adjacent iff some rotation of one differs from the other at one vertex.
inline std::vector<std::vector<std::size_t>> coloring_adjacency(
    const std::vector<Grid>& states, bool classes) {
  auto hamming1 = [](const Grid& a, const Grid& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d == 1;
  };
  std::vector<std::vector<std::size_t>> adj(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      bool edge = hamming1(states[i], states[j]);
      for (int s = 1; classes && s < 3 && !edge; ++s) {
        edge = hamming1(rotate(states[i], s), states[j]);
      }
      if (edge) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

inline std::vector<int> bfs(const std::vector<std::vector<std::size_t>>& adj,
                            std::size_t source) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<std::size_t> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

inline int weight(int from, int to) { return (to - from + 3) % 3 == 1 ? 1 : -1; }

// Heights by a column-major walk: down column 1, then along each row from
// column 1. A different path than the library's snake.
inline std::vector<int> heights(int m, int n, const Grid& gamma, const Grid& beta) {
  auto at = [n](const Grid& g, int r, int c) {
    return g[static_cast<std::size_t>(r * n + c)];
  };
  std::vector<int> h(static_cast<std::size_t>(m * n), 0);
  for (int r = 0; r < m; ++r) {
    if (r > 0) {
      h[static_cast<std::size_t>(r * n)] =
          h[static_cast<std::size_t>((r - 1) * n)] +
          weight(at(beta, r - 1, 0), at(beta, r, 0)) -
          weight(at(gamma, r - 1, 0), at(gamma, r, 0));
    }
    for (int c = 1; c < n; ++c) {
      h[static_cast<std::size_t>(r * n + c)] =
          h[static_cast<std::size_t>(r * n + c - 1)] +
          weight(at(beta, r, c - 1), at(beta, r, c)) -
          weight(at(gamma, r, c - 1), at(gamma, r, c));
    }
  }
  return h;
}

// Random proper coloring sampled row-major. Not uniform, but every proper
// coloring has positive probability and the up/left constraints always
// leave at least one color.
inline Grid random_proper(int m, int n, std::mt19937_64& rng) {
  Grid g(static_cast<std::size_t>(m * n));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      std::vector<int> options;
      for (int x = 0; x < 3; ++x) {
        if (c > 0 && g[static_cast<std::size_t>(r * n + c - 1)] == x) continue;
        if (r > 0 && g[static_cast<std::size_t>((r - 1) * n + c)] == x) continue;
        options.push_back(x);
      }
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      g[static_cast<std::size_t>(r * n + c)] = options[pick(rng)];
    }
  }
  return g;
}

}  // namespace oracle

#endif  // MIURA_TESTS_ORACLES_HPP
