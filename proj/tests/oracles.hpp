#pragma once

// Brute-force reference implementations used by the tests. They share no
// code with the library beyond the Graph container.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "rso/graph.hpp"

namespace oracle {

using rso::Graph;

inline std::vector<std::vector<int>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<int>> a(g.n(), std::vector<int>(g.n(), 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

inline bool less(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }

/// Minimum cut/min-volume ratio over every nonempty proper subset.
inline Fraction cheeger(const Graph& g) {
  const std::size_t n = g.n();
  Fraction best{1, 0};
  bool have = false;
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
    std::int64_t cut = 0, vin = 0, vout = 0;
    for (const auto& e : g.edges()) {
      const bool a = (s >> e.u) & 1, b = (s >> e.v) & 1;
      if (a != b) ++cut;
      (a ? vin : vout) += 1;
      (b ? vin : vout) += 1;
    }
    const auto vol = std::min(vin, vout);
    if (vol == 0) continue;
    const Fraction f{cut, vol};
    if (!have || less(f, best)) best = f, have = true;
  }
  return best;
}

struct Census {
  std::uint64_t total = 0, strong = 0, sink_free = 0, eulerian = 0;
};

/// Every orientation, with Floyd-Warshall transitive closure.
inline Census census(const Graph& g) {
  const std::size_t n = g.n(), m = g.m();
  Census c;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    std::vector<int> out(n, 0), in(n, 0);
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    for (std::size_t e = 0; e < m; ++e) {
      auto a = g.edge(e).u, b = g.edge(e).v;
      if ((mask >> e) & 1) std::swap(a, b);
      r[a][b] = 1;
      ++out[a];
      ++in[b];
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (r[i][k] && r[k][j]) r[i][j] = 1;
    bool strong = true, sink_free = true, euler = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) strong = strong && r[i][j];
      sink_free = sink_free && out[i] > 0;
      euler = euler && out[i] == in[i];
    }
    ++c.total;
    c.strong += strong;
    c.sink_free += sink_free;
    c.eulerian += euler;
  }
  return c;
}

inline bool subset_connected(const Graph& g, std::uint64_t s) {
  if (s == 0) return false;
  const auto a = adjacency_matrix(g);
  std::vector<std::size_t> stack{static_cast<std::size_t>(std::countr_zero(s))};
  std::uint64_t seen = std::uint64_t{1} << stack.back();
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < g.n(); ++w) {
      if (a[v][w] && ((s >> w) & 1) && !((seen >> w) & 1)) {
        seen |= std::uint64_t{1} << w;
        stack.push_back(w);
      }
    }
  }
  return seen == s;
}

inline std::vector<std::uint64_t> connected_subsets(const Graph& g, std::size_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.n()); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == k && subset_connected(g, s)) {
      out.push_back(s);
    }
  }
  return out;
}

/// Sum over independent k-sets of 2^{-sum deg}, in long double.
inline long double sieve_sum(const Graph& g, std::size_t k) {
  const auto a = adjacency_matrix(g);
  long double total = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.n()); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != k) continue;
    bool indep = true;
    int deg = 0;
    for (std::size_t i = 0; i < g.n() && indep; ++i) {
      if (!((s >> i) & 1)) continue;
      deg += static_cast<int>(g.degree(static_cast<rso::Vertex>(i)));
      for (std::size_t j = i + 1; j < g.n(); ++j) {
        if (((s >> j) & 1) && a[i][j]) indep = false;
      }
    }
    if (indep) total += std::ldexp(1.0L, -deg);
  }
  return total;
}

inline std::size_t independence_number(const Graph& g) {
  const auto a = adjacency_matrix(g);
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
    bool indep = true;
    for (const auto& e : g.edges()) {
      if (((s >> e.u) & 1) && ((s >> e.v) & 1)) indep = false;
    }
    if (indep) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

// Closed-form normalized-Laplacian spectra, ascending.
inline std::vector<double> complete_spectrum(std::size_t n) {
  std::vector<double> v(n, static_cast<double>(n) / static_cast<double>(n - 1));
  v[0] = 0.0;
  return v;
}

inline std::vector<double> cycle_spectrum(std::size_t n) {
  std::vector<double> v;
  for (std::size_t j = 0; j < n; ++j) {
    v.push_back(1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                               static_cast<double>(n)));
  }
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<double> path_spectrum(std::size_t n) {
  std::vector<double> v;
  for (std::size_t j = 0; j < n; ++j) {
    v.push_back(1.0 - std::cos(std::numbers::pi * static_cast<double>(j) /
                               static_cast<double>(n - 1)));
  }
  std::sort(v.begin(), v.end());
  return v;
}

/// Connected random graph: a random spanning tree plus extra edges, drawn
/// from std::mt19937_64 so it is independent of the library's generators.
inline Graph random_connected(std::size_t n, double extra, std::mt19937_64& rng) {
  std::vector<rso::Edge> edges;
  std::vector<std::vector<char>> have(n, std::vector<char>(n, 0));
  auto add = [&](rso::Vertex a, rso::Vertex b) {
    if (a == b || have[a][b]) return;
    have[a][b] = have[b][a] = 1;
    edges.push_back({std::min(a, b), std::max(a, b)});
  };
  for (rso::Vertex v = 1; v < n; ++v) {
    add(v, static_cast<rso::Vertex>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng)));
  }
  std::bernoulli_distribution coin(extra);
  for (rso::Vertex a = 0; a < n; ++a)
    for (rso::Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) add(a, b);
  return Graph::from_edges(n, edges);
}

}  // namespace oracle
