// Randomized property checks. Graphs come from a small hand-rolled family
// mixer seeded per case, so failures reproduce by seed.
#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "oracles.hpp"
#include "rso/errors.hpp"
#include "rso/generators.hpp"
#include "rso/graph.hpp"
#include "rso/orientation.hpp"
#include "rso/spectral.hpp"

using namespace rso;

namespace {

// Connected graph on at most max_n vertices from a mix of families.
Graph mixed_connected(std::mt19937_64& rng, std::size_t max_n) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  switch (pick(0, 6)) {
    case 0: return complete_graph(pick(2, std::min<std::size_t>(max_n, 9)));
    case 1: return cycle_graph(pick(3, max_n));
    case 2: return path_graph(pick(2, max_n));
    case 3: return barbell(2 * pick(3, max_n / 2));
    case 4: return lollipop(pick(4, max_n));
    case 5: {
      const std::size_t n = 2 * pick(3, max_n / 2);
      const auto g = random_regular(n, 3, rng());
      if (is_connected(g)) return g;
      [[fallthrough]];
    }
    default: {
      const double extra = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
      return oracle::random_connected(pick(2, max_n), extra, rng);
    }
  }
}

bool has_bridge_naive(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<Edge> rest;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j != i) rest.push_back(edges[j]);
    }
    if (!is_connected(Graph::from_edges(g.n(), rest))) return true;
  }
  return false;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

}  // namespace

TEST_CASE("graph invariants under the mixer") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 200; ++rep) {
    const auto g = mixed_connected(rng, 14);
    CAPTURE(rep);
    std::uint64_t deg = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      deg += g.degree(v);
      for (Vertex w : g.neighbors(v)) {
        CHECK(w != v);
        CHECK(g.has_edge(w, v));
      }
    }
    CHECK(deg == 2 * g.m());
    VertexSubset all(g.n());
    for (Vertex v = 0; v < g.n(); ++v) all.insert(v);
    CHECK(volume(g, all) == 2 * g.m());
    CHECK(parse_graph(to_edge_list(g)) == g);
  }
}

TEST_CASE("cut and ratio symmetry, exhaustive for n <= 12") {
  std::mt19937_64 rng(103);
  for (int rep = 0; rep < 30; ++rep) {
    const auto g = mixed_connected(rng, 12);
    const std::uint64_t full = (std::uint64_t{1} << g.n()) - 1;
    for (std::uint64_t s = 1; s < full; ++s) {
      const auto x = VertexSubset::from_mask(g.n(), s);
      const auto xc = x.complement();
      CHECK(xc.mask() == (full & ~s));
      CHECK(edge_boundary(g, x) == edge_boundary(g, xc));
      CHECK(cheeger_ratio(g, x) == cheeger_ratio(g, xc));
    }
  }
}

TEST_CASE("Cheeger constant is a minimum and at most one") {
  std::mt19937_64 rng(107);
  for (int rep = 0; rep < 60; ++rep) {
    const auto g = mixed_connected(rng, 10);
    if (g.n() < 2) continue;
    const auto r = cheeger_constant_exact(g);
    CHECK(r.phi <= Rational(1));
    CHECK(r.phi > Rational(0));
    CHECK(cheeger_ratio(g, r.argmin) == r.phi);
    const auto want = oracle::cheeger(g);
    CHECK(r.phi == Rational(want.num, want.den));
    const std::uint64_t full = (std::uint64_t{1} << g.n()) - 1;
    for (std::uint64_t s = 1; s < full; ++s) {
      CHECK(r.phi <= cheeger_ratio(g, VertexSubset::from_mask(g.n(), s)));
    }
  }
}

TEST_CASE("connected k-subset counts") {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto k = complete_graph(n);
    for (std::size_t j = 1; j <= n; ++j) CHECK(connected_k_subsets(k, j).size() == binom(n, j));
  }
  std::mt19937_64 rng(109);
  for (int rep = 0; rep < 30; ++rep) {
    const auto g = mixed_connected(rng, 11);
    std::size_t total = 0;
    for (std::size_t j = 1; j <= g.n(); ++j) {
      const auto sets = connected_k_subsets(g, j);
      total += sets.size();
      CHECK(sets.size() == oracle::connected_subsets(g, j).size());
    }
    std::size_t brute = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.n()); ++s) {
      brute += oracle::subset_connected(g, s);
    }
    CHECK(total == brute);
  }
}

TEST_CASE("spectral invariants and the Cheeger inequality on 200 graphs") {
  std::mt19937_64 rng(113);
  for (int rep = 0; rep < 200; ++rep) {
    const auto g = mixed_connected(rng, 16);
    if (g.n() < 2) continue;
    CAPTURE(rep);
    const auto s = spectrum(g);
    double trace = 0;
    for (double l : s.eigenvalues) {
      CHECK(l >= -1e-9);
      CHECK(l <= 2 + 1e-9);
      trace += l;
    }
    CHECK(std::abs(s.eigenvalues[0]) <= 1e-9);
    CHECK(std::abs(trace - static_cast<double>(g.n())) < 1e-7);
    const auto c = check_cheeger_inequality(g);
    CHECK(c.left_slack >= -1e-9);
    CHECK(c.right_slack >= -1e-9);
    CHECK((std::abs(s.lambda_max - 2.0) < 1e-9) == is_bipartite(g));
  }
}

TEST_CASE("expansion bound on every small subset") {
  std::mt19937_64 rng(127);
  for (int rep = 0; rep < 40; ++rep) {
    const auto g = mixed_connected(rng, 12);
    if (g.n() < 2) continue;
    const double l1 = spectrum(g).lambda1;
    const std::uint64_t vol = 2 * g.m();
    for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << g.n()); ++s) {
      const auto x = VertexSubset::from_mask(g.n(), s);
      if (2 * volume(g, x) > vol) continue;
      CHECK(edge_expansion_bound_check(g, x, l1).slack >= -1e-9);
    }
  }
}

TEST_CASE("bridged families are not 2-edge-connected") {
  for (std::size_t n = 6; n <= 14; n += 2) CHECK_FALSE(is_two_edge_connected(barbell(n)));
  for (std::size_t n = 4; n <= 12; ++n) CHECK_FALSE(is_two_edge_connected(lollipop(n)));
  std::mt19937_64 rng(131);
  for (int rep = 0; rep < 80; ++rep) {
    const auto g = mixed_connected(rng, 12);
    CHECK(is_two_edge_connected(g) == (g.n() >= 2 && !has_bridge_naive(g)));
  }
}

TEST_CASE("strong orientations have no sinks or sources") {
  std::mt19937_64 rng(137);
  for (int rep = 0; rep < 25; ++rep) {
    const auto g = mixed_connected(rng, 9);
    if (g.m() > 12) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
      const auto o = Orientation::from_mask(g, mask);
      if (!is_strongly_connected(o) || g.n() < 2) continue;
      const auto x = degree_extremes(o);
      CHECK(x.sinks.empty());
      CHECK(x.sources.empty());
    }
  }
}

TEST_CASE("census ordering and Robbins") {
  std::mt19937_64 rng(139);
  int checked = 0;
  for (int rep = 0; rep < 120; ++rep) {
    const auto g = mixed_connected(rng, 10);
    if (g.m() > 12 || g.n() < 2) continue;
    ++checked;
    const auto c = orientation_census(g);
    CHECK(c.total == (std::uint64_t{1} << g.m()));
    CHECK(c.strong <= c.sink_free);
    CHECK(c.sink_free <= c.total);
    CHECK(c.eulerian <= c.sink_free);
    CHECK((c.strong == 0) == !is_two_edge_connected(g));
    CHECK((c.strong == 0) == !bridges(g).empty());
  }
  CHECK(checked > 40);
  const auto split = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(orientation_census(split).strong == 0);
}

TEST_CASE("cut-event law on every proper subset, m <= 14") {
  std::mt19937_64 rng(149);
  for (int rep = 0; rep < 40; ++rep) {
    const auto g = mixed_connected(rng, 9);
    if (g.m() > 14 || g.n() < 2) continue;
    for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << g.n()); ++s) {
      const auto x = VertexSubset::from_mask(g.n(), s);
      const auto e = edge_boundary(g, x);
      CHECK(cut_event_probability_exact(g, x) == Rational(2, std::int64_t{1} << e));
    }
    // Brute force for X = {0}: no edge leaves X, or no edge enters X.
    const auto x = VertexSubset::from_mask(g.n(), 1);
    std::uint64_t hits = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
      const auto o = Orientation::from_mask(g, mask);
      bool out = false, in = false;
      for (std::size_t i = 0; i < g.m(); ++i) {
        const bool t = x.contains(o.tail(i)), h = x.contains(o.head(i));
        out |= t && !h;
        in |= h && !t;
      }
      hits += !(out && in);
    }
    CHECK(cut_event_probability_exact(g, x) ==
          Rational(static_cast<std::int64_t>(hits), std::int64_t{1} << g.m()));
  }
}

TEST_CASE("Monte Carlo determinism across partitions") {
  std::mt19937_64 rng(151);
  for (int rep = 0; rep < 10; ++rep) {
    const auto g = mixed_connected(rng, 14);
    const std::uint64_t seed = rng();
    const auto a = mc_strong_probability(g, 777, seed, 1);
    for (unsigned t : {2u, 5u, 8u}) {
      const auto b = mc_strong_probability(g, 777, seed, t);
      CHECK(a.successes == b.successes);
      CHECK(a.ci_low == b.ci_low);
      CHECK(a.ci_high == b.ci_high);
    }
    CHECK(0.0 <= a.ci_low);
    CHECK(a.ci_low <= a.p_hat);
    CHECK(a.p_hat <= a.ci_high);
    CHECK(a.ci_high <= 1.0);
  }
}

TEST_CASE("random regular samples are regular and reproducible") {
  std::mt19937_64 rng(157);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t d = 3 + rep % 6;
    const std::size_t n = 2 * (d + 1 + rep % 7);
    const std::uint64_t seed = rng();
    const auto g = random_regular(n, d, seed);
    CHECK(g.min_degree() == d);
    CHECK(g.max_degree() == d);
    CHECK(random_regular(n, d, seed) == g);
  }
}
