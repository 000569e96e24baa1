#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rso/graph.hpp"
#include "rso/rational.hpp"
#include "rso/rng.hpp"

namespace rso {

/// One direction bit per edge, in the graph's canonical edge order. For the
/// stored pair (u, v) with u < v, bit 0 means u -> v and bit 1 means v -> u.
/// Holds a pointer to its graph, which must outlive it.
class Orientation {
 public:
  explicit Orientation(const Graph& g)
      : g_(&g), words_((g.m() + 63) / 64, 0) {}
  Orientation(const Graph& g, std::vector<std::uint64_t> words);
  static Orientation from_mask(const Graph& g, std::uint64_t mask);

  const Graph& graph() const noexcept { return *g_; }
  std::size_t size() const noexcept { return g_->m(); }
  bool bit(std::size_t e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void set(std::size_t e, bool reversed) noexcept;
  Vertex tail(std::size_t e) const noexcept { return bit(e) ? g_->edge(e).v : g_->edge(e).u; }
  Vertex head(std::size_t e) const noexcept { return bit(e) ? g_->edge(e).u : g_->edge(e).v; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  const Graph* g_;
  std::vector<std::uint64_t> words_;
};

/// Bits are read from the trial stream: edge j takes bit j % 64 of word j / 64.
Orientation random_orientation(const Graph& g, const TrialStream& stream);

/// Number of strongly connected components (iterative Tarjan, O(n + m)).
std::size_t strong_component_count(const Orientation& o);
/// Forward and backward bitmask closure from vertex 0. Needs n <= 64.
bool is_strongly_connected_bitset(const Orientation& o);
/// True iff every ordered vertex pair is joined by a directed path. A graph
/// with at most one vertex is strongly connected.
bool is_strongly_connected(const Orientation& o);

struct DegreeExtremes {
  std::vector<Vertex> sinks;    // outdegree 0
  std::vector<Vertex> sources;  // indegree 0
};
DegreeExtremes degree_extremes(const Orientation& o);
std::size_t count_sinks(const Orientation& o);

inline constexpr std::size_t kCensusMaxEdges = 24;

struct OrientationCensus {
  std::uint64_t total = 0;
  std::uint64_t strong = 0;
  std::uint64_t sink_free = 0;
  std::uint64_t eulerian = 0;

  OrientationCensus& operator+=(const OrientationCensus& o) noexcept {
    total += o.total;
    strong += o.strong;
    sink_free += o.sink_free;
    eulerian += o.eulerian;
    return *this;
  }
};

/// Exact counts over all 2^m orientations, visited in Gray-code order so
/// each step reverses one arc. Requires m <= 24 and n <= 64.
OrientationCensus orientation_census(const Graph& g, unsigned threads = 1);

/// Probability, over all 2^m orientations, that x has no incoming or no
/// outgoing arc. Needs e(X, X^c) >= 1 and m <= 24.
Rational cut_event_probability_exact(const Graph& g, const VertexSubset& x);

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.96);

struct MCEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t seed = 0;
};
MCEstimate make_estimate(std::uint64_t successes, std::uint64_t trials, std::uint64_t seed);

/// Trial i draws its orientation from TrialStream(seed, i), so the result
/// is identical for every thread count.
MCEstimate mc_strong_probability(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads = 1);

struct SinkStatistics {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t total_sinks = 0;
  double mean_sinks = 0.0;
  double exact_expectation = 0.0;  // sum_v 2^{-deg v}
  double exact_variance = 0.0;     // per-trial variance of the sink count
  double std_error = 0.0;
  double z_score = 0.0;
};

/// Exact variance: sinks at non-adjacent vertices are independent and
/// adjacent vertices cannot both be sinks, so
/// Var = sum_v p_v(1 - p_v) - 2 sum_{uv in E} p_u p_v.
SinkStatistics mc_sink_statistics(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads = 1);

}  // namespace rso
