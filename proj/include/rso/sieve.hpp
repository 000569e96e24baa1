#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "rso/graph.hpp"
#include "rso/orientation.hpp"

namespace rso {

using BigRational = boost::multiprecision::cpp_rational;

/// 2^{-deg v}. Throws DomainError for an isolated vertex.
BigRational sink_probability(const Graph& g, Vertex v);

struct SieveReport {
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t independent_sets = 0;
  BigRational s_k;     // sum over independent k-sets of prod 2^{-deg v}
  BigRational target;  // 1/k!
  // Set by sieve_sandwich only.
  std::optional<std::size_t> degree;
  std::optional<bool> strict;
  std::optional<BigRational> upper;  // C(N,k)/N^k
  std::optional<BigRational> lower;  // (1 - k d/N)^k / k!
  std::optional<bool> sandwich_holds;
};

/// Largest number of k-subsets sieve_term will walk when n exceeds 24.
inline constexpr std::uint64_t kSieveMaxSubsets = std::uint64_t{1} << 24;

/// Exact S^(k). Accepts n <= 24, or n <= 64 with C(n,k) <= 2^24.
SieveReport sieve_term(const Graph& g, std::size_t k);

/// S^(k) with the regular-graph sandwich. In strict mode the graph must be
/// d-regular with N = 2^d; otherwise any d-regular graph is accepted and d
/// stands in for log2 N in the lower bound.
SieveReport sieve_sandwich(const Graph& g, std::size_t k, bool strict = true);

struct Example1Result {
  std::size_t t = 0;
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t block_size = 0;
  std::uint64_t blocks = 0;
  MCEstimate p_disconnected;
  MCEstimate p_has_sink;
  std::uint64_t total_sinks = 0;
  double mean_sinks = 0.0;
  double exact_mean_sinks = 1.0;       // N * 2^{-t}
  double distance_to_limit = 0.0;      // p_has_sink - (1 - 1/e), descriptive only
  std::uint64_t sink_but_strong = 0;   // trials with a sink that were strongly connected
};

inline constexpr std::uint64_t kExample1BlockSize = 100;

/// Block b of 100 trials uses random_regular(2^t, t, derive_seed(seed, b));
/// trial i orients it with TrialStream(seed, i). Requires 3 <= t <= 7.
Example1Result example1_experiment(std::size_t t, std::uint64_t trials, std::uint64_t seed,
                                   unsigned threads = 1);

}  // namespace rso
