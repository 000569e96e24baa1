#include "rso/sieve.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numbers>

#include "parallel.hpp"
#include "rso/errors.hpp"
#include "rso/generators.hpp"
#include "rso/rng.hpp"

namespace rso {

namespace {

using boost::multiprecision::cpp_int;

BigRational pow2_inverse(std::uint64_t e) {
  cpp_int den = 1;
  den <<= static_cast<unsigned>(e);
  return BigRational(cpp_int(1), den);
}

cpp_int factorial(std::size_t k) {
  cpp_int f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

cpp_int binomial(std::size_t n, std::size_t k) {
  cpp_int c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

// Independent k-sets, grouped by their degree sum.
struct IndependentWalk {
  const Graph& g;
  std::size_t k;
  std::map<std::uint64_t, std::uint64_t> by_degree_sum;
  std::uint64_t sets = 0;

  void go(Vertex from, std::size_t chosen, std::uint64_t blocked, std::uint64_t deg_sum) {
    if (chosen == k) {
      ++by_degree_sum[deg_sum];
      ++sets;
      return;
    }
    for (Vertex v = from; v + (k - chosen) <= g.n(); ++v) {
      if ((blocked >> v) & 1u) continue;
      go(v + 1, chosen + 1, blocked | g.neighbor_mask(v) | (std::uint64_t{1} << v),
         deg_sum + g.degree(v));
    }
  }
};

}  // namespace

BigRational sink_probability(const Graph& g, Vertex v) {
  if (v >= g.n()) throw DomainError("vertex out of range");
  if (g.degree(v) == 0) {
    throw DomainError("vertex " + std::to_string(v) + " is isolated; it is a sink and a source");
  }
  return pow2_inverse(g.degree(v));
}

SieveReport sieve_term(const Graph& g, std::size_t k) {
  const std::size_t n = g.n();
  if (k < 1 || k > n) throw DomainError("sieve_term needs 1 <= k <= n");
  if (n > kSubsetEnumerationMaxN &&
      (n > 64 || binomial(n, k) > cpp_int(kSieveMaxSubsets))) {
    throw SizeLimitError("sieve_term needs n <= 24, or n <= 64 with C(n,k) <= 2^24");
  }
  if (g.min_degree() == 0) throw DomainError("sieve_term needs min degree >= 1");

  IndependentWalk walk{g, k, {}, 0};
  walk.go(0, 0, 0, 0);
  SieveReport r;
  r.k = k;
  r.n = n;
  r.independent_sets = walk.sets;
  for (const auto& [deg_sum, count] : walk.by_degree_sum) {
    r.s_k += BigRational(cpp_int(count)) * pow2_inverse(deg_sum);
  }
  r.target = BigRational(cpp_int(1), factorial(k));
  return r;
}

SieveReport sieve_sandwich(const Graph& g, std::size_t k, bool strict) {
  const std::size_t n = g.n();
  if (n < 2) throw DomainError("sieve_sandwich needs n >= 2");
  const std::size_t d = g.max_degree();
  if (g.min_degree() != d) throw DomainError("sieve_sandwich needs a regular graph");
  if (strict && (!std::has_single_bit(n) || std::bit_width(n) - 1 != d)) {
    throw DomainError("strict sieve_sandwich needs d = log2 N");
  }
  auto r = sieve_term(g, k);
  r.degree = d;
  r.strict = strict;
  cpp_int nk = 1;
  for (std::size_t i = 0; i < k; ++i) nk *= n;
  r.upper = BigRational(binomial(n, k), nk);
  BigRational base = BigRational(1) - BigRational(cpp_int(k * d), cpp_int(n));
  BigRational lower = 1;
  for (std::size_t i = 0; i < k; ++i) lower *= base;
  r.lower = lower * r.target;
  r.sandwich_holds = *r.lower <= r.s_k && r.s_k <= *r.upper;
  return r;
}

Example1Result example1_experiment(std::size_t t, std::uint64_t trials, std::uint64_t seed,
                                   unsigned threads) {
  if (t < 3 || t > 7) throw DomainError("example1 needs 3 <= t <= 7");
  if (trials < 1) throw DomainError("trials must be >= 1");
  Example1Result r;
  r.t = t;
  r.n = std::size_t{1} << t;
  r.trials = trials;
  r.seed = seed;
  r.block_size = kExample1BlockSize;
  r.blocks = (trials + kExample1BlockSize - 1) / kExample1BlockSize;

  struct Counts {
    std::uint64_t disconnected = 0, has_sink = 0, sinks = 0, sink_but_strong = 0;
    Counts& operator+=(const Counts& o) {
      disconnected += o.disconnected;
      has_sink += o.has_sink;
      sinks += o.sinks;
      sink_but_strong += o.sink_but_strong;
      return *this;
    }
  };
  auto run = [&](std::uint64_t block_begin, std::uint64_t block_end) {
    Counts c;
    for (std::uint64_t b = block_begin; b < block_end; ++b) {
      const Graph g = random_regular(r.n, t, derive_seed(seed, b));
      const std::uint64_t last = std::min(trials, (b + 1) * kExample1BlockSize);
      for (std::uint64_t i = b * kExample1BlockSize; i < last; ++i) {
        const auto o = random_orientation(g, TrialStream(seed, i));
        const auto sinks = count_sinks(o);
        const bool strong = is_strongly_connected(o);
        c.disconnected += !strong;
        c.has_sink += sinks > 0;
        c.sinks += sinks;
        c.sink_but_strong += sinks > 0 && strong;
      }
    }
    return c;
  };
  const auto c = detail::partitioned_sum<Counts>(r.blocks, threads, run);
  r.p_disconnected = make_estimate(c.disconnected, trials, seed);
  r.p_has_sink = make_estimate(c.has_sink, trials, seed);
  r.total_sinks = c.sinks;
  r.mean_sinks = static_cast<double>(c.sinks) / static_cast<double>(trials);
  r.exact_mean_sinks = static_cast<double>(r.n) * std::ldexp(1.0, -static_cast<int>(t));
  r.distance_to_limit = r.p_has_sink.p_hat - (1.0 - std::exp(-1.0));
  r.sink_but_strong = c.sink_but_strong;
  return r;
}

}  // namespace rso
