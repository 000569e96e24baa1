#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rso/graph.hpp"

namespace rso {

enum class Family {
  complete,
  cycle,
  path,
  barbell,
  lollipop,
  random_regular,
  tight_example,
  erdos_renyi,
};

std::string_view family_name(Family f) noexcept;

/// A named graph construction plus its parameters and seed.
///
/// Grammar: `family:param[,param...]`, e.g. `barbell:6`, `regular:16,4`,
/// `tight:3,2`, `er:10,0.3`. Randomized families take their seed from
/// the `seed` field, which parse_genspec does not set.
struct GenSpec {
  Family family = Family::complete;
  std::vector<double> params;
  std::uint64_t seed = 0;

  std::string str() const;
};

GenSpec parse_genspec(std::string_view text, std::uint64_t seed = 0);
Graph generate(const GenSpec& spec);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Two disjoint K_{n/2} joined by the bridge (n/2 - 1, n/2).
Graph barbell(std::size_t n);
/// K_{n-1} on [0, n-1) plus vertex n-1 pendant on vertex 0.
Graph lollipop(std::size_t n);

enum class RegularMethod { pairing_rejection, steger_wormald };
std::string_view method_name(RegularMethod m) noexcept;

/// Largest degree sampled by whole-sample pairing rejection. Above it the
/// acceptance probability (about exp(-(d^2-1)/4)) is too small and the
/// sequential Steger-Wormald pairing is used.
inline constexpr std::size_t kPairingRejectionMaxDegree = 5;
inline constexpr std::size_t kRegularAttemptCap = 10'000;

struct RegularSample {
  Graph graph;
  RegularMethod method = RegularMethod::pairing_rejection;
  std::size_t attempts = 0;
};

RegularSample sample_random_regular(std::size_t n, std::size_t d, std::uint64_t seed);
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

/// 2^t disjoint cliques K_{ct}; clique i occupies [i*ct, (i+1)*ct) with its
/// distinguished vertex first. The distinguished vertices carry a random
/// t-regular graph.
Graph tight_example(std::size_t t, std::size_t c, std::uint64_t seed);

}  // namespace rso
