#include "rso/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "rso/errors.hpp"
#include "rso/rng.hpp"

namespace rso {

namespace {

std::size_t as_count(double x, std::string_view what) {
  if (!(x >= 0) || x != std::floor(x) || x > 1e12) {
    throw DomainError(std::string(what) + " must be a nonnegative integer");
  }
  return static_cast<std::size_t>(x);
}

void require_params(const GenSpec& s, std::size_t count) {
  if (s.params.size() != count) {
    throw DomainError(std::string(family_name(s.family)) + " takes " + std::to_string(count) +
                      " parameter(s)");
  }
}

bool pairing_attempt(std::size_t n, std::size_t d, Rng& rng, std::vector<Edge>& out) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * d);
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
  rng.shuffle(stubs.begin(), stubs.end());
  out.clear();
  for (std::size_t i = 0; i < stubs.size(); i += 2) {
    Vertex a = stubs[i], b = stubs[i + 1];
    if (a == b) return false;
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  return std::adjacent_find(out.begin(), out.end()) == out.end();
}

// One pass of the Steger-Wormald sequential pairing. Returns false when it
// gets stuck with no admissible pair left.
bool steger_wormald_attempt(std::size_t n, std::size_t d, Rng& rng, std::vector<Edge>& out) {
  std::vector<Vertex> points;
  points.reserve(n * d);
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
  std::vector<std::vector<Vertex>> adj(n);
  out.clear();

  auto adjacent = [&](Vertex a, Vertex b) {
    const auto& na = adj[a];
    return std::find(na.begin(), na.end(), b) != na.end();
  };
  auto admissible_exists = [&]() {
    std::vector<Vertex> live(points.begin(), points.end());
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        if (!adjacent(live[i], live[j])) return true;
      }
    }
    return false;
  };

  std::size_t failures = 0;
  while (!points.empty()) {
    const auto size = points.size();
    const auto i = rng.uniform(size);
    auto j = rng.uniform(size - 1);
    if (j >= i) ++j;
    const Vertex a = points[i], b = points[j];
    if (a != b && !adjacent(a, b)) {
      adj[a].push_back(b);
      adj[b].push_back(a);
      out.push_back({std::min(a, b), std::max(a, b)});
      const auto hi = std::max(i, j), lo = std::min(i, j);
      points[hi] = points.back();
      points.pop_back();
      points[lo] = points.back();
      points.pop_back();
      failures = 0;
      continue;
    }
    if (++failures > 64 + size) {
      if (!admissible_exists()) return false;
      failures = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return true;
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::barbell: return "barbell";
    case Family::lollipop: return "lollipop";
    case Family::random_regular: return "regular";
    case Family::tight_example: return "tight";
    case Family::erdos_renyi: return "er";
  }
  return "unknown";
}

std::string_view method_name(RegularMethod m) noexcept {
  return m == RegularMethod::pairing_rejection ? "pairing_rejection" : "steger_wormald";
}

std::string GenSpec::str() const {
  std::ostringstream os;
  os << family_name(family) << ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << ',';
    os << params[i];
  }
  return os.str();
}

GenSpec parse_genspec(std::string_view text, std::uint64_t seed) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("generator spec must look like family:param[,param...]");
  }
  const auto name = text.substr(0, colon);
  GenSpec spec;
  spec.seed = seed;
  if (name == "complete" || name == "K") spec.family = Family::complete;
  else if (name == "cycle" || name == "C") spec.family = Family::cycle;
  else if (name == "path" || name == "P") spec.family = Family::path;
  else if (name == "barbell") spec.family = Family::barbell;
  else if (name == "lollipop") spec.family = Family::lollipop;
  else if (name == "regular" || name == "random_regular") spec.family = Family::random_regular;
  else if (name == "tight" || name == "tight_example") spec.family = Family::tight_example;
  else if (name == "er" || name == "erdos_renyi") spec.family = Family::erdos_renyi;
  else throw DomainError("unknown graph family '" + std::string(name) + "'");

  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto tok = rest.substr(0, comma);
    double value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
      throw DomainError("malformed generator parameter '" + std::string(tok) + "'");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

Graph generate(const GenSpec& s) {
  switch (s.family) {
    case Family::complete:
      require_params(s, 1);
      return complete_graph(as_count(s.params[0], "n"));
    case Family::cycle:
      require_params(s, 1);
      return cycle_graph(as_count(s.params[0], "n"));
    case Family::path:
      require_params(s, 1);
      return path_graph(as_count(s.params[0], "n"));
    case Family::barbell:
      require_params(s, 1);
      return barbell(as_count(s.params[0], "n"));
    case Family::lollipop:
      require_params(s, 1);
      return lollipop(as_count(s.params[0], "n"));
    case Family::random_regular:
      require_params(s, 2);
      return random_regular(as_count(s.params[0], "n"), as_count(s.params[1], "d"), s.seed);
    case Family::tight_example:
      require_params(s, 2);
      return tight_example(as_count(s.params[0], "t"), as_count(s.params[1], "c"), s.seed);
    case Family::erdos_renyi:
      require_params(s, 2);
      return erdos_renyi(as_count(s.params[0], "n"), s.params[1], s.seed);
  }
  throw DomainError("unknown graph family");
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw DomainError("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph::from_edges(n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph::from_edges(n, std::move(e));
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw DomainError("path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, std::move(e));
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw DomainError("erdos_renyi needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("erdos_renyi needs 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) e.push_back({i, j});
    }
  }
  return Graph::from_edges(n, std::move(e));
}

Graph barbell(std::size_t n) {
  if (n < 6 || n % 2 != 0) throw DomainError("barbell needs even n >= 6");
  const auto h = static_cast<Vertex>(n / 2);
  std::vector<Edge> e;
  for (Vertex i = 0; i < h; ++i) {
    for (Vertex j = i + 1; j < h; ++j) {
      e.push_back({i, j});
      e.push_back({h + i, h + j});
    }
  }
  e.push_back({h - 1, h});
  return Graph::from_edges(n, std::move(e));
}

Graph lollipop(std::size_t n) {
  if (n < 3) throw DomainError("lollipop needs n >= 3");
  const auto k = static_cast<Vertex>(n - 1);
  std::vector<Edge> e;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) e.push_back({i, j});
  }
  e.push_back({0, k});
  return Graph::from_edges(n, std::move(e));
}

RegularSample sample_random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n < 4) throw DomainError("random_regular needs n >= 4");
  if (d >= n) throw DomainError("random_regular needs d < n");
  if ((n * d) % 2 != 0) throw DomainError("random_regular needs n*d even");

  Rng rng(seed);
  RegularSample out;
  out.method = d <= kPairingRejectionMaxDegree ? RegularMethod::pairing_rejection
                                               : RegularMethod::steger_wormald;
  std::vector<Edge> edges;
  for (std::size_t attempt = 1; attempt <= kRegularAttemptCap; ++attempt) {
    const bool ok = out.method == RegularMethod::pairing_rejection
                        ? pairing_attempt(n, d, rng, edges)
                        : steger_wormald_attempt(n, d, rng, edges);
    if (ok) {
      out.attempts = attempt;
      out.graph = Graph::from_edges(n, std::move(edges));
      return out;
    }
  }
  throw SamplingError("random_regular(" + std::to_string(n) + "," + std::to_string(d) +
                      ") exceeded " + std::to_string(kRegularAttemptCap) + " attempts");
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  return sample_random_regular(n, d, seed).graph;
}

Graph tight_example(std::size_t t, std::size_t c, std::uint64_t seed) {
  if (t < 2 || c < 2) throw DomainError("tight_example needs t >= 2 and c >= 2");
  if (t > 20) throw SizeLimitError("tight_example guard N*c*t <= 1e6 exceeded");
  const std::size_t big_n = std::size_t{1} << t;
  const std::size_t clique = c * t;
  if (big_n * clique > 1'000'000) throw SizeLimitError("tight_example guard N*c*t <= 1e6 exceeded");

  const auto wiring = random_regular(big_n, t, seed);
  std::vector<Edge> e;
  e.reserve(big_n * clique * (clique - 1) / 2 + wiring.m());
  for (std::size_t i = 0; i < big_n; ++i) {
    const auto base = static_cast<Vertex>(i * clique);
    for (Vertex a = 0; a < clique; ++a) {
      for (Vertex b = a + 1; b < clique; ++b) e.push_back({base + a, base + b});
    }
  }
  for (const auto& w : wiring.edges()) {
    e.push_back({static_cast<Vertex>(w.u * clique), static_cast<Vertex>(w.v * clique)});
  }
  return Graph::from_edges(big_n * clique, std::move(e));
}

}  // namespace rso
