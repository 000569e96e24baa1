#include "rso/orientation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "parallel.hpp"
#include "rso/errors.hpp"

namespace rso {

namespace {

bool closure_is_full(std::span<const std::uint64_t> arcs, std::size_t n) {
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t reach = 1, frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= arcs[std::countr_zero(f)];
    next &= ~reach;
    reach |= next;
    frontier = next;
  }
  return reach == full;
}

bool masks_strong(std::span<const std::uint64_t> out, std::span<const std::uint64_t> in,
                  std::size_t n) {
  if (n <= 1) return true;
  return closure_is_full(out, n) && closure_is_full(in, n);
}

void check_mask_path(const Graph& g) {
  if (g.n() > 64) throw SizeLimitError("bitset routines need n <= 64");
}

}  // namespace

Orientation::Orientation(const Graph& g, std::vector<std::uint64_t> words)
    : g_(&g), words_(std::move(words)) {
  if (words_.size() != (g.m() + 63) / 64) {
    throw DomainError("orientation word count does not match edge count");
  }
  if (g.m() % 64 != 0) words_.back() &= (std::uint64_t{1} << (g.m() % 64)) - 1;
}

Orientation Orientation::from_mask(const Graph& g, std::uint64_t mask) {
  if (g.m() > 64) throw DomainError("from_mask needs m <= 64");
  std::vector<std::uint64_t> w;
  if (g.m() > 0) w.push_back(mask);
  return Orientation(g, std::move(w));
}

void Orientation::set(std::size_t e, bool reversed) noexcept {
  const std::uint64_t b = std::uint64_t{1} << (e & 63);
  if (reversed) words_[e >> 6] |= b;
  else words_[e >> 6] &= ~b;
}

Orientation random_orientation(const Graph& g, const TrialStream& stream) {
  std::vector<std::uint64_t> words((g.m() + 63) / 64);
  for (std::size_t w = 0; w < words.size(); ++w) words[w] = stream.word(w);
  return Orientation(g, std::move(words));
}

std::size_t strong_component_count(const Orientation& o) {
  const Graph& g = o.graph();
  const std::size_t n = g.n();
  if (n == 0) return 0;

  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t e = 0; e < g.m(); ++e) ++off[o.tail(e) + 1];
  for (std::size_t v = 0; v < n; ++v) off[v + 1] += off[v];
  std::vector<Vertex> arcs(g.m());
  {
    std::vector<std::size_t> fill(off.begin(), off.end() - 1);
    for (std::size_t e = 0; e < g.m(); ++e) arcs[fill[o.tail(e)]++] = o.head(e);
  }

  constexpr auto kUnvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> scc_stack;
  std::vector<std::pair<Vertex, std::size_t>> call;
  std::uint32_t counter = 0;
  std::size_t components = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, off[root]});
    index[root] = low[root] = counter++;
    scc_stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, it] = call.back();
      if (it < off[v + 1]) {
        const Vertex w = arcs[it++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, off[w]});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      call.pop_back();
      if (!call.empty()) {
        const Vertex p = call.back().first;
        low[p] = std::min(low[p], low[done]);
      }
      if (low[done] == index[done]) {
        ++components;
        Vertex w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
        } while (w != done);
      }
    }
  }
  return components;
}

bool is_strongly_connected_bitset(const Orientation& o) {
  const Graph& g = o.graph();
  check_mask_path(g);
  std::vector<std::uint64_t> out(g.n(), 0), in(g.n(), 0);
  for (std::size_t e = 0; e < g.m(); ++e) {
    const Vertex t = o.tail(e), h = o.head(e);
    out[t] |= std::uint64_t{1} << h;
    in[h] |= std::uint64_t{1} << t;
  }
  return masks_strong(out, in, g.n());
}

bool is_strongly_connected(const Orientation& o) {
  if (o.graph().n() <= 1) return true;
  if (o.graph().n() <= 64) return is_strongly_connected_bitset(o);
  return strong_component_count(o) == 1;
}

DegreeExtremes degree_extremes(const Orientation& o) {
  const Graph& g = o.graph();
  std::vector<std::uint32_t> outdeg(g.n(), 0), indeg(g.n(), 0);
  for (std::size_t e = 0; e < g.m(); ++e) {
    ++outdeg[o.tail(e)];
    ++indeg[o.head(e)];
  }
  DegreeExtremes r;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (outdeg[v] == 0) r.sinks.push_back(v);
    if (indeg[v] == 0) r.sources.push_back(v);
  }
  return r;
}

std::size_t count_sinks(const Orientation& o) {
  const Graph& g = o.graph();
  std::vector<char> has_out(g.n(), 0);
  for (std::size_t e = 0; e < g.m(); ++e) has_out[o.tail(e)] = 1;
  return static_cast<std::size_t>(std::count(has_out.begin(), has_out.end(), 0));
}

OrientationCensus orientation_census(const Graph& g, unsigned threads) {
  const std::size_t m = g.m(), n = g.n();
  if (m > kCensusMaxEdges) {
    throw SizeLimitError("m exceeds orientation-census guard (" +
                         std::to_string(kCensusMaxEdges) + ")");
  }
  check_mask_path(g);
  const auto edges = g.edges();
  const std::uint64_t total = std::uint64_t{1} << m;

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    OrientationCensus c;
    if (begin == end) return c;
    std::vector<std::uint64_t> out(n, 0), in(n, 0);
    std::vector<std::int32_t> outdeg(n, 0), diff(n, 0);
    std::uint64_t gray = begin ^ (begin >> 1);
    for (std::size_t e = 0; e < m; ++e) {
      const bool rev = (gray >> e) & 1u;
      const Vertex t = rev ? edges[e].v : edges[e].u;
      const Vertex h = rev ? edges[e].u : edges[e].v;
      out[t] |= std::uint64_t{1} << h;
      in[h] |= std::uint64_t{1} << t;
      ++outdeg[t];
      ++diff[t];
      --diff[h];
    }
    std::size_t sinks = 0, balanced = 0;
    for (std::size_t v = 0; v < n; ++v) {
      sinks += outdeg[v] == 0;
      balanced += diff[v] == 0;
    }

    for (std::uint64_t i = begin;; ) {
      ++c.total;
      if (sinks == 0) {
        ++c.sink_free;
        if (masks_strong(out, in, n)) ++c.strong;
      }
      if (balanced == n) ++c.eulerian;
      if (++i == end) break;
      // Gray code step i-1 -> i reverses edge ctz(i).
      const auto e = static_cast<std::size_t>(std::countr_zero(i));
      const bool was_rev = (gray >> e) & 1u;
      gray ^= std::uint64_t{1} << e;
      const Vertex t = was_rev ? edges[e].v : edges[e].u;  // old tail
      const Vertex h = was_rev ? edges[e].u : edges[e].v;  // old head
      out[t] &= ~(std::uint64_t{1} << h);
      in[h] &= ~(std::uint64_t{1} << t);
      out[h] |= std::uint64_t{1} << t;
      in[t] |= std::uint64_t{1} << h;
      sinks -= outdeg[h] == 0;
      ++outdeg[h];
      --outdeg[t];
      sinks += outdeg[t] == 0;
      balanced -= (diff[t] == 0) + (diff[h] == 0);
      diff[t] -= 2;
      diff[h] += 2;
      balanced += (diff[t] == 0) + (diff[h] == 0);
    }
    return c;
  };
  // For n >= 2 a strong orientation has no sink, so the closure test only
  // runs on sink-free orientations. With n <= 1 there is a single, empty
  // orientation; it is strong by convention and counted as sink-free.
  if (n <= 1) return {total, total, total, total};
  return detail::partitioned_sum<OrientationCensus>(total, threads, run);
}

Rational cut_event_probability_exact(const Graph& g, const VertexSubset& x) {
  const std::size_t m = g.m();
  if (m > kCensusMaxEdges) {
    throw SizeLimitError("m exceeds orientation-census guard (" +
                         std::to_string(kCensusMaxEdges) + ")");
  }
  if (x.universe() != g.n()) throw DomainError("subset universe does not match graph order");
  std::uint64_t tail_inside = 0, head_inside = 0;
  for (std::size_t e = 0; e < m; ++e) {
    const bool u_in = x.contains(g.edge(e).u), v_in = x.contains(g.edge(e).v);
    if (u_in == v_in) continue;
    // bit 0 orients u -> v, which leaves X exactly when u is inside.
    if (u_in) tail_inside |= std::uint64_t{1} << e;
    else head_inside |= std::uint64_t{1} << e;
  }
  const std::uint64_t crossing = tail_inside | head_inside;
  if (crossing == 0) throw DomainError("cut event needs e(X, X^c) >= 1");

  std::uint64_t hits = 0;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t o = 0; o < total; ++o) {
    const std::uint64_t outward = (~o & tail_inside) | (o & head_inside);
    const std::uint64_t inward = crossing & ~outward;
    hits += (outward == 0 || inward == 0);
  }
  return {static_cast<std::int64_t>(hits), static_cast<std::int64_t>(total)};
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = (p + z2 / (2.0 * nt)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt));
  WilsonInterval w{center - half, center + half};
  w.low = std::clamp(std::min(w.low, p), 0.0, 1.0);
  w.high = std::clamp(std::max(w.high, p), 0.0, 1.0);
  return w;
}

MCEstimate make_estimate(std::uint64_t successes, std::uint64_t trials, std::uint64_t seed) {
  MCEstimate r;
  r.trials = trials;
  r.successes = successes;
  r.seed = seed;
  r.p_hat = trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  const auto w = wilson_interval(successes, trials);
  r.ci_low = w.low;
  r.ci_high = w.high;
  return r;
}

MCEstimate mc_strong_probability(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads) {
  if (trials < 1) throw DomainError("trials must be >= 1");
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      hits += is_strongly_connected(random_orientation(g, TrialStream(seed, i)));
    }
    return hits;
  };
  return make_estimate(detail::partitioned_sum<std::uint64_t>(trials, threads, run), trials,
                       seed);
}

SinkStatistics mc_sink_statistics(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads) {
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (g.n() > 0 && g.min_degree() < 1) throw DomainError("sink statistics need min degree >= 1");
  SinkStatistics s;
  s.trials = trials;
  s.seed = seed;
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t total = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      total += count_sinks(random_orientation(g, TrialStream(seed, i)));
    }
    return total;
  };
  s.total_sinks = detail::partitioned_sum<std::uint64_t>(trials, threads, run);
  s.mean_sinks = static_cast<double>(s.total_sinks) / static_cast<double>(trials);

  std::vector<double> p(g.n());
  for (Vertex v = 0; v < g.n(); ++v) p[v] = std::ldexp(1.0, -static_cast<int>(g.degree(v)));
  for (double pv : p) {
    s.exact_expectation += pv;
    s.exact_variance += pv * (1.0 - pv);
  }
  for (const auto& e : g.edges()) s.exact_variance -= 2.0 * p[e.u] * p[e.v];
  s.std_error = std::sqrt(s.exact_variance / static_cast<double>(trials));
  s.z_score = s.std_error > 0.0 ? (s.mean_sinks - s.exact_expectation) / s.std_error : 0.0;
  return s;
}

}  // namespace rso
