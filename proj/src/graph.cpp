#include "rso/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "rso/errors.hpp"

namespace rso {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw DomainError("edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") has a vertex id out of range");
    }
    if (e.u == e.v) {
      throw DomainError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end());
      it != edges.end()) {
    throw DomainError("duplicate edge (" + std::to_string(it->u) + "," +
                      std::to_string(it->v) + ")");
  }

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : g.edges_) {
    g.adj_[fill[e.u]++] = e.v;
    g.adj_[fill[e.v]++] = e.u;
  }
  // Edges are sorted by (u, v), so each list is already ascending except
  // for the interleaving of lower and higher neighbors.
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  if (n <= 64) {
    g.masks_.assign(n, 0);
    for (const auto& e : g.edges_) {
      g.masks_[e.u] |= std::uint64_t{1} << e.v;
      g.masks_[e.v] |= std::uint64_t{1} << e.u;
    }
  }
  return g;
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t best = n_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a >= n_ || b >= n_) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

VertexSubset VertexSubset::from_mask(std::size_t n, std::uint64_t mask) {
  if (n < 64 && (mask >> n) != 0) {
    throw DomainError("subset mask has bits outside [0,n)");
  }
  VertexSubset s(n);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

VertexSubset VertexSubset::from_list(std::size_t n,
                                     std::span<const Vertex> vs) {
  VertexSubset s(n);
  for (Vertex v : vs) s.insert(v);
  return s;
}

void VertexSubset::insert(Vertex v) {
  if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " outside subset universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

std::size_t VertexSubset::size() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

VertexSubset VertexSubset::complement() const {
  VertexSubset c(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
  if (n_ % 64 != 0 && !c.words_.empty()) {
    c.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
  return c;
}

std::vector<Vertex> VertexSubset::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

namespace {

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  const char* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc{} && p == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

void check_subset(const Graph& g, const VertexSubset& x) {
  if (x.universe() != g.n()) {
    throw DomainError("subset universe does not match graph order");
  }
}

void check_nonempty_proper(const VertexSubset& x) {
  const auto s = x.size();
  if (s == 0) throw DomainError("subset is empty");
  if (s == x.universe()) throw DomainError("subset is the whole vertex set");
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0, m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    if (toks.size() != 2) throw ParseError(line_no, "expected two integers");
    std::uint64_t a = 0, b = 0;
    if (!parse_u64(toks[0], a) || !parse_u64(toks[1], b)) {
      throw ParseError(line_no, "malformed integer");
    }
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
    } else {
      if (edges.size() == m) throw ParseError(line_no, "more edges than declared");
      if (a >= n || b >= n) throw ParseError(line_no, "vertex id out of range");
      if (a == b) throw ParseError(line_no, "self-loop");
      edges.push_back({static_cast<Vertex>(std::min(a, b)),
                       static_cast<Vertex>(std::max(a, b))});
      edge_line.push_back(line_no);
    }
    if (nl == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header line");
  if (edges.size() != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  // Report the line of the second occurrence of a duplicate.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return edges[i] < edges[j]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      throw ParseError(edge_line[std::max(order[i], order[i - 1])], "duplicate edge");
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::uint64_t volume(const Graph& g, const VertexSubset& x) {
  check_subset(g, x);
  std::uint64_t vol = 0;
  for (Vertex v : x.members()) vol += g.degree(v);
  return vol;
}

std::uint64_t edge_boundary(const Graph& g, const VertexSubset& x) {
  check_subset(g, x);
  check_nonempty_proper(x);
  std::uint64_t cut = 0;
  for (const auto& e : g.edges()) cut += x.contains(e.u) != x.contains(e.v);
  return cut;
}

Rational cheeger_ratio(const Graph& g, const VertexSubset& x) {
  const auto cut = edge_boundary(g, x);
  const auto vx = volume(g, x);
  const auto total = 2 * static_cast<std::uint64_t>(g.m());
  const auto denom = std::min(vx, total - vx);
  if (denom == 0) throw DomainError("Cheeger ratio undefined: one side has zero volume");
  return {static_cast<std::int64_t>(cut), static_cast<std::int64_t>(denom)};
}

std::vector<std::uint32_t> component_labels(const Graph& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(g.n(), kUnset);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](auto l) { return l == 0; });
}

std::vector<Edge> bridges(const Graph& g) {
  // Iterative lowlink DFS. Skipping the parent vertex is the same as
  // skipping the parent edge because the graph is simple.
  const std::size_t n = g.n();
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<Vertex> parent(n, static_cast<Vertex>(-1));
  std::vector<std::size_t> it(n, 0);
  std::vector<Edge> out;
  std::uint32_t timer = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++timer;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      auto nb = g.neighbors(v);
      if (it[v] < nb.size()) {
        Vertex w = nb[it[v]++];
        if (disc[w] == 0) {
          parent[w] = v;
          disc[w] = low[w] = ++timer;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back();
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.push_back({std::min(p, v), std::max(p, v)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_edge_connected(const Graph& g) {
  return is_connected(g) && bridges(g).empty();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

CheegerReport cheeger_constant_exact(const Graph& g) {
  const std::size_t n = g.n();
  if (n > kSubsetEnumerationMaxN) {
    throw SizeLimitError("n exceeds exact-Cheeger guard (" +
                         std::to_string(kSubsetEnumerationMaxN) + ")");
  }
  if (n < 2) throw DomainError("Cheeger constant needs at least two vertices");

  const std::uint64_t total = 2 * static_cast<std::uint64_t>(g.m());
  CheegerReport rep;

  if (!is_connected(g)) {
    auto label = component_labels(g);
    rep.argmin = VertexSubset(n);
    for (Vertex v = 0; v < n; ++v) {
      if (label[v] == 0) rep.argmin.insert(v);
    }
    rep.phi = Rational(0);
    rep.cut_edges = 0;
    rep.vol_x = volume(g, rep.argmin);
    rep.vol_xbar = total - rep.vol_x;
    rep.connected = false;
    return rep;
  }

  // X always contains vertex 0; the remaining n-1 vertices follow a Gray
  // code so each step flips exactly one vertex.
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  std::uint64_t x = 1;
  std::int64_t cut = static_cast<std::int64_t>(g.degree(0));
  std::uint64_t vol = g.degree(0);

  std::uint64_t best_mask = 0, best_cut = 0, best_den = 1;
  bool have_best = false;
  auto consider = [&]() {
    if (x == full) return;
    const std::uint64_t den = std::min(vol, total - vol);
    const auto c = static_cast<std::uint64_t>(cut);
    if (!have_best) {
      have_best = true;
    } else {
      const auto lhs = static_cast<unsigned __int128>(c) * best_den;
      const auto rhs = static_cast<unsigned __int128>(best_cut) * den;
      if (lhs > rhs || (lhs == rhs && x >= best_mask)) return;
    }
    best_mask = x;
    best_cut = c;
    best_den = den;
  };

  consider();
  for (std::uint64_t s = 1; s < steps; ++s) {
    const auto bit = static_cast<unsigned>(std::countr_zero(s));
    const Vertex v = bit + 1;
    const std::uint64_t vb = std::uint64_t{1} << v;
    const auto deg = static_cast<std::int64_t>(g.degree(v));
    if (x & vb) {
      x &= ~vb;
      cut += 2 * std::popcount(g.neighbor_mask(v) & x) - deg;
      vol -= static_cast<std::uint64_t>(deg);
    } else {
      cut += deg - 2 * std::popcount(g.neighbor_mask(v) & x);
      x |= vb;
      vol += static_cast<std::uint64_t>(deg);
    }
    consider();
  }

  rep.argmin = VertexSubset::from_mask(n, best_mask);
  rep.cut_edges = best_cut;
  rep.vol_x = volume(g, rep.argmin);
  rep.vol_xbar = total - rep.vol_x;
  rep.phi = Rational(static_cast<std::int64_t>(best_cut),
                     static_cast<std::int64_t>(best_den));
  return rep;
}

bool induces_connected(const Graph& g, std::uint64_t mask) noexcept {
  if (mask == 0) return false;
  std::uint64_t reached = mask & (~mask + 1);
  std::uint64_t frontier = reached;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbor_mask(static_cast<Vertex>(std::countr_zero(f)));
    }
    next &= mask & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == mask;
}

std::vector<VertexSubset> connected_k_subsets(const Graph& g, std::size_t k) {
  const std::size_t n = g.n();
  if (n > kSubsetEnumerationMaxN) {
    throw SizeLimitError("n exceeds subset-enumeration guard (" +
                         std::to_string(kSubsetEnumerationMaxN) + ")");
  }
  if (k < 1 || k > n) throw DomainError("k must lie in [1, n]");
  std::vector<VertexSubset> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  // Gosper's hack walks k-subsets in increasing numeric order.
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
    if (induces_connected(g, s)) out.push_back(VertexSubset::from_mask(n, s));
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

}  // namespace rso
