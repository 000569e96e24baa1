#include "rso/exposure.hpp"

#include <algorithm>
#include <bit>

#include "rso/errors.hpp"

namespace rso {

std::size_t ExposureSequence::ell() const noexcept {
  return 1 + static_cast<std::size_t>(std::count(pi.begin(), pi.end(), 0u));
}

std::size_t ExposureSequence::p() const noexcept {
  return static_cast<std::size_t>(std::count(pi.begin(), pi.end(), 1u));
}

bool ExposureSequence::valid() const noexcept {
  if (k < 1 || pi.size() != k - 1) return false;
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j < pi.size(); ++j) {
    sum += pi[j];
    if (sum < j + 1) return false;
  }
  return sum == k - 1;
}

std::string ExposureSequence::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pi[i]);
  }
  return out + ")";
}

std::size_t RootedTreeShape::leaf_count() const {
  std::vector<bool> has_child(parent.size(), false);
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (parent[i] != kRoot) has_child[static_cast<std::size_t>(parent[i])] = true;
  }
  return static_cast<std::size_t>(std::count(has_child.begin(), has_child.end(), false));
}

namespace {

void enumerate_from(ExposureSequence& s, std::size_t j, std::uint32_t sum,
                    const std::function<void(const ExposureSequence&)>& visit) {
  const auto len = static_cast<std::uint32_t>(s.k - 1);
  if (j == len) {
    visit(s);
    return;
  }
  const std::uint32_t remaining = len - sum;
  if (j + 1 == len) {
    s.pi[j] = remaining;
    visit(s);
    return;
  }
  const std::uint32_t need = static_cast<std::uint32_t>(j + 1);
  const std::uint32_t lo = need > sum ? need - sum : 0;
  for (std::uint32_t v = remaining + 1; v-- > lo;) {
    s.pi[j] = v;
    enumerate_from(s, j + 1, sum + v, visit);
  }
}

void require_valid(const ExposureSequence& s) {
  if (!s.valid()) throw DomainError("invalid exposure sequence " + s.str());
}

}  // namespace

void for_each_exposure_sequence(std::size_t k,
                                const std::function<void(const ExposureSequence&)>& visit) {
  if (k < 2 || k > kExposureMaxK) throw DomainError("exposure enumeration needs 2 <= k <= 14");
  ExposureSequence s;
  s.k = k;
  s.pi.assign(k - 1, 0);
  enumerate_from(s, 0, 0, visit);
}

std::vector<ExposureSequence> enumerate_exposure_sequences(std::size_t k) {
  std::vector<ExposureSequence> out;
  for_each_exposure_sequence(k, [&](const ExposureSequence& s) { out.push_back(s); });
  return out;
}

std::uint64_t catalan(std::size_t j) {
  if (j > 30) throw DomainError("catalan guard is j <= 30");
  std::uint64_t c = 1;
  // c_{i+1} = c_i * 2(2i+1) / (i+2), exact at every step.
  for (std::uint64_t i = 0; i < j; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

ExposureSequence tree_to_sequence(const RootedTreeShape& t) {
  const std::size_t k = t.size();
  if (k < 1) throw DomainError("empty tree");
  std::vector<std::vector<std::size_t>> children(k);
  std::size_t root = k;
  for (std::size_t i = 0; i < k; ++i) {
    const auto p = t.parent[i];
    if (p == RootedTreeShape::kRoot) {
      if (root != k) throw DomainError("tree has more than one root");
      root = i;
    } else if (p < 0 || static_cast<std::size_t>(p) >= k || static_cast<std::size_t>(p) == i) {
      throw DomainError("tree parent out of range at vertex " + std::to_string(i));
    } else {
      children[static_cast<std::size_t>(p)].push_back(i);  // already in label order
    }
  }
  if (root == k) throw DomainError("tree has no root");

  std::vector<std::size_t> order{root};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (auto c : children[order[head]]) order.push_back(c);
  }
  if (order.size() != k) throw DomainError("tree is not connected to its root");

  ExposureSequence s;
  s.k = k;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    s.pi.push_back(static_cast<std::uint32_t>(children[order[i]].size()));
  }
  return s;
}

RootedTreeShape sequence_to_shape(const ExposureSequence& s) {
  require_valid(s);
  RootedTreeShape t;
  t.parent.assign(s.k, RootedTreeShape::kRoot);
  std::size_t next = 1;
  for (std::size_t i = 0; i < s.pi.size(); ++i) {
    for (std::uint32_t c = 0; c < s.pi[i]; ++c) t.parent[next++] = static_cast<std::int64_t>(i);
  }
  return t;
}

std::string sequence_to_dyck(const ExposureSequence& s) {
  require_valid(s);
  std::string path;
  for (auto v : s.pi) {
    path.append(v, 'E');
    path += 'N';
  }
  return path;
}

bool dyck_path_valid(const std::string& path) {
  long east = 0, north = 0;
  for (char c : path) {
    if (c == 'E') ++east;
    else if (c == 'N') ++north;
    else return false;
    if (north > east) return false;
  }
  return east == north;
}

LemmaCheck lemma_checks(const ExposureSequence& s) {
  require_valid(s);
  LemmaCheck r;
  for (auto v : s.pi) {
    if (v >= 2) r.sum_big += v;
  }
  const auto k = s.k, p = s.p(), ell = s.ell();
  r.ok1 = 2 * (p + ell) >= k;
  r.ok2 = r.sum_big < k - p;
  r.identity = r.sum_big == k - 1 - p;
  return r;
}

namespace {

struct EmbeddingSearch {
  const Graph& g;
  std::size_t k;
  std::uint64_t tuples = 0;
  std::vector<std::uint64_t> realized;

  // order holds the breadth-first vertex list so far; vertex order[i] is
  // about to choose its children.
  void grow(std::vector<Vertex>& order, std::size_t i, std::uint64_t in_tree) {
    if (order.size() == k) {
      ++tuples;
      realized.push_back(in_tree);
      return;
    }
    if (i == order.size()) return;  // queue exhausted before reaching k
    const std::uint64_t avail = g.neighbor_mask(order[i]) & ~in_tree;
    const std::size_t room = k - order.size();
    // Every subset of the available neighbours with at most `room` members.
    for (std::uint64_t sub = avail;; sub = (sub - 1) & avail) {
      if (static_cast<std::size_t>(std::popcount(sub)) <= room) {
        const auto before = order.size();
        for (std::uint64_t b = sub; b; b &= b - 1) {
          order.push_back(static_cast<Vertex>(std::countr_zero(b)));
        }
        grow(order, i + 1, in_tree | sub);
        order.resize(before);
      }
      if (sub == 0) break;
    }
  }
};

}  // namespace

ExposureEmbeddings count_exposure_embeddings(const Graph& g, std::size_t k) {
  if (g.n() > kSubsetEnumerationMaxN) {
    throw SizeLimitError("exposure embedding count needs n <= 24");
  }
  if (k < 1 || k > g.n()) throw DomainError("exposure embedding count needs 1 <= k <= n");
  EmbeddingSearch search{g, k, 0, {}};
  std::vector<Vertex> order;
  for (Vertex r = 0; r < g.n(); ++r) {
    order.assign(1, r);
    search.grow(order, 0, std::uint64_t{1} << r);
  }
  auto& sets = search.realized;
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return {search.tuples, std::move(sets)};
}

}  // namespace rso
