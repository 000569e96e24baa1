#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rso/graph.hpp"

namespace rso {

/// Child counts pi_1..pi_{k-1} of a rooted k-vertex tree in breadth-first
/// order. pi_k = 0 is implicit and not stored.
struct ExposureSequence {
  std::size_t k = 0;
  std::vector<std::uint32_t> pi;

  /// 1 + number of zero entries.
  std::size_t ell() const noexcept;
  /// Number of entries equal to one.
  std::size_t p() const noexcept;
  bool valid() const noexcept;
  std::string str() const;

  friend bool operator==(const ExposureSequence&, const ExposureSequence&) = default;
};

/// parent[0] == kRoot; otherwise parent[i] is the parent of vertex i.
struct RootedTreeShape {
  static constexpr std::int64_t kRoot = -1;
  std::vector<std::int64_t> parent;

  std::size_t size() const noexcept { return parent.size(); }
  std::size_t leaf_count() const;
};

inline constexpr std::size_t kExposureMaxK = 14;

/// Descending lexicographic order, e.g. k=4 gives (3,0,0) first and
/// (1,1,1) last. Requires 2 <= k <= 14.
std::vector<ExposureSequence> enumerate_exposure_sequences(std::size_t k);
void for_each_exposure_sequence(std::size_t k,
                                const std::function<void(const ExposureSequence&)>& visit);

/// Exact (1/(j+1)) C(2j, j) for 0 <= j <= 30.
std::uint64_t catalan(std::size_t j);

/// Accepts any labeling with exactly one root; vertices are relabeled in
/// breadth-first order with siblings taken in increasing original label.
ExposureSequence tree_to_sequence(const RootedTreeShape& t);
/// The tree in breadth-first labeling whose child counts are s.pi.
RootedTreeShape sequence_to_shape(const ExposureSequence& s);
/// 'E' repeated pi_i times followed by 'N', for each i.
std::string sequence_to_dyck(const ExposureSequence& s);
/// Every prefix has at least as many 'E' as 'N' steps, and the totals agree.
bool dyck_path_valid(const std::string& path);

struct LemmaCheck {
  std::uint64_t sum_big = 0;  // sum of pi_j over pi_j >= 2
  bool ok1 = false;           // p + ell >= k/2
  bool ok2 = false;           // sum_big < k - p
  bool identity = false;      // sum_big == k - 1 - p
};
LemmaCheck lemma_checks(const ExposureSequence& s);

struct ExposureEmbeddings {
  std::uint64_t tuples = 0;              // (root, breadth-first tree) pairs inside g
  std::vector<std::uint64_t> realized;   // distinct vertex sets, sorted bitmasks
};

/// Grows every breadth-first tree of k vertices from every root, letting
/// vertex v_i choose its pi_i children among neighbours not yet in the tree.
/// Requires n <= 24 and 1 <= k <= n.
ExposureEmbeddings count_exposure_embeddings(const Graph& g, std::size_t k);

}  // namespace rso
