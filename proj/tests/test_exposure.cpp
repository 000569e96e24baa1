#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rso/errors.hpp"
#include "rso/exposure.hpp"
#include "rso/generators.hpp"

using namespace rso;

namespace {

ExposureSequence seq(std::vector<std::uint32_t> pi) {
  return ExposureSequence{pi.size() + 1, std::move(pi)};
}

// An 8-vertex tree, 1-based labels shifted to 0-based:
// 1 -> 2, 2 -> {3, 4}, 4 -> {5, 6, 7}, 7 -> 8.
RootedTreeShape figure_tree() {
  return RootedTreeShape{{RootedTreeShape::kRoot, 0, 1, 1, 3, 3, 3, 6}};
}

}  // namespace

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  CHECK(catalan(11) == 58786);
  CHECK(catalan(30) == 3814986502092304ull);
  CHECK_THROWS_AS(catalan(31), DomainError);
}

TEST_CASE("small enumerations in order") {
  const auto k2 = enumerate_exposure_sequences(2);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].pi == std::vector<std::uint32_t>{1});
  const auto k3 = enumerate_exposure_sequences(3);
  REQUIRE(k3.size() == 2);
  CHECK(k3[0].pi == std::vector<std::uint32_t>{2, 0});
  CHECK(k3[1].pi == std::vector<std::uint32_t>{1, 1});
  const auto k4 = enumerate_exposure_sequences(4);
  const std::vector<std::vector<std::uint32_t>> want{
      {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}};
  REQUIRE(k4.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(k4[i].pi == want[i]);
  CHECK_THROWS_AS(enumerate_exposure_sequences(1), DomainError);
  CHECK_THROWS_AS(enumerate_exposure_sequences(15), DomainError);
}

TEST_CASE("enumeration counts, validity and distinctness") {
  for (std::size_t k = 2; k <= 10; ++k) {
    const auto all = enumerate_exposure_sequences(k);
    CHECK(all.size() == catalan(k - 1));
    std::set<std::vector<std::uint32_t>> distinct;
    for (const auto& s : all) {
      CHECK(s.valid());
      distinct.insert(s.pi);
    }
    CHECK(distinct.size() == all.size());
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i].pi < all[i - 1].pi);
  }
}

TEST_CASE("enumeration agrees with brute-force filtering") {
  // All compositions of k-1 into k-1 nonnegative parts, filtered by the prefix rule.
  for (std::size_t k = 2; k <= 7; ++k) {
    const std::size_t len = k - 1;
    std::size_t count = 0;
    std::vector<std::uint32_t> pi(len, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t j, std::uint32_t left) {
      if (j == len) {
        if (left == 0 && seq(pi).valid()) ++count;
        return;
      }
      for (std::uint32_t v = 0; v <= left; ++v) {
        pi[j] = v;
        rec(j + 1, left - v);
      }
    };
    rec(0, static_cast<std::uint32_t>(len));
    CHECK(count == catalan(k - 1));
  }
}

TEST_CASE("the 8-vertex example tree") {
  const auto s = tree_to_sequence(figure_tree());
  CHECK(s.pi == std::vector<std::uint32_t>{1, 2, 0, 3, 0, 0, 1});
  CHECK(s.ell() == 4);
  CHECK(s.p() == 2);
  CHECK(sequence_to_dyck(s) == "ENEENNEEENNNEN");
  const auto shape = sequence_to_shape(s);
  CHECK(shape.leaf_count() == 4);
  CHECK(tree_to_sequence(shape) == s);
  const auto l = lemma_checks(s);
  CHECK(l.sum_big == 5);
  CHECK(l.ok1);
  CHECK(l.ok2);
  CHECK(l.identity);
}

TEST_CASE("relabeling follows breadth-first order with label tie-break") {
  // Root is vertex 3; children listed out of BFS order.
  RootedTreeShape t{{3, 3, 0, RootedTreeShape::kRoot, 1}};
  // BFS: 3, then children 0, 1 (by label); 0 has child 2, 1 has child 4.
  CHECK(tree_to_sequence(t).pi == std::vector<std::uint32_t>{2, 1, 1, 0});
  CHECK_THROWS_AS(tree_to_sequence(RootedTreeShape{{RootedTreeShape::kRoot, RootedTreeShape::kRoot}}),
                  DomainError);
  CHECK_THROWS_AS(tree_to_sequence(RootedTreeShape{{RootedTreeShape::kRoot, 2, 1}}), DomainError);
  CHECK_THROWS_AS(tree_to_sequence(RootedTreeShape{{RootedTreeShape::kRoot, 7}}), DomainError);
}

TEST_CASE("stars and paths") {
  const auto star = seq({3, 0, 0});
  CHECK(tree_to_sequence(RootedTreeShape{{RootedTreeShape::kRoot, 0, 0, 0}}) == star);
  CHECK(sequence_to_shape(star).leaf_count() == 3);
  const auto ls = lemma_checks(star);
  CHECK(ls.sum_big == 3);
  CHECK(ls.ok2);
  const auto path = seq({1, 1, 1});
  CHECK(tree_to_sequence(RootedTreeShape{{RootedTreeShape::kRoot, 0, 1, 2}}) == path);
  CHECK(path.ell() == 1);
  CHECK(path.p() == 3);
  const auto lp = lemma_checks(path);
  CHECK(lp.ok1);
  CHECK(lp.sum_big == 0);
  CHECK(sequence_to_dyck(seq({1})) == "EN");
  CHECK_THROWS_AS(sequence_to_shape(seq({1, 0, 2})), DomainError);
  CHECK_THROWS_AS(lemma_checks(seq({0, 2})), DomainError);
}

TEST_CASE("roundtrip, leaves and Dyck paths up to k = 9") {
  for (std::size_t k = 2; k <= 9; ++k) {
    for_each_exposure_sequence(k, [&](const ExposureSequence& s) {
      const auto shape = sequence_to_shape(s);
      CHECK(tree_to_sequence(shape) == s);
      CHECK(shape.leaf_count() == s.ell());
      const auto d = sequence_to_dyck(s);
      CHECK(d.size() == 2 * (k - 1));
      CHECK(dyck_path_valid(d));
      // Last vertex is a leaf: nobody lists it as parent.
      for (auto p : shape.parent) CHECK(p != static_cast<std::int64_t>(k - 1));
    });
  }
  CHECK_FALSE(dyck_path_valid("NE"));
  CHECK_FALSE(dyck_path_valid("EEN"));
}

TEST_CASE("lemma holds for every sequence up to k = 10") {
  for (std::size_t k = 2; k <= 10; ++k) {
    for_each_exposure_sequence(k, [&](const ExposureSequence& s) {
      const auto l = lemma_checks(s);
      CHECK(l.ok1);
      CHECK(l.ok2);
      CHECK(l.identity);
    });
  }
}

TEST_CASE("rooted trees cover every connected k-subset") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 25; ++rep) {
    const auto g = oracle::random_connected(2 + rep % 7, 0.3, rng);
    for (std::size_t k = 1; k <= g.n(); ++k) {
      const auto conn = oracle::connected_subsets(g, k);
      const auto emb = count_exposure_embeddings(g, k);
      CHECK(emb.realized == conn);
      CHECK(emb.tuples >= conn.size());
    }
  }
  // Each (root, spanning tree of the induced subgraph) pair is produced
  // once: K4 has 16 spanning trees and 4 roots.
  CHECK(count_exposure_embeddings(complete_graph(4), 4).tuples == 64);
  CHECK(count_exposure_embeddings(path_graph(4), 2).tuples == 6);
}
