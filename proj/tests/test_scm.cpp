#include <algorithm>

#include "doctest.h"
#include "testutil.hpp"

using namespace opgb;
using testutil::Rng;
using testutil::ScmTriple;

namespace {

const Alphabet kCom{{"m", 2, 0}};
const Alphabet kMixed{{"m", 2, 0}, {"t", 3, 1}};

TreeMonomial tree(const std::string& text, const Alphabet& a = kCom) {
  return parse_tree(text, a);
}

}  // namespace

TEST_SUITE_BEGIN("scm");

TEST_CASE("linear extensions of two chains") {
  // 1 < 2 on one chain, 1 < 3 on the other: 2 and 3 stay incomparable.
  auto ext = linear_extensions({3, {1, 2}, {1, 3}});
  REQUIRE(ext.size() == 2);
  CHECK(ext[0].images == std::vector<int>{1, 2, 3});
  CHECK(ext[1].images == std::vector<int>{1, 3, 2});

  // Fully determined order.
  ext = linear_extensions({3, {1, 2, 3}, {2, 3}});
  REQUIRE(ext.size() == 1);
  CHECK(ext[0].images == std::vector<int>{1, 2, 3});

  // Contradictory chains admit nothing.
  CHECK(linear_extensions({2, {1, 2}, {2, 1}}).empty());

  // Uncovered elements float freely.
  CHECK(linear_extensions({3, {1, 2}, {}}).size() == 3);

  CHECK_THROWS_AS(linear_extensions({2, {1, 1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(linear_extensions({2, {3}, {}}), std::invalid_argument);
}

TEST_CASE("left comb against itself") {
  TreeMonomial comb = tree("m(m(1,2),3)");
  auto records = small_common_multiples(comb, comb);
  REQUIRE(records.size() == 2);
  for (const auto& r : records) {
    CHECK(format_tree(r.multiple, kCom) == "m(m(m(1,2),3),4)");
    CHECK(is_shuffle_monomial(r.multiple));
    // Both embeddings really land on the multiple.
    CHECK(reconstruct(r.emb_a, comb) == r.multiple);
    CHECK(reconstruct(r.emb_b, comb) == r.multiple);
  }
  CHECK(records[0].emb_a.root_path == Path{});
  CHECK(records[0].emb_b.root_path == Path{0});
  CHECK(records[1].emb_a.root_path == Path{0});
  CHECK(records[1].emb_b.root_path == Path{});
}

TEST_CASE("right comb against itself") {
  TreeMonomial comb = tree("m(1,m(2,3))");
  auto triples = testutil::scm_triples(small_common_multiples(comb, comb), kCom);
  std::vector<ScmTriple> expected{{"m(1,m(2,m(3,4)))", "2", "root"},
                                  {"m(1,m(2,m(3,4)))", "root", "2"}};
  std::sort(expected.begin(), expected.end());
  CHECK(triples == expected);
}

TEST_CASE("left comb against right comb") {
  auto triples = testutil::scm_triples(
      small_common_multiples(tree("m(m(1,2),3)"), tree("m(1,m(2,3))")), kCom);
  std::vector<ScmTriple> expected{{"m(m(1,m(2,3)),4)", "root", "1"},
                                  {"m(m(1,m(2,4)),3)", "root", "1"},
                                  {"m(m(1,2),m(3,4))", "root", "root"},
                                  {"m(1,m(m(2,3),4))", "2", "root"}};
  std::sort(expected.begin(), expected.end());
  CHECK(triples == expected);
}

TEST_CASE("corollas overlap only fully") {
  // The only common multiple below combined weight would be the corolla
  // itself, and the coincident pair is excluded for equal divisors.
  CHECK(small_common_multiples(tree("m(1,2)"), tree("m(1,2)")).empty());
  // Different generators of the same shape never share a vertex.
  Alphabet two{{"u", 2, 0}, {"v", 2, 1}};
  CHECK(small_common_multiples(tree("u(1,2)", two), tree("v(1,2)", two)).empty());
}

TEST_CASE("records are deduplicated and deterministically sorted") {
  TreeMonomial comb = tree("m(m(1,2),3)");
  auto records = small_common_multiples(comb, comb);
  auto again = small_common_multiples(comb, comb);
  CHECK(records == again);
  for (size_t i = 1; i < records.size(); ++i) CHECK_FALSE(records[i] == records[i - 1]);
}

TEST_CASE("agrees with the definition-level scan on random pairs") {
  Rng rng(881);
  const Alphabet* alphabets[] = {&kCom, &kMixed};
  for (int i = 0; i < 60; ++i) {
    const Alphabet& a = *alphabets[i % 2];
    int na = testutil::rand_int(rng, 2, 3);
    int nb = testutil::rand_int(rng, 2, std::min(7 - na, 4));
    const TreeMonomial& alpha = testutil::random_monomial(rng, a, na);
    const TreeMonomial& beta = testutil::random_monomial(rng, a, nb);
    CAPTURE(format_tree(alpha, a));
    CAPTURE(format_tree(beta, a));
    auto fast = testutil::scm_triples(small_common_multiples(alpha, beta), a);
    auto brute = testutil::brute_scm_triples(alpha, beta, a);
    CHECK(fast == brute);
  }
}

TEST_CASE("multiples stay within the weight bound and are covered") {
  Rng rng(882);
  for (int i = 0; i < 40; ++i) {
    const TreeMonomial& alpha = testutil::random_monomial(rng, kCom, testutil::rand_int(rng, 2, 4));
    const TreeMonomial& beta = testutil::random_monomial(rng, kCom, testutil::rand_int(rng, 2, 3));
    for (const auto& r : small_common_multiples(alpha, beta)) {
      CHECK(r.multiple.weight() < alpha.weight() + beta.weight());
      CHECK((r.emb_a.root_path.empty() || r.emb_b.root_path.empty()));
      auto cov = occurrence_vertex_paths(r.multiple, alpha, r.emb_a.root_path);
      auto cov_b = occurrence_vertex_paths(r.multiple, beta, r.emb_b.root_path);
      cov.insert(cov.end(), cov_b.begin(), cov_b.end());
      std::sort(cov.begin(), cov.end());
      cov.erase(std::unique(cov.begin(), cov.end()), cov.end());
      CHECK(static_cast<int>(cov.size()) == r.multiple.weight());
    }
  }
}

TEST_SUITE_END();
