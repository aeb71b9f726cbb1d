#include <algorithm>
#include <set>

#include "doctest.h"
#include "testutil.hpp"

using namespace opgb;
using testutil::brute_binary_trees;
using testutil::free_dimension;

namespace {

const Alphabet kBinary{{"b", 2, 0}};
const Alphabet kMixed{{"m", 2, 0}, {"t", 3, 1}};
const Alphabet kTwoBinary{{"u", 2, 0}, {"v", 2, 1}};

TreeMonomial tree(const std::string& text, const Alphabet& a = kBinary) {
  return parse_tree(text, a);
}

}  // namespace

TEST_SUITE_BEGIN("trees");

TEST_CASE("leaves and vertices") {
  TreeMonomial l = TreeMonomial::leaf(3);
  CHECK(l.is_leaf());
  CHECK(l.leaf_label() == 3);
  CHECK(l.arity() == 1);
  CHECK(l.weight() == 0);
  CHECK(l.min_leaf() == 3);
  CHECK_THROWS_AS(l.generator(), std::logic_error);

  TreeMonomial t = tree("b(b(1,2),3)");
  CHECK_FALSE(t.is_leaf());
  CHECK(t.generator() == 0);
  CHECK(t.arity() == 3);
  CHECK(t.weight() == 2);
  CHECK(t.min_leaf() == 1);
  CHECK(t.children().size() == 2);
  CHECK_THROWS_AS(t.leaf_label(), std::logic_error);
  CHECK_THROWS_AS(TreeMonomial::leaf(0), std::invalid_argument);
  CHECK_THROWS_AS(TreeMonomial::vertex(-1, {}), std::invalid_argument);
}

TEST_CASE("corolla") {
  // Labels need not be 1..n: corollas also serve as fragments of larger trees.
  TreeMonomial expected = TreeMonomial::vertex(
      1, {TreeMonomial::leaf(2), TreeMonomial::leaf(4), TreeMonomial::leaf(7)});
  CHECK(corolla(kMixed[1], {2, 4, 7}) == expected);
  CHECK(corolla(kBinary[0], {1, 2}) == tree("b(1,2)"));
  CHECK_THROWS_AS(corolla(kBinary[0], {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("is_shuffle_monomial") {
  CHECK(is_shuffle_monomial(tree("b(b(1,3),2)")));
  CHECK(is_shuffle_monomial(TreeMonomial::leaf(1)));
  // Children out of min-leaf order: well-formed but not canonical.
  TreeMonomial bad =
      TreeMonomial::vertex(0, {TreeMonomial::leaf(2), TreeMonomial::leaf(1)});
  CHECK_FALSE(is_shuffle_monomial(bad));
  // Leaf labels must be exactly 1..arity.
  CHECK_THROWS_AS(is_shuffle_monomial(TreeMonomial::leaf(2)), std::invalid_argument);
  TreeMonomial dup = TreeMonomial::vertex(0, {TreeMonomial::leaf(1), TreeMonomial::leaf(1)});
  CHECK_THROWS_AS(is_shuffle_monomial(dup), std::invalid_argument);
}

TEST_CASE("structural_compare is a strict total order on a pool") {
  const auto& pool = testutil::monomial_pool(kMixed, 4);
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = 0; j < pool.size(); ++j) {
      int c = structural_compare(pool[i], pool[j]);
      CHECK(c == -structural_compare(pool[j], pool[i]));
      CHECK((c == 0) == (i == j));
    }
}

TEST_CASE("graft shifts argument labels block by block") {
  TreeMonomial root = tree("b(1,2)");
  CHECK(graft(root, {tree("b(1,2)"), tree("b(1,2)")}) == tree("b(b(1,2),b(3,4))"));
  CHECK(graft(root, {TreeMonomial::leaf(1), tree("b(1,2)")}) == tree("b(1,b(2,3))"));
  CHECK_THROWS_AS(graft(root, {tree("b(1,2)")}), std::invalid_argument);
}

TEST_CASE("relabel_leaves keeps the planar structure") {
  TreeMonomial t = tree("b(b(1,2),3)");
  TreeMonomial r = relabel_leaves(t, Permutation({2, 1, 3}));
  CHECK(r == TreeMonomial::vertex(0, {TreeMonomial::vertex(0, {TreeMonomial::leaf(2),
                                                               TreeMonomial::leaf(1)}),
                                      TreeMonomial::leaf(3)}));
  CHECK_FALSE(is_shuffle_monomial(r));
}

TEST_CASE("shuffle_compose") {
  TreeMonomial root = tree("b(1,2)");
  std::vector<TreeMonomial> args{tree("b(1,2)"), tree("b(1,2)")};
  CHECK(shuffle_compose(root, args, Permutation({1, 3, 2, 4})) == tree("b(b(1,3),b(2,4))"));
  CHECK(shuffle_compose(root, args, Permutation({1, 2, 3, 4})) == tree("b(b(1,2),b(3,4))"));
  // Not a shuffle of type (2,2): the second block's lead is below the first's.
  CHECK_THROWS_AS(shuffle_compose(root, args, Permutation({3, 4, 1, 2})), std::invalid_argument);
}

TEST_CASE("divisor_monomial renames labels by rank") {
  Alphabet a = kBinary;
  TreeMonomial sub = TreeMonomial::vertex(
      0, {TreeMonomial::vertex(0, {TreeMonomial::leaf(2), TreeMonomial::leaf(5)}),
          TreeMonomial::leaf(7)});
  CHECK(divisor_monomial(sub) == tree("b(b(1,2),3)", a));
}

TEST_CASE("binary enumeration counts follow the double factorial") {
  const long expected[] = {1, 1, 3, 15, 105, 945, 10395};  // (2n-3)!! for n = 1..7
  for (int n = 1; n <= 7; ++n)
    CHECK(enumerate_monomials(kBinary, n).size() == static_cast<size_t>(expected[n - 1]));
}

TEST_CASE("binary enumeration equals the abstract-tree oracle up to arity 6") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> labels(static_cast<size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    auto brute = brute_binary_trees(labels, 0);
    auto fast = enumerate_monomials(kBinary, n);
    REQUIRE(brute.size() == fast.size());
    std::set<TreeMonomial, StructuralLess> brute_set(brute.begin(), brute.end());
    REQUIRE(brute_set.size() == brute.size());
    for (const auto& t : fast) CHECK(brute_set.count(t) == 1);
  }
}

TEST_CASE("enumeration over mixed alphabets matches the partition recursion") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(mpz_class(static_cast<long>(enumerate_monomials(kMixed, n).size())) ==
          free_dimension(kMixed, n));
    if (n <= 5)
      CHECK(mpz_class(static_cast<long>(enumerate_monomials(kTwoBinary, n).size())) ==
            free_dimension(kTwoBinary, n));
  }
  // Two binary generators: 2^(n-1) colorings of (2n-3)!! shapes.
  CHECK(enumerate_monomials(kTwoBinary, 4).size() == 15 * 8);
}

TEST_CASE("enumeration output is canonical, distinct, and structurally sorted") {
  auto all = enumerate_monomials(kMixed, 5);
  for (const auto& t : all) {
    CHECK(is_shuffle_monomial(t));
    CHECK(t.arity() == 5);
  }
  CHECK(std::is_sorted(all.begin(), all.end(), StructuralLess{}));
  auto dup = std::adjacent_find(all.begin(), all.end(),
                                [](const auto& x, const auto& y) { return x == y; });
  CHECK(dup == all.end());
}

TEST_CASE("enumeration rejects arity-1 generators") {
  Alphabet unary{{"e", 1, 0}};
  CHECK_THROWS_AS(enumerate_monomials(unary, 2), std::invalid_argument);
}

TEST_SUITE_END();
