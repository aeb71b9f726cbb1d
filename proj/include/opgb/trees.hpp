#pragma once

#include <string>
#include <vector>

#include "opgb/permutations.hpp"

namespace opgb {

// A generator of the presentation; ordinal is its index in the alphabet and is
// what tree vertices store.
struct Generator {
  std::string name;
  int arity = 0;
  int ordinal = 0;

  bool operator==(const Generator&) const = default;
};

using Alphabet = std::vector<Generator>;

// Tree monomial of the free shuffle operad: a planar rooted tree whose internal
// vertices carry generator ordinals and whose leaves carry positive labels. In
// canonical form every vertex lists its children in increasing order of their
// minimal leaf label, and a complete monomial of arity n carries each label
// 1..n exactly once. Operations that relabel leaves can produce non-canonical
// trees; is_shuffle_monomial tells them apart.
class TreeMonomial {
 public:
  TreeMonomial() = default;

  static TreeMonomial leaf(int label);
  static TreeMonomial vertex(int generator, std::vector<TreeMonomial> children);

  bool is_leaf() const { return label_ > 0; }
  int leaf_label() const;  // throws unless leaf
  int generator() const;   // throws unless vertex
  const std::vector<TreeMonomial>& children() const { return children_; }

  int arity() const;     // number of leaves
  int weight() const;    // number of internal vertices
  int min_leaf() const;  // smallest leaf label, by full traversal

  bool operator==(const TreeMonomial&) const = default;

 private:
  int label_ = 0;  // >0 iff leaf
  int gen_ = -1;   // >=0 iff vertex
  std::vector<TreeMonomial> children_;
};

// Deterministic total order for listings (not the monomial ordering): vertices
// before leaves, then generator ordinal, then children lexicographically;
// leaves by label. Returns -1/0/+1.
int structural_compare(const TreeMonomial& a, const TreeMonomial& b);

struct StructuralLess {
  bool operator()(const TreeMonomial& a, const TreeMonomial& b) const {
    return structural_compare(a, b) < 0;
  }
};

// g applied directly to leaves with the given pairwise distinct labels.
TreeMonomial corolla(const Generator& g, const std::vector<int>& labels);

// True iff the labels are a bijection onto {1..arity} and every vertex lists
// its children in increasing min-leaf order. Throws std::invalid_argument on
// malformed trees (duplicate or out-of-range labels); returns false for merely
// non-canonical ones.
bool is_shuffle_monomial(const TreeMonomial& t);

// Nonsymmetric composition: leaf i of root is replaced by args[i-1] with its
// labels shifted by the sum of the arities to its left. The output is not
// re-canonicalized (it happens to be canonical because the shift is monotone).
TreeMonomial graft(const TreeMonomial& root, const std::vector<TreeMonomial>& args);

// Applies sigma to the leaf labels (label l becomes sigma(l)); the planar
// structure is untouched, so the result may be non-canonical.
TreeMonomial relabel_leaves(const TreeMonomial& t, const Permutation& sigma);

// graft followed by relabeling with a shuffle permutation of the argument
// arities; throws when sigma is not a shuffle of that type.
TreeMonomial shuffle_compose(const TreeMonomial& root, const std::vector<TreeMonomial>& args,
                             const Permutation& sigma);

// Renumbers the leaves by the rank of their labels. Used to read off the
// divisor monomial of a subtree occurrence whose leaves carry the minimal
// ambient labels of the subtrees below the cuts.
TreeMonomial divisor_monomial(const TreeMonomial& sub);

// All tree monomials of the given arity over the alphabet, in structural
// order. Requires every generator to have arity >= 2; a generator of arity 1
// would make the set infinite.
std::vector<TreeMonomial> enumerate_monomials(const Alphabet& generators, int n);

}  // namespace opgb
