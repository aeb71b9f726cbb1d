#pragma once

#include "opgb/division.hpp"

namespace opgb {

// Two (possibly sharing elements) chains on the set {1..n}; the labelings
// compatible with a pair of divisor occurrences are exactly the linear
// extensions of such a poset.
struct TwoChainPoset {
  int n = 0;
  std::vector<int> chain_a;
  std::vector<int> chain_b;
};

// All bijective labelings extending both chains, as permutations with
// images[e-1] = label of element e, sorted lexicographically. Generated by
// peeling: the top label must go to an element that is last in every chain
// containing it. Contradictory chains yield the empty list. Every element
// must lie on at least one chain.
std::vector<Permutation> linear_extensions(const TwoChainPoset& poset);

struct SmallCommonMultiple {
  TreeMonomial multiple;  // gamma
  Embedding emb_a;        // occurrence of alpha in gamma
  Embedding emb_b;        // occurrence of beta in gamma

  bool operator==(const SmallCommonMultiple&) const = default;
};

// All small common multiples of alpha and beta: common multiples gamma with
// weight(gamma) < weight(alpha) + weight(beta) together with a pair of
// occurrences covering every vertex of gamma (one of the two is rooted at
// gamma's root). For alpha == beta the fully coincident pair of occurrences
// is excluded. Deduplicated and sorted deterministically.
std::vector<SmallCommonMultiple> small_common_multiples(const TreeMonomial& alpha,
                                                        const TreeMonomial& beta);

}  // namespace opgb
