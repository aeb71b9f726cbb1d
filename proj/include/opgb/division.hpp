#pragma once

#include <optional>

#include "opgb/polynomials.hpp"

namespace opgb {

using Path = std::vector<int>;  // 0-based child indices from the root

// The ambient tree of a divisor occurrence with the occurrence collapsed into
// a single "hole" vertex. The hole's children are the ambient subtrees that
// hung below the occurrence, in min-leaf order; the surrounding tree keeps its
// ambient labels.
struct HoleTree {
  int label = 0;         // >0 iff leaf
  int gen = -1;          // >=0 iff generator vertex
  bool is_hole = false;  // hole vertex (children = pruned ambient subtrees)
  std::vector<HoleTree> children;

  static HoleTree leaf(int label);
  static HoleTree vertex(int gen, std::vector<HoleTree> children);
  static HoleTree hole(std::vector<HoleTree> children);

  bool operator==(const HoleTree&) const = default;
};

struct Embedding {
  HoleTree tree;
  int hole_arity = 0;
  Path root_path;  // position of the occurrence root in the ambient tree

  bool operator==(const Embedding&) const = default;
};

// Matches beta against alpha with their roots identified: the generators and
// child positions must agree vertex by vertex, and the subtrees pruned at
// beta's leaves must rank (by minimal ambient label) exactly in beta's leaf
// order. Unique when it exists.
std::optional<Embedding> rooted_embedding(const TreeMonomial& alpha, const TreeMonomial& beta);

// rooted_embedding attempted at path inside alpha, with the surrounding tree
// rebuilt intact around the collapsed occurrence.
std::optional<Embedding> embedding_at(const TreeMonomial& alpha, const TreeMonomial& beta,
                                      const Path& path);

// One Embedding per occurrence of beta in alpha, ordered by pre-order of the
// occurrence root.
std::vector<Embedding> all_embeddings(const TreeMonomial& alpha, const TreeMonomial& beta);

// True iff beta divides alpha (some occurrence exists); early-exits.
bool divisible_by(const TreeMonomial& alpha, const TreeMonomial& beta);

// Ambient paths of the vertices covered by the occurrence of beta rooted at
// root_path; throws when there is no such occurrence.
std::vector<Path> occurrence_vertex_paths(const TreeMonomial& alpha, const TreeMonomial& beta,
                                          const Path& root_path);

// Fills the hole with gamma: leaf j of gamma receives the j-th hole child.
// Throws unless arity(gamma) == hole_arity. The result is canonical.
TreeMonomial reconstruct(const Embedding& e, const TreeMonomial& gamma);

// reconstruct applied term by term: the linear map m_{alpha,beta}.
OperadPolynomial substitute(const Embedding& e, const OperadPolynomial& g);

}  // namespace opgb
