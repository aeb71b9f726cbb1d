#include "opgb/division.hpp"

#include <algorithm>
#include <stdexcept>

namespace opgb {

HoleTree HoleTree::leaf(int label) {
  HoleTree t;
  t.label = label;
  return t;
}

HoleTree HoleTree::vertex(int gen, std::vector<HoleTree> children) {
  HoleTree t;
  t.gen = gen;
  t.children = std::move(children);
  return t;
}

HoleTree HoleTree::hole(std::vector<HoleTree> children) {
  HoleTree t;
  t.is_hole = true;
  t.children = std::move(children);
  return t;
}

namespace {

// Walks alpha and beta together from a shared root. Child pairing is forced by
// position: both planar orders sort children by minimal (sub)label, and the
// ranks the divisor relabeling assigns preserve exactly that order. Where beta
// has a leaf the ambient subtree is pruned and recorded against beta's label.
bool match(const TreeMonomial& ambient, const TreeMonomial& pattern,
           std::vector<std::pair<int, const TreeMonomial*>>& cuts) {
  if (pattern.is_leaf()) {
    cuts.emplace_back(pattern.leaf_label(), &ambient);
    return true;
  }
  if (ambient.is_leaf()) return false;
  if (ambient.generator() != pattern.generator()) return false;
  if (ambient.children().size() != pattern.children().size()) return false;
  for (size_t i = 0; i < pattern.children().size(); ++i)
    if (!match(ambient.children()[i], pattern.children()[i], cuts)) return false;
  return true;
}

// The occurrence is a divisor only if the pruned subtrees, ranked by minimal
// ambient label, stand in the order of beta's leaf labels.
bool cuts_respect_labels(std::vector<std::pair<int, const TreeMonomial*>>& cuts) {
  std::sort(cuts.begin(), cuts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  int previous = 0;
  for (const auto& [label, subtree] : cuts) {
    int m = subtree->min_leaf();
    if (m <= previous) return false;  // distinct and increasing in label order
    previous = m;
  }
  return true;
}

HoleTree to_hole_tree(const TreeMonomial& t) {
  if (t.is_leaf()) return HoleTree::leaf(t.leaf_label());
  std::vector<HoleTree> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(to_hole_tree(c));
  return HoleTree::vertex(t.generator(), std::move(children));
}

// Hole vertex with the pruned subtrees as children, in min-leaf order.
HoleTree collapsed_occurrence(const std::vector<std::pair<int, const TreeMonomial*>>& cuts) {
  std::vector<HoleTree> children;
  children.reserve(cuts.size());
  for (const auto& [label, subtree] : cuts) children.push_back(to_hole_tree(*subtree));
  return HoleTree::hole(std::move(children));
}

std::optional<HoleTree> collapse_at(const TreeMonomial& ambient, const TreeMonomial& pattern) {
  std::vector<std::pair<int, const TreeMonomial*>> cuts;
  if (!match(ambient, pattern, cuts)) return std::nullopt;
  if (!cuts_respect_labels(cuts)) return std::nullopt;  // sorts cuts by label
  // after the sort above, cuts are in beta-label order; reorder by ambient min
  std::sort(cuts.begin(), cuts.end(), [](const auto& a, const auto& b) {
    return a.second->min_leaf() < b.second->min_leaf();
  });
  return collapsed_occurrence(cuts);
}

const TreeMonomial& subtree_at(const TreeMonomial& t, const Path& path) {
  const TreeMonomial* node = &t;
  for (int i : path) {
    if (node->is_leaf() || i < 0 || static_cast<size_t>(i) >= node->children().size())
      throw std::invalid_argument("invalid path into tree");
    node = &node->children()[i];
  }
  return *node;
}

HoleTree rebuild_around(const TreeMonomial& ambient, const Path& path, size_t depth,
                        const HoleTree& replacement) {
  if (depth == path.size()) return replacement;
  std::vector<HoleTree> children;
  children.reserve(ambient.children().size());
  for (size_t i = 0; i < ambient.children().size(); ++i) {
    if (static_cast<int>(i) == path[depth])
      children.push_back(rebuild_around(ambient.children()[i], path, depth + 1, replacement));
    else
      children.push_back(to_hole_tree(ambient.children()[i]));
  }
  return HoleTree::vertex(ambient.generator(), std::move(children));
}

void vertex_paths_preorder(const TreeMonomial& t, Path& current, std::vector<Path>& out) {
  if (t.is_leaf()) return;
  out.push_back(current);
  for (size_t i = 0; i < t.children().size(); ++i) {
    current.push_back(static_cast<int>(i));
    vertex_paths_preorder(t.children()[i], current, out);
    current.pop_back();
  }
}

}  // namespace

std::optional<Embedding> rooted_embedding(const TreeMonomial& alpha, const TreeMonomial& beta) {
  auto collapsed = collapse_at(alpha, beta);
  if (!collapsed) return std::nullopt;
  return Embedding{std::move(*collapsed), beta.arity(), {}};
}

std::optional<Embedding> embedding_at(const TreeMonomial& alpha, const TreeMonomial& beta,
                                      const Path& path) {
  auto collapsed = collapse_at(subtree_at(alpha, path), beta);
  if (!collapsed) return std::nullopt;
  return Embedding{rebuild_around(alpha, path, 0, *collapsed), beta.arity(), path};
}

std::vector<Embedding> all_embeddings(const TreeMonomial& alpha, const TreeMonomial& beta) {
  std::vector<Path> paths;
  Path current;
  vertex_paths_preorder(alpha, current, paths);
  std::vector<Embedding> out;
  for (const auto& p : paths)
    if (auto e = embedding_at(alpha, beta, p)) out.push_back(std::move(*e));
  return out;
}

bool divisible_by(const TreeMonomial& alpha, const TreeMonomial& beta) {
  if (beta.weight() > alpha.weight() || beta.arity() > alpha.arity()) return false;
  std::vector<Path> paths;
  Path current;
  vertex_paths_preorder(alpha, current, paths);
  for (const auto& p : paths)
    if (collapse_at(subtree_at(alpha, p), beta)) return true;
  return false;
}

std::vector<Path> occurrence_vertex_paths(const TreeMonomial& alpha, const TreeMonomial& beta,
                                          const Path& root_path) {
  // Re-run the structural match, collecting the ambient positions the pattern
  // vertices land on.
  std::vector<Path> covered;
  struct Walker {
    std::vector<Path>& covered;
    bool operator()(const TreeMonomial& ambient, const TreeMonomial& pattern, Path& at) const {
      if (pattern.is_leaf()) return true;
      if (ambient.is_leaf() || ambient.generator() != pattern.generator()) return false;
      covered.push_back(at);
      for (size_t i = 0; i < pattern.children().size(); ++i) {
        at.push_back(static_cast<int>(i));
        bool ok = (*this)(ambient.children()[i], pattern.children()[i], at);
        at.pop_back();
        if (!ok) return false;
      }
      return true;
    }
  };
  Path at = root_path;
  if (!Walker{covered}(subtree_at(alpha, root_path), beta, at))
    throw std::invalid_argument("occurrence_vertex_paths: no occurrence at the given path");
  return covered;
}

namespace {

TreeMonomial hole_to_monomial(const HoleTree& t) {
  if (t.label > 0) return TreeMonomial::leaf(t.label);
  if (t.is_hole) throw std::logic_error("hole_to_monomial: unexpected hole");
  std::vector<TreeMonomial> children;
  children.reserve(t.children.size());
  for (const auto& c : t.children) children.push_back(hole_to_monomial(c));
  return TreeMonomial::vertex(t.gen, std::move(children));
}

// gamma with leaf j replaced by the j-th hole child (both in min-leaf order,
// so the result stays canonical).
TreeMonomial fill_gamma(const TreeMonomial& gamma, const std::vector<TreeMonomial>& plugs) {
  if (gamma.is_leaf()) return plugs[gamma.leaf_label() - 1];
  std::vector<TreeMonomial> children;
  children.reserve(gamma.children().size());
  for (const auto& c : gamma.children()) children.push_back(fill_gamma(c, plugs));
  return TreeMonomial::vertex(gamma.generator(), std::move(children));
}

TreeMonomial reconstruct_walk(const HoleTree& t, const TreeMonomial& gamma) {
  if (t.is_hole) {
    std::vector<TreeMonomial> plugs;
    plugs.reserve(t.children.size());
    for (const auto& c : t.children) plugs.push_back(hole_to_monomial(c));
    return fill_gamma(gamma, plugs);
  }
  if (t.label > 0) return TreeMonomial::leaf(t.label);
  std::vector<TreeMonomial> children;
  children.reserve(t.children.size());
  for (const auto& c : t.children) {
    children.push_back(reconstruct_walk(c, gamma));
  }
  return TreeMonomial::vertex(t.gen, std::move(children));
}

}  // namespace

TreeMonomial reconstruct(const Embedding& e, const TreeMonomial& gamma) {
  if (gamma.arity() != e.hole_arity)
    throw std::invalid_argument("reconstruct: arity does not match the hole");
  return reconstruct_walk(e.tree, gamma);
}

OperadPolynomial substitute(const Embedding& e, const OperadPolynomial& g) {
  std::vector<std::pair<TreeMonomial, Rational>> terms;
  terms.reserve(g.terms().size());
  for (const auto& t : g.terms()) terms.emplace_back(reconstruct(e, t.monomial), t.coefficient);
  return OperadPolynomial::from_terms(g.spec(), std::move(terms));
}

}  // namespace opgb
