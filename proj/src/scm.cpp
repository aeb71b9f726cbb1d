#include "opgb/scm.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "opgb/division.hpp"

namespace opgb {

namespace {

void check_chain(const std::vector<int>& chain, int n, const char* which) {
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int e : chain) {
    if (e < 1 || e > n) throw std::invalid_argument(std::string(which) + ": element out of range");
    if (seen[e]) throw std::invalid_argument(std::string(which) + ": repeated element");
    seen[e] = 1;
  }
}

}  // namespace

std::vector<Permutation> linear_extensions(const TwoChainPoset& poset) {
  int n = poset.n;
  if (n < 0) throw std::invalid_argument("linear_extensions: negative ground set");
  check_chain(poset.chain_a, n, "chain_a");
  check_chain(poset.chain_b, n, "chain_b");

  std::vector<char> on_a(static_cast<size_t>(n) + 1, 0), on_b(static_cast<size_t>(n) + 1, 0);
  for (int e : poset.chain_a) on_a[e] = 1;
  for (int e : poset.chain_b) on_b[e] = 1;

  std::vector<int> label(static_cast<size_t>(n) + 1, 0);
  size_t ia = 0, ib = 0;
  std::vector<Permutation> out;

  // Assign labels 1..n in increasing order; an element may receive the next
  // label once every chain predecessor it has is already labeled, i.e. once it
  // is the current head of each chain containing it.
  std::function<void(int)> assign = [&](int next) {
    if (next > n) {
      out.push_back(Permutation{std::vector<int>(label.begin() + 1, label.end())});
      return;
    }
    for (int e = 1; e <= n; ++e) {
      if (label[e] != 0) continue;
      bool ready_a = !on_a[e] || (ia < poset.chain_a.size() && poset.chain_a[ia] == e);
      bool ready_b = !on_b[e] || (ib < poset.chain_b.size() && poset.chain_b[ib] == e);
      if (!ready_a || !ready_b) continue;
      size_t save_a = ia, save_b = ib;
      label[e] = next;
      if (on_a[e]) ++ia;
      if (on_b[e]) ++ib;
      assign(next + 1);
      label[e] = 0;
      ia = save_a;
      ib = save_b;
    }
  };
  assign(1);

  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Builds the superposed tree shape for one placement of `inner` inside
// `outer`. Leaves are labeled by planar position (assigned left to right), so
// the minimum label of any shape subtree is the position of its leftmost
// leaf. For each leaf slot of either factor the builder records the leftmost
// position of the shape subtree hanging there.
struct ShapeBuilder {
  int next = 1;
  std::vector<int> outer_cut;  // outer leaf label -> leftmost shape position
  std::vector<int> inner_cut;  // inner leaf label -> leftmost shape position

  ShapeBuilder(int outer_arity, int inner_arity)
      : outer_cut(static_cast<size_t>(outer_arity) + 1, 0),
        inner_cut(static_cast<size_t>(inner_arity) + 1, 0) {}

  TreeMonomial copy_as_shape(const TreeMonomial& t, std::vector<int>& cuts) {
    if (t.is_leaf()) {
      cuts[t.leaf_label()] = next;
      return TreeMonomial::leaf(next++);
    }
    std::vector<TreeMonomial> children;
    children.reserve(t.children().size());
    for (const auto& c : t.children()) children.push_back(copy_as_shape(c, cuts));
    return TreeMonomial::vertex(t.generator(), std::move(children));
  }

  // Merge the two subtrees rooted at a shared vertex. Child pairing is
  // positional: at any vertex both occurrences share, the i-th child branch
  // of the multiple corresponds to the i-th child of each factor.
  std::optional<TreeMonomial> overlay(const TreeMonomial& a, const TreeMonomial& b) {
    if (a.is_leaf() && b.is_leaf()) {
      outer_cut[a.leaf_label()] = next;
      inner_cut[b.leaf_label()] = next;
      return TreeMonomial::leaf(next++);
    }
    if (b.is_leaf()) {
      int leftmost = next;
      TreeMonomial sub = copy_as_shape(a, outer_cut);
      inner_cut[b.leaf_label()] = leftmost;
      return sub;
    }
    if (a.is_leaf()) {
      int leftmost = next;
      TreeMonomial sub = copy_as_shape(b, inner_cut);
      outer_cut[a.leaf_label()] = leftmost;
      return sub;
    }
    if (a.generator() != b.generator()) return std::nullopt;
    std::vector<TreeMonomial> children;
    children.reserve(a.children().size());
    for (size_t i = 0; i < a.children().size(); ++i) {
      auto c = overlay(a.children()[i], b.children()[i]);
      if (!c) return std::nullopt;
      children.push_back(std::move(*c));
    }
    return TreeMonomial::vertex(a.generator(), std::move(children));
  }

  // Copy outer down to the placement vertex, then overlay inner there.
  std::optional<TreeMonomial> build(const TreeMonomial& outer, const TreeMonomial& inner,
                                    const Path& at, size_t depth) {
    if (depth == at.size()) return overlay(outer, inner);
    std::vector<TreeMonomial> children;
    children.reserve(outer.children().size());
    for (size_t i = 0; i < outer.children().size(); ++i) {
      if (static_cast<int>(i) == at[depth]) {
        auto c = build(outer.children()[i], inner, at, depth + 1);
        if (!c) return std::nullopt;
        children.push_back(std::move(*c));
      } else {
        children.push_back(copy_as_shape(outer.children()[i], outer_cut));
      }
    }
    return TreeMonomial::vertex(outer.generator(), std::move(children));
  }
};

void collect_vertex_paths(const TreeMonomial& t, Path& current, std::vector<Path>& out) {
  if (t.is_leaf()) return;
  out.push_back(current);
  for (size_t i = 0; i < t.children().size(); ++i) {
    current.push_back(static_cast<int>(i));
    collect_vertex_paths(t.children()[i], current, out);
    current.pop_back();
  }
}

// All superpositions with `outer`'s occurrence containing the root of the
// multiple and `inner`'s occurrence rooted at some vertex of `outer`. Every
// vertex of the shape comes from one of the factors, so the two occurrences
// cover the multiple, and the shared vertex makes its weight strictly smaller
// than the weight sum. Leaf labelings are exactly the linear extensions of
// two chains: for each factor, the leftmost leaf positions of its argument
// subtrees must carry increasing labels in the order of the factor's own leaf
// labels. That forces both occurrences to collapse correctly and, because
// every vertex of the multiple lies in one of them, also forces every
// labeling produced here to be canonical.
void superpose_oriented(const TreeMonomial& outer, const TreeMonomial& inner, bool swap_roles,
                        std::vector<SmallCommonMultiple>& out) {
  std::vector<Path> paths;
  Path current;
  collect_vertex_paths(outer, current, paths);
  for (const auto& p : paths) {
    ShapeBuilder builder(outer.arity(), inner.arity());
    auto shape = builder.build(outer, inner, p, 0);
    if (!shape) continue;
    int n = builder.next - 1;
    TwoChainPoset poset{n, std::vector<int>(builder.outer_cut.begin() + 1, builder.outer_cut.end()),
                        std::vector<int>(builder.inner_cut.begin() + 1, builder.inner_cut.end())};
    for (const auto& extension : linear_extensions(poset)) {
      TreeMonomial multiple = relabel_leaves(*shape, extension);
      auto emb_outer = embedding_at(multiple, outer, {});
      auto emb_inner = embedding_at(multiple, inner, p);
      if (!emb_outer || !emb_inner)
        throw std::logic_error("small_common_multiples: constructed multiple is not divisible");
      if (swap_roles)
        out.push_back(SmallCommonMultiple{std::move(multiple), std::move(*emb_inner),
                                          std::move(*emb_outer)});
      else
        out.push_back(SmallCommonMultiple{std::move(multiple), std::move(*emb_outer),
                                          std::move(*emb_inner)});
    }
  }
}

bool record_less(const SmallCommonMultiple& x, const SmallCommonMultiple& y) {
  if (int c = structural_compare(x.multiple, y.multiple); c != 0) return c < 0;
  if (x.emb_a.root_path != y.emb_a.root_path) return x.emb_a.root_path < y.emb_a.root_path;
  return x.emb_b.root_path < y.emb_b.root_path;
}

}  // namespace

std::vector<SmallCommonMultiple> small_common_multiples(const TreeMonomial& alpha,
                                                        const TreeMonomial& beta) {
  if (!is_shuffle_monomial(alpha) || !is_shuffle_monomial(beta))
    throw std::invalid_argument("small_common_multiples: inputs must be canonical tree monomials");

  std::vector<SmallCommonMultiple> records;
  superpose_oriented(alpha, beta, false, records);
  superpose_oriented(beta, alpha, true, records);

  if (alpha == beta) {
    records.erase(std::remove_if(records.begin(), records.end(),
                                 [](const SmallCommonMultiple& r) { return r.emb_a == r.emb_b; }),
                  records.end());
  }

  std::sort(records.begin(), records.end(), record_less);
  records.erase(std::unique(records.begin(), records.end()), records.end());
  return records;
}

}  // namespace opgb
