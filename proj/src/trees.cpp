#include "opgb/trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace opgb {

TreeMonomial TreeMonomial::leaf(int label) {
  if (label < 1) throw std::invalid_argument("leaf labels must be positive");
  TreeMonomial t;
  t.label_ = label;
  return t;
}

TreeMonomial TreeMonomial::vertex(int generator, std::vector<TreeMonomial> children) {
  if (generator < 0) throw std::invalid_argument("vertex needs a generator ordinal");
  if (children.empty()) throw std::invalid_argument("vertex needs at least one child");
  TreeMonomial t;
  t.gen_ = generator;
  t.children_ = std::move(children);
  return t;
}

int TreeMonomial::leaf_label() const {
  if (!is_leaf()) throw std::logic_error("leaf_label on a vertex");
  return label_;
}

int TreeMonomial::generator() const {
  if (is_leaf() || gen_ < 0) throw std::logic_error("generator on a leaf");
  return gen_;
}

int TreeMonomial::arity() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children_) n += c.arity();
  return n;
}

int TreeMonomial::weight() const {
  if (is_leaf()) return 0;
  int w = 1;
  for (const auto& c : children_) w += c.weight();
  return w;
}

int TreeMonomial::min_leaf() const {
  if (is_leaf()) return label_;
  int m = children_.front().min_leaf();
  for (size_t i = 1; i < children_.size(); ++i) m = std::min(m, children_[i].min_leaf());
  return m;
}

int structural_compare(const TreeMonomial& a, const TreeMonomial& b) {
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? 1 : -1;  // vertices first
  if (a.is_leaf()) {
    if (a.leaf_label() != b.leaf_label()) return a.leaf_label() < b.leaf_label() ? -1 : 1;
    return 0;
  }
  if (a.generator() != b.generator()) return a.generator() < b.generator() ? -1 : 1;
  size_t n = std::min(a.children().size(), b.children().size());
  for (size_t i = 0; i < n; ++i)
    if (int c = structural_compare(a.children()[i], b.children()[i])) return c;
  if (a.children().size() != b.children().size())
    return a.children().size() < b.children().size() ? -1 : 1;
  return 0;
}

TreeMonomial corolla(const Generator& g, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != g.arity)
    throw std::invalid_argument("corolla: arity mismatch for generator " + g.name);
  std::set<int> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size())
    throw std::invalid_argument("corolla: duplicate leaf labels");
  std::vector<TreeMonomial> children;
  children.reserve(labels.size());
  for (int l : labels) children.push_back(TreeMonomial::leaf(l));
  return TreeMonomial::vertex(g.ordinal, std::move(children));
}

namespace {

void collect_leaf_labels(const TreeMonomial& t, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(t.leaf_label());
    return;
  }
  for (const auto& c : t.children()) collect_leaf_labels(c, out);
}

bool children_min_sorted(const TreeMonomial& t) {
  if (t.is_leaf()) return true;
  int previous = -1;
  for (const auto& c : t.children()) {
    int m = c.min_leaf();
    if (m <= previous) return false;
    previous = m;
    if (!children_min_sorted(c)) return false;
  }
  return true;
}

}  // namespace

bool is_shuffle_monomial(const TreeMonomial& t) {
  std::vector<int> labels;
  collect_leaf_labels(t, labels);
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("malformed tree: leaf labels are not a bijection onto 1..n");
  return children_min_sorted(t);
}

namespace {

TreeMonomial shift_labels(const TreeMonomial& t, int shift) {
  if (t.is_leaf()) return TreeMonomial::leaf(t.leaf_label() + shift);
  std::vector<TreeMonomial> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(shift_labels(c, shift));
  return TreeMonomial::vertex(t.generator(), std::move(children));
}

// Replaces leaf i by args[i-1] shifted by the sum of arities to its left.
TreeMonomial graft_walk(const TreeMonomial& t, const std::vector<TreeMonomial>& args,
                        const std::vector<int>& shifts) {
  if (t.is_leaf()) return shift_labels(args[t.leaf_label() - 1], shifts[t.leaf_label() - 1]);
  std::vector<TreeMonomial> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(graft_walk(c, args, shifts));
  return TreeMonomial::vertex(t.generator(), std::move(children));
}

}  // namespace

TreeMonomial graft(const TreeMonomial& root, const std::vector<TreeMonomial>& args) {
  int n = root.arity();
  if (static_cast<int>(args.size()) != n)
    throw std::invalid_argument("graft: argument count does not match root arity");
  std::vector<int> shifts(n);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    shifts[i] = total;
    total += args[i].arity();
  }
  return graft_walk(root, args, shifts);
}

TreeMonomial relabel_leaves(const TreeMonomial& t, const Permutation& sigma) {
  if (t.is_leaf()) {
    int l = t.leaf_label();
    if (l > sigma.size()) throw std::invalid_argument("relabel_leaves: label out of range");
    return TreeMonomial::leaf(sigma(l));
  }
  std::vector<TreeMonomial> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(relabel_leaves(c, sigma));
  return TreeMonomial::vertex(t.generator(), std::move(children));
}

TreeMonomial shuffle_compose(const TreeMonomial& root, const std::vector<TreeMonomial>& args,
                             const Permutation& sigma) {
  std::vector<int> type;
  type.reserve(args.size());
  for (const auto& a : args) type.push_back(a.arity());
  if (!is_shuffle_permutation(sigma, type))
    throw std::invalid_argument("shuffle_compose: not a shuffle permutation of the argument type");
  return relabel_leaves(graft(root, args), sigma);
}

TreeMonomial divisor_monomial(const TreeMonomial& sub) {
  std::vector<int> labels;
  collect_leaf_labels(sub, labels);
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("divisor_monomial: duplicate leaf labels");
  std::map<int, int> rank;
  for (size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = static_cast<int>(i) + 1;

  // Relabel in place via a permutation on the ambient labels would need their
  // range, so walk directly.
  struct Walker {
    const std::map<int, int>& rank;
    TreeMonomial operator()(const TreeMonomial& t) const {
      if (t.is_leaf()) return TreeMonomial::leaf(rank.at(t.leaf_label()));
      std::vector<TreeMonomial> children;
      children.reserve(t.children().size());
      for (const auto& c : t.children()) children.push_back((*this)(c));
      return TreeMonomial::vertex(t.generator(), std::move(children));
    }
  };
  return Walker{rank}(sub);
}

namespace {

// All ways to write total as an ordered sum of `parts` positive integers.
void compositions_into(int total, int parts, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int first = 1; total - first >= parts - 1; ++first) {
    current.push_back(first);
    compositions_into(total - first, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<TreeMonomial> enumerate_monomials(const Alphabet& generators, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_monomials: arity must be positive");
  for (const auto& g : generators)
    if (g.arity < 2)
      throw std::invalid_argument("enumerate_monomials: generator " + g.name +
                                  " has arity < 2, the monomial set is infinite");

  // by_arity[k] lists all monomials of arity k, built bottom-up. Every
  // monomial decomposes uniquely as root corolla + standard subtrees + shuffle
  // permutation, so no duplicates arise; a set guards the invariant anyway.
  std::vector<std::vector<TreeMonomial>> by_arity(std::max(n, 1) + 1);
  by_arity[1] = {TreeMonomial::leaf(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<TreeMonomial, StructuralLess> bucket;
    for (const auto& g : generators) {
      if (g.arity > k) continue;
      std::vector<int> labels(g.arity);
      std::iota(labels.begin(), labels.end(), 1);
      TreeMonomial root = corolla(g, labels);

      std::vector<std::vector<int>> parts_list;
      std::vector<int> current;
      compositions_into(k, g.arity, current, parts_list);
      for (const auto& parts : parts_list) {
        if (std::any_of(parts.begin(), parts.end(),
                        [&](int p) { return by_arity[p].empty(); }))
          continue;
        auto shuffles = shuffle_permutations(parts);
        // odometer over the argument choices
        std::vector<size_t> idx(parts.size(), 0);
        while (true) {
          std::vector<TreeMonomial> args;
          args.reserve(parts.size());
          for (size_t i = 0; i < parts.size(); ++i) args.push_back(by_arity[parts[i]][idx[i]]);
          for (const auto& sigma : shuffles) bucket.insert(shuffle_compose(root, args, sigma));
          size_t d = parts.size();
          while (d > 0 && ++idx[d - 1] == by_arity[parts[d - 1]].size()) idx[--d] = 0;
          if (d == 0) break;
        }
      }
    }
    by_arity[k].assign(bucket.begin(), bucket.end());
  }
  return by_arity[n];
}

}  // namespace opgb
