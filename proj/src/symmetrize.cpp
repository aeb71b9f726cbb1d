#include "opgb/symmetrize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace opgb {

namespace {

std::string generator_name(const Alphabet& alphabet, int gen) {
  if (gen >= 0 && static_cast<size_t>(gen) < alphabet.size()) return alphabet[gen].name;
  return "#" + std::to_string(gen);
}

}  // namespace

void GeneratorAction::set(int gen, int i, Expansion expansion) {
  if (gen < 0) throw std::invalid_argument("GeneratorAction::set: bad generator ordinal");
  if (i < 1) throw std::invalid_argument("GeneratorAction::set: transposition index must be >= 1");
  table_[{gen, i}] = std::move(expansion);
}

bool GeneratorAction::has(int gen, int i) const { return table_.count({gen, i}) != 0; }

const GeneratorAction::Expansion& GeneratorAction::get(int gen, int i,
                                                       const Alphabet& alphabet) const {
  auto it = table_.find({gen, i});
  if (it == table_.end())
    throw std::invalid_argument("no action entry for generator '" + generator_name(alphabet, gen) +
                                "' and transposition s_" + std::to_string(i));
  return it->second;
}

void GeneratorAction::validate(const Alphabet& alphabet) const {
  for (const auto& [key, expansion] : table_) {
    auto [gen, i] = key;
    if (gen < 0 || static_cast<size_t>(gen) >= alphabet.size())
      throw std::invalid_argument("action entry names an unknown generator ordinal " +
                                  std::to_string(gen));
    const Generator& g = alphabet[gen];
    if (i < 1 || i >= g.arity)
      throw std::invalid_argument("action entry for generator '" + g.name +
                                  "' uses transposition s_" + std::to_string(i) +
                                  " outside 1.." + std::to_string(g.arity - 1));
    for (const auto& [h, coeff] : expansion) {
      if (h < 0 || static_cast<size_t>(h) >= alphabet.size())
        throw std::invalid_argument("action of s_" + std::to_string(i) + " on generator '" +
                                    g.name + "' names an unknown generator");
      if (alphabet[h].arity != g.arity)
        throw std::invalid_argument("action of s_" + std::to_string(i) + " on generator '" +
                                    g.name + "' changes arity");
      (void)coeff;
    }
    // Applying s_i twice must give back the generator itself.
    std::map<int, Rational> twice;
    for (const auto& [h, coeff] : expansion)
      for (const auto& [h2, coeff2] : get(h, i, alphabet)) {
        Rational product = coeff * coeff2;
        twice[h2] += product;
      }
    for (const auto& [h2, total] : twice) {
      Rational expected = (h2 == gen) ? Rational(1) : Rational(0);
      if (total != expected)
        throw std::invalid_argument("action of s_" + std::to_string(i) + " on generator '" +
                                    g.name + "' is not an involution");
    }
    if (twice.find(gen) == twice.end())
      throw std::invalid_argument("action of s_" + std::to_string(i) + " on generator '" + g.name +
                                  "' is not an involution");
  }
}

namespace {

using WeightedTerm = std::pair<TreeMonomial, Rational>;

// Restore the canonical child order at one vertex. Each adjacent swap of
// children j and j+1 (0-based) rewrites the vertex generator through its
// s_{j+1} expansion; the children themselves are already canonical and move
// as blocks. Mins of sibling subtrees are distinct, so the target order is
// unique and every swap removes one inversion.
void sort_children(int gen, std::vector<TreeMonomial> children, Rational coefficient,
                   const GeneratorAction& actions, const Alphabet& alphabet,
                   std::vector<WeightedTerm>& out) {
  for (size_t j = 0; j + 1 < children.size(); ++j) {
    if (children[j].min_leaf() > children[j + 1].min_leaf()) {
      std::swap(children[j], children[j + 1]);
      for (const auto& [h, coeff] : actions.get(gen, static_cast<int>(j) + 1, alphabet)) {
        Rational c = coefficient * coeff;
        sort_children(h, children, std::move(c), actions, alphabet, out);
      }
      return;
    }
  }
  out.emplace_back(TreeMonomial::vertex(gen, std::move(children)), std::move(coefficient));
}

// Canonicalize a (possibly non-canonical) relabeled tree bottom-up,
// distributing over the polynomials the children canonicalize to.
std::vector<WeightedTerm> canonicalize(const TreeMonomial& t, const GeneratorAction& actions,
                                       const Alphabet& alphabet) {
  if (t.is_leaf()) return {{t, Rational(1)}};

  std::vector<std::vector<WeightedTerm>> child_terms;
  child_terms.reserve(t.children().size());
  for (const auto& c : t.children()) child_terms.push_back(canonicalize(c, actions, alphabet));

  std::vector<WeightedTerm> out;
  std::vector<size_t> pick(child_terms.size(), 0);
  while (true) {
    std::vector<TreeMonomial> children;
    children.reserve(pick.size());
    Rational coefficient(1);
    for (size_t i = 0; i < pick.size(); ++i) {
      const auto& [m, c] = child_terms[i][pick[i]];
      children.push_back(m);
      coefficient *= c;
    }
    sort_children(t.generator(), std::move(children), std::move(coefficient), actions, alphabet,
                  out);
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == child_terms[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

}  // namespace

OperadPolynomial act(const Permutation& sigma, const OperadPolynomial& f,
                     const GeneratorAction& actions, const Alphabet& alphabet) {
  if (f.is_zero()) return f;
  if (static_cast<int>(sigma.size()) != f.arity())
    throw std::invalid_argument("act: permutation size does not match the arity");

  std::vector<WeightedTerm> terms;
  for (const auto& term : f.terms()) {
    TreeMonomial relabeled = relabel_leaves(term.monomial, sigma);
    for (auto& [m, c] : canonicalize(relabeled, actions, alphabet)) {
      Rational scaled = c * term.coefficient;
      terms.emplace_back(std::move(m), std::move(scaled));
    }
  }
  return OperadPolynomial::from_terms(f.spec(), std::move(terms));
}

std::vector<OperadPolynomial> orbit_closure(const std::vector<OperadPolynomial>& relations,
                                            const GeneratorAction& actions,
                                            const Alphabet& alphabet) {
  actions.validate(alphabet);

  std::vector<OperadPolynomial> out;
  for (const auto& relation : relations) {
    if (relation.is_zero()) continue;
    std::vector<int> images(static_cast<size_t>(relation.arity()));
    std::iota(images.begin(), images.end(), 1);
    do {
      OperadPolynomial image = act(Permutation{images}, relation, actions, alphabet);
      if (image.is_zero()) continue;
      OperadPolynomial reduced = monic(image);
      bool known = false;
      for (const auto& seen : out)
        if (seen == reduced) {
          known = true;
          break;
        }
      if (!known) out.push_back(std::move(reduced));
    } while (std::next_permutation(images.begin(), images.end()));
  }

  std::sort(out.begin(), out.end(), [](const OperadPolynomial& a, const OperadPolynomial& b) {
    return polynomial_compare(a, b) < 0;
  });
  return out;
}

}  // namespace opgb
