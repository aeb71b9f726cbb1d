#pragma once

#include <map>

#include "opgb/polynomials.hpp"

namespace opgb {

// Expansion tables g^{s_i} = sum of coefficient * generator, describing how
// each generator rewrites when its inputs i and i+1 are swapped.
class GeneratorAction {
 public:
  using Expansion = std::vector<std::pair<int, Rational>>;  // (generator ordinal, coeff)

  void set(int gen, int i, Expansion expansion);  // i is 1-based, 1 <= i < arity
  bool has(int gen, int i) const;
  bool empty() const { return table_.empty(); }

  // Throws std::invalid_argument naming the generator and transposition when
  // the entry is missing.
  const Expansion& get(int gen, int i, const Alphabet& alphabet) const;

  // Checks that expansions stay within the same arity and that applying s_i
  // twice is the identity on every generator with an entry.
  void validate(const Alphabet& alphabet) const;

  const std::map<std::pair<int, int>, Expansion>& entries() const { return table_; }

 private:
  std::map<std::pair<int, int>, Expansion> table_;
};

// The symmetric-group action on elements: relabel the leaves by sigma, then
// restore canonical form bottom-up, rewriting the vertex generator through the
// action table at every adjacent child swap.
OperadPolynomial act(const Permutation& sigma, const OperadPolynomial& f,
                     const GeneratorAction& actions, const Alphabet& alphabet);

// Closure of the relation set under all of S_n (per relation arity), with
// zero results dropped and duplicates up to a nonzero scalar removed. Sorted
// deterministically.
std::vector<OperadPolynomial> orbit_closure(const std::vector<OperadPolynomial>& relations,
                                            const GeneratorAction& actions,
                                            const Alphabet& alphabet);

}  // namespace opgb
