#pragma once

#include <functional>
#include <optional>

#include "opgb/scm.hpp"
#include "opgb/symmetrize.hpp"

namespace opgb {

struct Presentation {
  Alphabet generators;
  std::vector<OperadPolynomial> relations;
  OrderingSpec spec;
};

// Full normal form: the leading term is rewritten through the first basis
// element whose leading term divides it (first embedding in pre-order) until
// irreducible, then the next term, and so on. Zero-coefficient cancellations
// fall out along the way.
OperadPolynomial normal_form(const OperadPolynomial& f, const std::vector<OperadPolynomial>& basis);

// Hook for confluence tests: given the current head and the nonempty list of
// (basis index, embeddings) options, picks which reduction to apply.
using ReducerChoice =
    std::function<std::pair<int, int>(const TreeMonomial& head,
                                      const std::vector<std::pair<int, std::vector<Embedding>>>&)>;
OperadPolynomial normal_form(const OperadPolynomial& f, const std::vector<OperadPolynomial>& basis,
                             const ReducerChoice& choice);

// One S-polynomial per small common multiple gamma of the leading terms:
//   s = m_{gamma,lt(f)}(f) - (c_f/c_g) * m_{gamma,lt(g)}(g).
// Both heads map to gamma, so every entry has leading term below gamma.
std::vector<OperadPolynomial> s_polynomials(const OperadPolynomial& f, const OperadPolynomial& g);

struct BuchbergerStats {
  long s_polynomials_formed = 0;
  long reductions_to_zero = 0;
};

struct BuchbergerOptions {
  std::optional<int> max_arity;   // skip S-polynomials whose multiple exceeds this arity
  std::optional<int> max_rounds;  // budget; exceeding it flags the result
  int threads = 1;                // round reductions may run in parallel; output identical
  // Observer called with the basis after each completed round.
  std::function<void(int round, const std::vector<OperadPolynomial>&)> on_round;
};

struct GroebnerResult {
  std::vector<OperadPolynomial> basis;  // monic, inter-reduced, deterministic order
  std::optional<int> truncation_arity;  // echoes max_arity
  bool complete = false;                // queue exhausted and nothing skipped by the bound
  bool rounds_exhausted = false;        // stopped by max_rounds
  bool quadratic = false;               // every term of every element has weight 2
  int rounds = 0;
  BuchbergerStats stats;
};

// Operadic Buchberger completion. S-polynomials are processed in increasing
// arity of the common multiple, then by the round that formed them; each round
// reduces against a frozen snapshot and merges the nonzero remainders in
// sorted order, then the basis is inter-reduced.
GroebnerResult buchberger(const Presentation& p, const BuchbergerOptions& options = {});

// Monomials of arity n no leading term of the basis divides; the images of
// these span the quotient in arity n. Same alphabet restrictions as
// enumerate_monomials.
std::vector<TreeMonomial> normal_monomials(const std::vector<OperadPolynomial>& basis,
                                           const Alphabet& generators, int n);
long dimension(const std::vector<OperadPolynomial>& basis, const Alphabet& generators, int n);

// Result-aware variants: reject queries above the truncation arity, where the
// basis may be missing elements.
std::vector<TreeMonomial> normal_monomials(const GroebnerResult& result,
                                           const Alphabet& generators, int n);
long dimension(const GroebnerResult& result, const Alphabet& generators, int n);

// True iff every term of every element has weight 2. For a complete basis
// this detects a PBW presentation (hence Koszulness of the operad).
bool is_quadratic(const std::vector<OperadPolynomial>& basis);

}  // namespace opgb
