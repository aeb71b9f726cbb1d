#pragma once

#include <utility>
#include <vector>

#include "opgb/orderings.hpp"
#include "opgb/rational.hpp"

namespace opgb {

struct Term {
  TreeMonomial monomial;
  PathKey key;  // cached path_key(monomial)
  Rational coefficient;
};

// An arity-homogeneous linear combination of tree monomials with exact
// rational coefficients, stored with its terms sorted ascending under the
// attached ordering spec (so the leading term sits at the back). Treated as an
// immutable value; all arithmetic returns fresh polynomials.
class OperadPolynomial {
 public:
  explicit OperadPolynomial(OrderingSpec spec) : spec_(spec) {}

  // Combines duplicate monomials, drops zero coefficients, sorts. Throws when
  // the monomials mix arities or one of them is not a valid shuffle monomial.
  static OperadPolynomial from_terms(const OrderingSpec& spec,
                                     std::vector<std::pair<TreeMonomial, Rational>> terms);

  const OrderingSpec& spec() const { return spec_; }
  bool is_zero() const { return terms_.empty(); }
  int arity() const { return arity_; }  // 0 for the zero polynomial
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const;  // throws on the zero polynomial
  const TreeMonomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  // Equality of the term lists (monomials and coefficients).
  bool operator==(const OperadPolynomial& other) const;

 private:
  friend OperadPolynomial add(const OperadPolynomial&, const OperadPolynomial&);
  friend OperadPolynomial scale(const OperadPolynomial&, const Rational&);

  OrderingSpec spec_;
  int arity_ = 0;
  std::vector<Term> terms_;  // ascending under spec_
};

// Throws when the specs differ or the arities differ (zero operands exempt).
OperadPolynomial add(const OperadPolynomial& f, const OperadPolynomial& g);
OperadPolynomial subtract(const OperadPolynomial& f, const OperadPolynomial& g);
OperadPolynomial scale(const OperadPolynomial& f, const Rational& c);
OperadPolynomial monic(const OperadPolynomial& f);  // zero stays zero

OperadPolynomial monomial_polynomial(const OrderingSpec& spec, const TreeMonomial& m);

// Deterministic total order for stable listings: arity, then the term lists
// compared from the leading end (monomial under f's spec, then coefficient).
int polynomial_compare(const OperadPolynomial& f, const OperadPolynomial& g);

}  // namespace opgb
