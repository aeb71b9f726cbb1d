#include "doctest.h"
#include "testutil.hpp"

using namespace opgb;

namespace {

const Alphabet kBinary{{"b", 2, 0}};
const OrderingSpec kSpec;  // PathPerm

TreeMonomial tree(const std::string& text) { return parse_tree(text, kBinary); }
OperadPolynomial element(const std::string& text) { return parse_element(text, kBinary, kSpec); }

}  // namespace

TEST_SUITE_BEGIN("polynomials");

TEST_CASE("from_terms merges, cancels, and sorts") {
  TreeMonomial A = tree("b(b(1,2),3)");
  TreeMonomial C = tree("b(1,b(2,3))");
  OperadPolynomial f = OperadPolynomial::from_terms(
      kSpec, {{A, make_rational(1, 2)}, {C, make_rational(1)}, {A, make_rational(1, 2)}});
  REQUIRE(f.terms().size() == 2);
  CHECK(f.arity() == 3);
  // Terms are stored ascending: C below A under PathPerm.
  CHECK(f.terms()[0].monomial == C);
  CHECK(f.terms()[1].monomial == A);
  CHECK(f.leading_monomial() == A);
  CHECK(f.leading_coefficient() == make_rational(1));

  OperadPolynomial zero =
      OperadPolynomial::from_terms(kSpec, {{A, make_rational(1)}, {A, make_rational(-1)}});
  CHECK(zero.is_zero());
  CHECK(zero.arity() == 0);
  CHECK_THROWS_AS(zero.leading_term(), std::logic_error);
}

TEST_CASE("from_terms validates its monomials") {
  TreeMonomial bad = TreeMonomial::vertex(0, {TreeMonomial::leaf(2), TreeMonomial::leaf(1)});
  CHECK_THROWS_AS(OperadPolynomial::from_terms(kSpec, {{bad, make_rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(OperadPolynomial::from_terms(
                      kSpec, {{tree("b(1,2)"), make_rational(1)},
                              {tree("b(b(1,2),3)"), make_rational(1)}}),
                  std::invalid_argument);
}

TEST_CASE("arithmetic") {
  OperadPolynomial f = element("b(b(1,2),3) - b(1,b(2,3))");
  OperadPolynomial g = element("b(b(1,2),3) + b(b(1,3),2)");
  CHECK(subtract(f, g) == element("-b(b(1,3),2) - b(1,b(2,3))"));
  CHECK(add(f, g) == element("2*b(b(1,2),3) + b(b(1,3),2) - b(1,b(2,3))"));
  CHECK(scale(f, make_rational(-3, 2)) == element("-3/2*b(b(1,2),3) + 3/2*b(1,b(2,3))"));
  CHECK(subtract(f, f).is_zero());
  CHECK(monic(element("4*b(b(1,2),3) - 2*b(1,b(2,3))")) ==
        element("b(b(1,2),3) - 1/2*b(1,b(2,3))"));
  CHECK(monic(OperadPolynomial(kSpec)).is_zero());
}

TEST_CASE("zero operands are exempt from compatibility checks") {
  OperadPolynomial zero(kSpec);
  OperadPolynomial f = element("b(1,2)");
  CHECK(add(zero, f) == f);
  CHECK(add(f, zero) == f);
  CHECK(subtract(zero, f) == scale(f, make_rational(-1)));
}

TEST_CASE("mismatched operands throw") {
  OperadPolynomial f = element("b(1,2)");
  OperadPolynomial g = element("b(b(1,2),3)");
  CHECK_THROWS_AS(add(f, g), std::invalid_argument);
  OperadPolynomial h = parse_element("b(1,2)", kBinary, ordering_from_name("rpathperm"));
  CHECK_THROWS_AS(add(f, h), std::invalid_argument);
}

TEST_CASE("leading data respects the attached ordering") {
  // Under RPathPerm the right comb is the largest of the three.
  OperadPolynomial f = parse_element("b(b(1,2),3) - b(1,b(2,3))", kBinary,
                                     ordering_from_name("rpathperm"));
  CHECK(f.leading_monomial() == tree("b(1,b(2,3))"));
  CHECK(f.leading_coefficient() == make_rational(-1));
}

TEST_CASE("monomial_polynomial") {
  OperadPolynomial f = monomial_polynomial(kSpec, tree("b(1,2)"));
  CHECK(f.terms().size() == 1);
  CHECK(f.leading_coefficient() == make_rational(1));
}

TEST_CASE("polynomial_compare is deterministic and total") {
  OperadPolynomial zero(kSpec);
  OperadPolynomial f = element("b(1,2)");
  OperadPolynomial g = element("b(b(1,2),3)");
  OperadPolynomial h = element("b(b(1,2),3) - b(1,b(2,3))");
  CHECK(polynomial_compare(f, f) == 0);
  CHECK(polynomial_compare(zero, f) != 0);
  CHECK(polynomial_compare(f, g) == -polynomial_compare(g, f));
  CHECK(polynomial_compare(g, h) == -polynomial_compare(h, g));
  CHECK(polynomial_compare(f, g) < 0);  // arity first
}

TEST_SUITE_END();
