#include "doctest.h"
#include "testutil.hpp"

using namespace opgb;

namespace {

const OrderingSpec kSpec;

std::vector<std::string> formatted(const std::vector<OperadPolynomial>& fs, const Alphabet& a) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(format_element(f, a));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("symmetrize");

TEST_CASE("action table basics") {
  Alphabet a{{"m", 2, 0}};
  GeneratorAction actions;
  CHECK(actions.empty());
  actions.set(0, 1, {{0, make_rational(-1)}});
  CHECK(actions.has(0, 1));
  CHECK_FALSE(actions.has(0, 2));
  CHECK(actions.get(0, 1, a).size() == 1);
  CHECK_THROWS_AS(actions.get(0, 2, a), std::invalid_argument);
  actions.validate(a);  // -1 squares to 1
}

TEST_CASE("validate rejects non-involutive or arity-mixing tables") {
  Alphabet a{{"m", 2, 0}, {"t", 3, 1}};
  GeneratorAction doubling;
  doubling.set(0, 1, {{0, make_rational(2)}});
  CHECK_THROWS_AS(doubling.validate(a), std::invalid_argument);

  GeneratorAction mixing;
  mixing.set(0, 1, {{1, make_rational(1)}});
  CHECK_THROWS_AS(mixing.validate(a), std::invalid_argument);

  // Swapping two generators of equal arity is a valid involution.
  Alphabet two{{"u", 2, 0}, {"v", 2, 1}};
  GeneratorAction swap;
  swap.set(0, 1, {{1, make_rational(1)}});
  swap.set(1, 1, {{0, make_rational(1)}});
  swap.validate(two);
}

TEST_CASE("the action on single monomials") {
  Alphabet com{{"m", 2, 0}};
  GeneratorAction sym;
  sym.set(0, 1, {{0, make_rational(1)}});
  OperadPolynomial f = parse_element("m(m(1,2),3)", com, kSpec);
  CHECK(act(Permutation({2, 1, 3}), f, sym, com) == f);
  CHECK(act(Permutation({1, 3, 2}), f, sym, com) ==
        parse_element("m(m(1,3),2)", com, kSpec));
  CHECK(act(Permutation({3, 1, 2}), f, sym, com) ==
        parse_element("m(m(1,3),2)", com, kSpec));
  CHECK_THROWS_AS(act(Permutation({2, 1}), f, sym, com), std::invalid_argument);
}

TEST_CASE("an antisymmetric bracket flips signs") {
  Alphabet lie{{"b", 2, 0}};
  GeneratorAction anti;
  anti.set(0, 1, {{0, make_rational(-1)}});
  OperadPolynomial jacobi =
      parse_element("b(b(1,2),3) - b(b(1,3),2) - b(1,b(2,3))", lie, kSpec);
  CHECK(act(Permutation({2, 1, 3}), jacobi, anti, lie) == scale(jacobi, make_rational(-1)));
  // The identity permutation acts trivially.
  CHECK(act(Permutation::identity(3), jacobi, anti, lie) == jacobi);
  // Acting twice by a transposition returns the element.
  OperadPolynomial once = act(Permutation({1, 3, 2}), jacobi, anti, lie);
  CHECK(act(Permutation({1, 3, 2}), once, anti, lie) == jacobi);
}

TEST_CASE("orbit closure of the commutative associativity relation") {
  PresentationFile file = parse_presentation_file(testutil::presentation_path("com.op"));
  auto closure = orbit_closure(file.presentation.relations, file.actions,
                               file.presentation.generators);
  CHECK(formatted(closure, file.presentation.generators) ==
        std::vector<std::string>{
            "m(m(1,3),2) - m(1,m(2,3))",
            "m(m(1,2),3) - m(1,m(2,3))",
            "m(m(1,2),3) - m(m(1,3),2)",
        });
}

TEST_CASE("orbit closure of the associative relation over two shuffle generators") {
  PresentationFile file = parse_presentation_file(testutil::presentation_path("assoc.op"));
  auto closure = orbit_closure(file.presentation.relations, file.actions,
                               file.presentation.generators);
  CHECK(formatted(closure, file.presentation.generators) ==
        std::vector<std::string>{
            "m(m(1,3),2) - m(1,mop(2,3))",
            "m(m(1,2),3) - m(1,m(2,3))",
            "mop(m(1,3),2) - m(mop(1,2),3)",
            "mop(m(1,2),3) - m(mop(1,3),2)",
            "mop(mop(1,3),2) - mop(1,m(2,3))",
            "mop(mop(1,2),3) - mop(1,mop(2,3))",
        });
}

TEST_CASE("the Jacobi orbit is a single element") {
  PresentationFile file = parse_presentation_file(testutil::presentation_path("lie.op"));
  auto closure = orbit_closure(file.presentation.relations, file.actions,
                               file.presentation.generators);
  REQUIRE(closure.size() == 1);
  CHECK(format_element(closure[0], file.presentation.generators) ==
        "b(b(1,2),3) - b(b(1,3),2) - b(1,b(2,3))");
}

TEST_CASE("closure needs the full action table") {
  Alphabet com{{"m", 2, 0}};
  GeneratorAction none;
  OperadPolynomial rel = parse_element("m(m(1,2),3) - m(1,m(2,3))", com, kSpec);
  CHECK_THROWS_AS(orbit_closure({rel}, none, com), std::invalid_argument);
}

TEST_SUITE_END();
