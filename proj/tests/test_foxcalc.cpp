#include <random>

#include "doctest.h"
#include "onerel/foxcalc.hpp"
#include "onerel/verify.hpp"
#include "test_helpers.hpp"

using namespace onerel;
using test::W;

namespace {

FreeRingElement mono(std::string_view text, long long coeff = 1,
                     GeneratorNames names = {}) {
  return FreeRingElement::monomial(parse_word(text, names), coeff);
}

}  // namespace

TEST_CASE("fox_derivative on generators") {
  CHECK(fox_derivative(W("x"), Gen::x) == FreeRingElement::one());
  CHECK(fox_derivative(W("x"), Gen::y) == FreeRingElement{});
  CHECK(fox_derivative(W("X"), Gen::x) == mono("X", -1));
  CHECK(fox_derivative(Word{}, Gen::x) == FreeRingElement{});
}

TEST_CASE("fox_derivative of the commutator") {
  // d(xyx^-1y^-1)/dx = 1 - xyx^-1
  const FreeRingElement d = fox_derivative(W("xyXY"), Gen::x);
  CHECK(d == FreeRingElement::one() - mono("xyX"));
}

TEST_CASE("fox_derivative of the b-conjugated worked relator has the 8 known terms") {
  const Word r = test::paper_relator();
  const Word conjugated = W("B", test::kAB) * r * W("b", test::kAB);
  FreeRingElement expected;
  expected -= mono("BA", 1, test::kAB);
  expected += mono("BAb", 1, test::kAB);
  expected -= mono("BAbaBA", 1, test::kAB);
  expected += mono("BAbaBAb", 1, test::kAB);
  expected -= mono("BAbaBAbaBBA", 1, test::kAB);
  expected += mono("BAbaBAbaBBAb", 1, test::kAB);
  expected -= mono("BAbaBAbaBBAbabA", 1, test::kAB);
  expected += mono("BAbaBAbaBBAbabABB", 1, test::kAB);
  CHECK(fox_derivative(conjugated, Gen::x) == expected);
  CHECK(expected.term_count() == 8);
}

TEST_CASE("fox_term_list occurrence scan") {
  SUBCASE("three occurrences of y in xyXYY") {
    const FoxTermList terms = fox_term_list(W("xyXYY"), Gen::y);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0] == FoxTerm{+1, W("x"), 1});
    CHECK(terms[1] == FoxTerm{-1, W("xyXY"), 3});
    CHECK(terms[2] == FoxTerm{-1, W("xyXYY"), 4});
  }
  SUBCASE("absent generator gives the empty list") {
    CHECK(fox_term_list(W("x"), Gen::y).empty());
  }
  SUBCASE("signs alternate on the worked relator") {
    const FoxTermList terms = fox_term_list(test::paper_relator(), Gen::x);
    REQUIRE(terms.size() == 8);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      CHECK(terms[i].sign == (i % 2 == 0 ? -1 : +1));
    }
  }
}

TEST_CASE("occurrence scan collapses to the recursive derivative") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Word r = verify::random_word(rng, i % 31);
    for (Gen z : {Gen::x, Gen::y}) {
      const FoxTermList terms = fox_term_list(r, z);
      CHECK(terms.size() == r.occurrences(z));
      CHECK(collapse(terms) == fox_derivative(r, z));
    }
  }
}

TEST_CASE("term words are pairwise distinct free words, one monomial each") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const Word r = verify::random_cyclically_reduced_word(rng, 30);
    for (Gen z : {Gen::x, Gen::y}) {
      const FoxTermList terms = fox_term_list(r, z);
      // Distinct free words: the collapsed element keeps one monomial per
      // occurrence, with unit coefficients.
      CHECK(collapse(terms).term_count() == terms.size());
      for (const auto& [word, coeff] : collapse(terms).terms()) {
        CHECK((coeff == 1 || coeff == -1));
      }
    }
  }
}

TEST_CASE("fundamental formula") {
  CHECK(fundamental_formula_check(Word{}));
  CHECK(fundamental_formula_check(W("xyXY")));
  CHECK(fundamental_formula_check(test::paper_relator()));

  std::mt19937_64 rng(29);
  for (int i = 0; i < 1000; ++i) {
    CHECK(fundamental_formula_check(verify::random_word(rng, i % 31)));
  }
}

TEST_CASE("chain rule") {
  SUBCASE("f2 on r = x against the hand-computed table") {
    // d f2(x)/dx = d(x^-1)/dx = -x^-1, and the right-hand side is
    // f2(1) * (-x^-1).
    CHECK(fox_derivative(apply_nielsen(NielsenMove::invert_x, W("x")), Gen::x) ==
          mono("X", -1));
    CHECK(chain_rule_check(NielsenMove::invert_x, W("x"), Gen::x));
  }
  SUBCASE("f1 on r = y: both sides are 1") {
    CHECK(chain_rule_check(NielsenMove::swap_generators, W("y"), Gen::x));
  }
  SUBCASE("random words, every move and direction") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 400; ++i) {
      const Word r = verify::random_word(rng, 1 + i % 20);
      for (NielsenMove m : {NielsenMove::swap_generators, NielsenMove::invert_x,
                            NielsenMove::right_multiply}) {
        for (Gen z : {Gen::x, Gen::y}) {
          CHECK(chain_rule_check(m, r, z));
        }
      }
    }
  }
}

TEST_CASE("product and inverse rules") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    const Word u = verify::random_word(rng, i % 16);
    const Word v = verify::random_word(rng, (i * 7) % 16);
    for (Gen z : {Gen::x, Gen::y}) {
      CHECK(fox_derivative(u * v, z) ==
            fox_derivative(u, z) + FreeRingElement::monomial(u) * fox_derivative(v, z));
      CHECK(fox_derivative(u.inverse(), z) ==
            -(FreeRingElement::monomial(u.inverse()) * fox_derivative(u, z)));
    }
  }
}

TEST_CASE("ring arithmetic cancels exactly") {
  FreeRingElement e = mono("xy") - mono("xy");
  CHECK(e.is_zero());
  // x * x^-1 collapses to the empty word under multiplication.
  CHECK(mono("x") * mono("X") == FreeRingElement::one());
  CHECK((mono("xy", 2) * mono("Y", 3)) == mono("x", 6));
  CHECK(apply_nielsen(NielsenMove::swap_generators, mono("xY", 4)) == mono("yX", 4));
}
