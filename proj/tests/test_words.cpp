#include <random>

#include "doctest.h"
#include "onerel/verify.hpp"
#include "onerel/words.hpp"
#include "test_helpers.hpp"

using namespace onerel;
using test::W;

TEST_CASE("parse_word transliterates and freely reduces") {
  const Word w = W("aBab", test::kAB);
  REQUIRE(w.size() == 4);
  CHECK(w.letters()[0] == Letter{Gen::x, 1});
  CHECK(w.letters()[1] == Letter{Gen::y, -1});
  CHECK(w.letters()[2] == Letter{Gen::x, 1});
  CHECK(w.letters()[3] == Letter{Gen::y, 1});

  CHECK(W("aA", test::kAB).empty());
  CHECK(W("xyX") == Word({Letter{Gen::x, 1}, Letter{Gen::y, 1}, Letter{Gen::x, -1}}));
  CHECK(W("xXyYxX").empty());
}

TEST_CASE("parse_word rejects unknown letters with their position") {
  CHECK_THROWS_AS(W("xqy"), ParseError);
  try {
    W("xyzzy");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
    CHECK(std::string(e.what()).find("'z'") != std::string::npos);
  }
}

TEST_CASE("render/parse round-trip") {
  CHECK(render_word(W("aBab", test::kAB), test::kAB) == "aBab");
  CHECK(render_word(Word{}) == "");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Word w = verify::random_word(rng, i % 33);
    CHECK(parse_word(render_word(w)) == w);
  }
}

TEST_CASE("presentation parsing") {
  const Presentation p = parse_presentation("a,b|AbaBAbaBBAbabABBab");
  CHECK(p.names.x == 'a');
  CHECK(p.names.y == 'b');
  CHECK(p.cyclically_reduced);
  CHECK(p.relator == test::paper_relator());
  CHECK(render_presentation(p) == "a,b|AbaBAbaBBAbabABBab");

  CHECK(parse_presentation("x,y|").relator.empty());
  CHECK_THROWS_AS(parse_presentation("x,y"), ParseError);
  CHECK_THROWS_AS(parse_presentation("xy|x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("x,x|x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("X,y|x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("x,y|w|v"), ParseError);
}

TEST_CASE("cyclic_reduce") {
  SUBCASE("strips one conjugating letter") {
    const auto [core, conj] = cyclic_reduce(W("xyX"));
    CHECK(core == W("y"));
    CHECK(conj == W("x"));
  }
  SUBCASE("identity on cyclically reduced input") {
    const auto [core, conj] = cyclic_reduce(W("xyXY"));
    CHECK(core == W("xyXY"));
    CHECK(conj.empty());
  }
  SUBCASE("recovers the worked relator from its b-conjugate") {
    const Word r = test::paper_relator();
    const Word conjugated = W("B", test::kAB) * r * W("b", test::kAB);
    const auto [core, conj] = cyclic_reduce(conjugated);
    CHECK(core == r);
    CHECK(conj == W("B", test::kAB));
  }
  SUBCASE("w == conj * core * conj^-1 on random words") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      const Word w = verify::random_word(rng, i % 25);
      const auto [core, conj] = cyclic_reduce(w);
      CHECK(core.cyclically_reduced());
      CHECK(conj * core * conj.inverse() == w);
    }
  }
}

TEST_CASE("is_proper_power") {
  REQUIRE(is_proper_power(W("yy")).has_value());
  CHECK(is_proper_power(W("yy"))->root == W("y"));
  CHECK(is_proper_power(W("yy"))->exponent == 2);

  CHECK(!is_proper_power(W("xy")).has_value());
  CHECK(!is_proper_power(Word{}).has_value());

  const auto cubed = is_proper_power(W("xyxyxy"));
  REQUIRE(cubed.has_value());
  CHECK(cubed->root == W("xy"));
  CHECK(cubed->exponent == 3);

  // Maximal exponent, not just any decomposition.
  const auto fourth = is_proper_power(W("xyxyxyxy"));
  REQUIRE(fourth.has_value());
  CHECK(fourth->exponent == 4);

  CHECK_THROWS_AS(is_proper_power(W("xyX")), std::invalid_argument);
}

TEST_CASE("is_proper_power agrees with the divisor oracle") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 400; ++i) {
    Word w;
    if (i % 2 == 0) {
      w = verify::random_cyclically_reduced_word(rng, 40);
    } else {
      const Word root = verify::random_cyclically_reduced_word(rng, 6);
      for (int k = 0; k < 2 + i % 3; ++k) w = w * root;
    }
    CHECK(is_proper_power(w) == verify::oracle::proper_power_by_periods(w));
  }
}

TEST_CASE("Nielsen moves") {
  CHECK(apply_nielsen(NielsenMove::swap_generators, W("xy")) == W("yx"));
  CHECK(apply_nielsen(NielsenMove::invert_x, W("x")) == W("X"));
  CHECK(apply_nielsen(NielsenMove::right_multiply, W("xY")) == W("x"));

  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Word w = verify::random_word(rng, i % 20);
    CHECK(apply_nielsen(NielsenMove::invert_x,
                        apply_nielsen(NielsenMove::invert_x, w)) == w);
    CHECK(apply_nielsen(NielsenMove::swap_generators,
                        apply_nielsen(NielsenMove::swap_generators, w)) == w);
  }
}

TEST_CASE("invert and cyclic_permute") {
  CHECK(W("xy").inverse() == W("YX"));
  CHECK(Word{}.inverse() == Word{});
  CHECK(cyclic_permute(W("xyx"), 1) == W("yxx"));
  CHECK(cyclic_permute(W("xyx"), 0) == W("xyx"));
  CHECK(cyclic_permute(W("xyx"), -1) == W("xxy"));
  CHECK(cyclic_permute(W("xyx"), 4) == W("yxx"));
  CHECK(cyclic_permute(Word{}, 3) == Word{});
  CHECK_THROWS_AS(cyclic_permute(W("xyX"), 1), std::invalid_argument);
}

TEST_CASE("word accessors") {
  const Word r = test::paper_relator();
  CHECK(r.size() == 18);
  CHECK(r.exponent_sums() == std::array<long long, 2>{0, 0});
  CHECK(r.occurrences(Gen::x) == 8);
  CHECK(r.occurrences(Gen::y) == 10);
  CHECK(r.cyclically_reduced());
  CHECK(r.prefix(2) == W("Ab", test::kAB));
  CHECK(r.suffix_from(16) == W("ab", test::kAB));
  CHECK(Word::generator(Gen::y, -3) == W("YYY"));
}
