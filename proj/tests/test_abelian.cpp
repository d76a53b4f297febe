#include <random>

#include "doctest.h"
#include "onerel/abelian.hpp"
#include "onerel/verify.hpp"
#include "test_helpers.hpp"

using namespace onerel;
using test::W;

namespace {

Presentation pres(std::string_view relator, GeneratorNames names = {}) {
  return make_presentation(names, parse_word(relator, names));
}

// Independent route to the b1 = 1 projection: search for the sign-normalised
// primitive covector annihilating the exponent vector.
std::array<long long, 2> primitive_annihilator(long long ex, long long ey) {
  const long long bound = std::max(std::llabs(ex), std::llabs(ey)) + 1;
  for (long long qx = -bound; qx <= bound; ++qx) {
    for (long long qy = -bound; qy <= bound; ++qy) {
      if (qx == 0 && qy == 0) continue;
      if (gcd_ll(qx, qy) != 1) continue;
      if (qx * ex + qy * ey != 0) continue;
      if (qx > 0 || (qx == 0 && qy > 0)) return {qx, qy};
    }
  }
  FAIL("no primitive annihilator found");
  return {0, 0};
}

}  // namespace

TEST_CASE("analyze_abelianization on the worked relator") {
  const AbelianizationData a = analyze_abelianization(test::paper_presentation());
  CHECK(a.e_x == 0);
  CHECK(a.e_y == 0);
  CHECK(a.b1 == 2);
  REQUIRE(a.projection.size() == 2);
  CHECK(a.projection[0] == std::array<long long, 2>{1, 0});
  CHECK(a.projection[1] == std::array<long long, 2>{0, 1});
  CHECK(a.torsion_order == 0);
}

TEST_CASE("analyze_abelianization on simple presentations") {
  const AbelianizationData a = analyze_abelianization(pres("yy"));
  CHECK(a.e_x == 0);
  CHECK(a.e_y == 2);
  CHECK(a.b1 == 1);
  CHECK(a.projection[0] == std::array<long long, 2>{1, 0});
  CHECK(a.torsion_order == 2);

  const AbelianizationData b = analyze_abelianization(pres("xxYYYYY"));
  CHECK(b.e_x == 2);
  CHECK(b.e_y == -5);
  CHECK(b.b1 == 1);
  CHECK(b.projection[0] == std::array<long long, 2>{5, 2});
  CHECK(b.torsion_order == 1);
}

TEST_CASE("b1 = 1 projection matches the annihilator oracle and is surjective") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const long long ex = static_cast<long long>(rng() % 21) - 10;
    const long long ey = static_cast<long long>(rng() % 21) - 10;
    if (ex == 0 && ey == 0) continue;
    const Presentation p = make_presentation(
        GeneratorNames{}, Word::generator(Gen::x, ex) * Word::generator(Gen::y, ey));
    const AbelianizationData a = analyze_abelianization(p);
    REQUIRE(a.b1 == 1);
    CHECK(a.projection[0] == primitive_annihilator(ex, ey));
    CHECK(gcd_ll(a.projection[0][0], a.projection[0][1]) == 1);
    CHECK(a.projection[0][0] * ex + a.projection[0][1] * ey == 0);
  }
}

TEST_CASE("abelian_image of the worked terms") {
  const AbelianizationData a = analyze_abelianization(test::paper_presentation());
  CHECK(abelian_image(W("BA", test::kAB), a) == LatticePoint::of(-1, -1));
  CHECK(abelian_image(Word{}, a) == LatticePoint::of(0, 0));
  CHECK(abelian_image(W("BAbaBAbaBBA", test::kAB), a) == LatticePoint::of(-1, -2));
}

TEST_CASE("abelian_image is a homomorphism") {
  std::mt19937_64 rng(19);
  for (const char* relator : {"", "yy", "xxYYYYY"}) {
    const AbelianizationData a = analyze_abelianization(pres(relator));
    for (int i = 0; i < 150; ++i) {
      const Word u = verify::random_word(rng, i % 15);
      const Word v = verify::random_word(rng, (i * 3) % 15);
      CHECK(abelian_image(u * v, a) == abelian_image(u, a) + abelian_image(v, a));
      CHECK(abelian_image(u.inverse(), a) == -abelian_image(u, a));
    }
  }
}

TEST_CASE("make_character") {
  SUBCASE("phi_b on the worked group") {
    const Character chi = make_character(test::paper_presentation(), 0, 1);
    CHECK(chi.value_x == 0);
    CHECK(chi.value_y == 1);
    CHECK(chi.induced == Covector::of(0, 1));
  }
  SUBCASE("valid character on a simple presentation") {
    const Character chi = make_character(pres("yy"), 1, 0);
    CHECK(chi.induced == Covector::of(1));
    // Non-primitive multiples scale the induced covector.
    CHECK(make_character(pres("yy"), 3, 0).induced == Covector::of(3));
  }
  SUBCASE("rejections name the rule violated") {
    CHECK_THROWS_AS(make_character(pres("xxYYYYY"), 1, 0), CharacterError);
    CHECK_THROWS_AS(make_character(pres("yy"), 0, 0), CharacterError);
    CHECK_THROWS_AS(make_character(pres("yy"), 0, 1), CharacterError);
    try {
      make_character(pres("xxYYYYY"), 1, 0);
    } catch (const CharacterError& e) {
      CHECK(std::string(e.what()).find("does not factor") != std::string::npos);
    }
  }
  SUBCASE("characters along the b1 = 1 annihilator are accepted") {
    const Character chi = make_character(pres("xxYYYYY"), 5, 2);
    CHECK(chi.induced == Covector::of(1));
    CHECK(make_character(pres("xxYYYYY"), -5, -2).induced == Covector::of(-1));
  }
}
