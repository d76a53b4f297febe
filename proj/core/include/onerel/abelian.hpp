#pragma once

// Abelianisation of the presented group: exponent sums, first Betti number,
// the canonical projection onto the free part H of the abelianisation, images
// of words in the lattice, and integral characters.

#include <vector>

#include "onerel/lattice.hpp"
#include "onerel/words.hpp"

namespace onerel {

struct AbelianizationData {
  long long e_x = 0;  // exponent sum of x in the relator
  long long e_y = 0;
  int b1 = 2;  // rank of the free part H; 2 iff both exponent sums vanish

  // b1 rows of the projection Z^2 -> H = Z^{b1} on exponent vectors. For
  // b1 == 2 this is the identity; for b1 == 1 the sign-normalised primitive
  // covector (e_y, -e_x)/gcd with positive first nonzero entry.
  std::vector<std::array<long long, 2>> projection;

  // gcd of the exponent sums: the quotient is Z^{b1} + Z/torsion_order
  // (0 when the relator abelianises trivially). Recorded for reports only.
  long long torsion_order = 0;
};

AbelianizationData analyze_abelianization(const Presentation& p);

// Projection of the exponent-sum vector of w; a rank-b1 lattice point.
LatticePoint abelian_image(const Word& w, const AbelianizationData& a);

LatticePoint generator_image(Gen g, const AbelianizationData& a);

// An integral character G -> Z, phi(x) = value_x, phi(y) = value_y, together
// with the covector on H inducing it. Valid characters vanish on the relator
// and are not identically zero.
struct Character {
  long long value_x = 0;
  long long value_y = 0;
  Covector induced{2, {0, 0}};

  friend bool operator==(const Character&, const Character&) = default;
};

// Throws CharacterError when (vx, vy) == (0, 0) or the pair does not vanish
// on the relator's abelian image.
Character make_character(const Presentation& p, long long vx, long long vy);

}  // namespace onerel
