#include "onerel/abelian.hpp"

namespace onerel {

AbelianizationData analyze_abelianization(const Presentation& p) {
  AbelianizationData a;
  const auto sums = p.relator.exponent_sums();
  a.e_x = sums[0];
  a.e_y = sums[1];
  a.torsion_order = gcd_ll(a.e_x, a.e_y);
  if (a.e_x == 0 && a.e_y == 0) {
    a.b1 = 2;
    a.projection = {{1, 0}, {0, 1}};
    return a;
  }
  a.b1 = 1;
  const long long g = a.torsion_order;  // > 0 here
  std::array<long long, 2> q{a.e_y / g, -a.e_x / g};
  // Sign-normalise: first nonzero entry on (x, y) positive.
  const long long lead = q[0] != 0 ? q[0] : q[1];
  if (lead < 0) {
    q[0] = -q[0];
    q[1] = -q[1];
  }
  a.projection = {q};
  return a;
}

LatticePoint abelian_image(const Word& w, const AbelianizationData& a) {
  const auto sums = w.exponent_sums();
  LatticePoint p = LatticePoint::zero(a.b1);
  for (int i = 0; i < a.b1; ++i) {
    p.v[static_cast<std::size_t>(i)] =
        a.projection[static_cast<std::size_t>(i)][0] * sums[0] +
        a.projection[static_cast<std::size_t>(i)][1] * sums[1];
  }
  return p;
}

LatticePoint generator_image(Gen g, const AbelianizationData& a) {
  return abelian_image(Word::generator(g), a);
}

Character make_character(const Presentation& p, long long vx, long long vy) {
  if (vx == 0 && vy == 0) {
    throw CharacterError("character must not be identically zero");
  }
  const AbelianizationData a = analyze_abelianization(p);
  if (vx * a.e_x + vy * a.e_y != 0) {
    throw CharacterError(
        "character does not factor through the abelianisation: phi(relator) = " +
        std::to_string(vx * a.e_x + vy * a.e_y) + " != 0");
  }
  Character chi;
  chi.value_x = vx;
  chi.value_y = vy;
  if (a.b1 == 2) {
    chi.induced = Covector::of(vx, vy);
    return chi;
  }
  // phi factors as c * projection with the projection row primitive, so c is
  // read off at any nonzero entry of the row.
  const auto& q = a.projection[0];
  const long long c = q[0] != 0 ? vx / q[0] : vy / q[1];
  chi.induced = Covector::of(c);
  return chi;
}

}  // namespace onerel
