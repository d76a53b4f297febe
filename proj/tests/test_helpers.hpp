#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "onerel/abelian.hpp"
#include "onerel/lattice_polytope.hpp"
#include "onerel/words.hpp"

namespace onerel::test {

inline Word W(std::string_view text, GeneratorNames names = {}) {
  return parse_word(text, names);
}

inline constexpr GeneratorNames kAB{'a', 'b'};

// The cyclically reduced relator of the worked commutator example.
inline Word paper_relator() { return W("AbaBAbaBBAbabABBab", kAB); }

inline Presentation paper_presentation() {
  return make_presentation(kAB, paper_relator());
}

inline LatticePoint P1(long long a) { return LatticePoint::of(a); }
inline LatticePoint P2(long long a, long long b) { return LatticePoint::of(a, b); }

inline IntegralPolytope hull_of(std::initializer_list<LatticePoint> pts) {
  return IntegralPolytope::hull(std::vector<LatticePoint>(pts));
}

}  // namespace onerel::test
