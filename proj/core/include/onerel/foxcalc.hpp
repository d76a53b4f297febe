#pragma once

// Fox derivatives of words in the free group ring Z[F_2], with the
// fundamental formula and the chain rule as exactly verifiable identities.
//
// Two independent routes are kept on purpose: fox_derivative evaluates the
// defining recursion and serves as the specification oracle, fox_term_list is
// the one-pass occurrence scan that feeds the polytope pipeline. They are
// cross-checked permanently in the verification suites.

#include <cstddef>
#include <map>
#include <vector>

#include "onerel/words.hpp"

namespace onerel {

// An element of the free group ring: finite map from freely reduced words to
// nonzero integer coefficients.
class FreeRingElement {
public:
  FreeRingElement() = default;  // zero

  static FreeRingElement one();
  static FreeRingElement monomial(Word w, long long coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, long long>& terms() const { return terms_; }

  FreeRingElement& operator+=(const FreeRingElement& rhs);
  FreeRingElement& operator-=(const FreeRingElement& rhs);
  FreeRingElement operator-() const;
  FreeRingElement operator*(const FreeRingElement& rhs) const;

  friend FreeRingElement operator+(FreeRingElement a, const FreeRingElement& b) {
    a += b;
    return a;
  }
  friend FreeRingElement operator-(FreeRingElement a, const FreeRingElement& b) {
    a -= b;
    return a;
  }
  friend bool operator==(const FreeRingElement&, const FreeRingElement&) = default;

private:
  void add_term(const Word& w, long long coeff);

  std::map<Word, long long> terms_;
};

// The Fox derivative d/dz as the unique Z-linear map with d1/dz = 0,
// dz/dz = 1, dg/dz = 0 for the other generator, and the product rule
// d(uv)/dz = du/dz + u * dv/dz. Computed by the defining recursion.
FreeRingElement fox_derivative(const Word& w, Gen z);

// One signed term per occurrence of z or z^{-1} in r.  For r = p z s the
// entry is (+1, p); for r = p z^{-1} s it is (-1, p z^{-1}).  `position` is
// the 0-based index of the occurrence in r.
struct FoxTerm {
  int sign;              // +1 or -1
  Word word;             // the monomial: prefix, or prefix * z^{-1}
  std::size_t position;  // letter index of the occurrence in r

  friend bool operator==(const FoxTerm&, const FoxTerm&) = default;
};
using FoxTermList = std::vector<FoxTerm>;

FoxTermList fox_term_list(const Word& r, Gen z);

// Sum of the signed monomials of a term list, as a ring element.
FreeRingElement collapse(const FoxTermList& terms);

// The move m extended Z-linearly to the group ring.
FreeRingElement apply_nielsen(NielsenMove m, const FreeRingElement& e);

// u - 1 == du/dx * (x - 1) + du/dy * (y - 1), exactly in Z[F_2].
bool fundamental_formula_check(const Word& w);

// d f(r)/dz == f(dr/dx) * d f(x)/dz + f(dr/dy) * d f(y)/dz, exactly.
bool chain_rule_check(NielsenMove m, const Word& r, Gen z);

}  // namespace onerel
