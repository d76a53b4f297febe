#include "onerel/foxcalc.hpp"

namespace onerel {

FreeRingElement FreeRingElement::one() { return monomial(Word{}); }

FreeRingElement FreeRingElement::monomial(Word w, long long coeff) {
  FreeRingElement e;
  if (coeff != 0) e.terms_.emplace(std::move(w), coeff);
  return e;
}

void FreeRingElement::add_term(const Word& w, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeRingElement& FreeRingElement::operator+=(const FreeRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

FreeRingElement& FreeRingElement::operator-=(const FreeRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

FreeRingElement FreeRingElement::operator-() const {
  FreeRingElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

FreeRingElement FreeRingElement::operator*(const FreeRingElement& rhs) const {
  FreeRingElement out;
  for (const auto& [u, a] : terms_) {
    for (const auto& [v, b] : rhs.terms_) {
      out.add_term(u * v, a * b);
    }
  }
  return out;
}

namespace {

// d l / dz for a single letter l.
FreeRingElement fox_letter(Letter l, Gen z) {
  if (l.gen != z) return FreeRingElement{};
  if (l.exp > 0) return FreeRingElement::one();
  return -FreeRingElement::monomial(Word::generator(z, -1));
}

}  // namespace

FreeRingElement fox_derivative(const Word& w, Gen z) {
  // d(l * v)/dz = dl/dz + l * dv/dz, folded from the right so the defining
  // recursion runs without stack depth in the word length.
  FreeRingElement d;
  const auto& ls = w.letters();
  for (std::size_t i = ls.size(); i-- > 0;) {
    Letter l = ls[i];
    d = fox_letter(l, z) + FreeRingElement::monomial(Word::generator(l.gen, l.exp)) * d;
  }
  return d;
}

FoxTermList fox_term_list(const Word& r, Gen z) {
  FoxTermList out;
  const auto& ls = r.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].gen != z) continue;
    if (ls[i].exp > 0) {
      out.push_back(FoxTerm{+1, r.prefix(i), i});
    } else {
      out.push_back(FoxTerm{-1, r.prefix(i + 1), i});
    }
  }
  return out;
}

FreeRingElement collapse(const FoxTermList& terms) {
  FreeRingElement e;
  for (const FoxTerm& t : terms) e += FreeRingElement::monomial(t.word, t.sign);
  return e;
}

FreeRingElement apply_nielsen(NielsenMove m, const FreeRingElement& e) {
  FreeRingElement out;
  for (const auto& [w, c] : e.terms()) {
    out += FreeRingElement::monomial(apply_nielsen(m, w), c);
  }
  return out;
}

bool fundamental_formula_check(const Word& w) {
  const FreeRingElement x_minus_1 =
      FreeRingElement::monomial(Word::generator(Gen::x)) - FreeRingElement::one();
  const FreeRingElement y_minus_1 =
      FreeRingElement::monomial(Word::generator(Gen::y)) - FreeRingElement::one();
  const FreeRingElement lhs =
      fox_derivative(w, Gen::x) * x_minus_1 + fox_derivative(w, Gen::y) * y_minus_1;
  const FreeRingElement rhs = FreeRingElement::monomial(w) - FreeRingElement::one();
  return lhs == rhs;
}

bool chain_rule_check(NielsenMove m, const Word& r, Gen z) {
  const FreeRingElement lhs = fox_derivative(apply_nielsen(m, r), z);
  const FreeRingElement rhs =
      apply_nielsen(m, fox_derivative(r, Gen::x)) *
          fox_derivative(nielsen_generator_image(m, Gen::x), z) +
      apply_nielsen(m, fox_derivative(r, Gen::y)) *
          fox_derivative(nielsen_generator_image(m, Gen::y), z);
  return lhs == rhs;
}

}  // namespace onerel
