#pragma once

// Free-group word algebra over two generators: parsing, free and cyclic
// reduction, inversion, cyclic permutation, proper-power detection, and the
// elementary Nielsen automorphisms.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "onerel/errors.hpp"

namespace onerel {

enum class Gen : std::uint8_t { x = 0, y = 1 };

constexpr Gen other(Gen g) { return g == Gen::x ? Gen::y : Gen::x; }

struct Letter {
  Gen gen;
  std::int8_t exp;  // +1 or -1

  constexpr Letter inverse() const {
    return Letter{gen, static_cast<std::int8_t>(-exp)};
  }
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

// A freely reduced word; the empty word is the identity. Reduction happens
// eagerly on construction, so every Word value is reduced and immutable.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(Gen g, long long exp = 1);  // g^exp

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word operator*(const Word& rhs) const;  // concatenation, reduced
  Word inverse() const;
  Word prefix(std::size_t n) const;       // first n letters
  Word suffix_from(std::size_t n) const;  // letters from index n onwards

  std::array<long long, 2> exponent_sums() const;  // (x-sum, y-sum)
  std::size_t occurrences(Gen g) const;            // count of g or g^{-1}
  bool cyclically_reduced() const;

  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

// Display letters for the two generators; lowercase in word text, uppercase
// denotes the inverse.
struct GeneratorNames {
  char x = 'x';
  char y = 'y';
};

Word parse_word(std::string_view text, GeneratorNames names = {});
std::string render_word(const Word& w, GeneratorNames names = {});

struct Presentation {
  GeneratorNames names;
  Word relator;
  bool cyclically_reduced = false;
};

Presentation make_presentation(GeneratorNames names, Word relator);

// Grammar: "<g1>,<g2>|<word>" with single lowercase generator letters and the
// uppercase-inverse convention; the empty word is allowed.
Presentation parse_presentation(std::string_view text);
std::string render_presentation(const Presentation& p);

// Returns (core, conjugator) with w == conjugator * core * conjugator^{-1}
// and core cyclically reduced.
std::pair<Word, Word> cyclic_reduce(const Word& w);

struct ProperPower {
  Word root;
  long long exponent;  // >= 2

  friend bool operator==(const ProperPower&, const ProperPower&) = default;
};

// Maximal-exponent decomposition w == root^exponent with exponent >= 2, if
// one exists. Throws std::invalid_argument on non-cyclically-reduced input.
std::optional<ProperPower> is_proper_power(const Word& w);

// Left rotation by k positions; input must be cyclically reduced so that the
// rotation cannot create cancellations.
Word cyclic_permute(const Word& w, long long k);

// The three elementary Nielsen transformations of the free group on {x, y}:
// f1 swaps x and y, f2 inverts x, f3 maps x to xy; y is fixed by f2 and f3.
enum class NielsenMove { swap_generators, invert_x, right_multiply };

Word nielsen_generator_image(NielsenMove m, Gen g);
Word apply_nielsen(NielsenMove m, const Word& w);

std::string_view to_string(NielsenMove m);

}  // namespace onerel
