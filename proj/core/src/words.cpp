#include "onerel/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace onerel {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l.exp != 1 && l.exp != -1) {
      throw std::invalid_argument("letter exponent must be +1 or -1");
    }
    push_reduced(letters_, l);
  }
}

Word Word::generator(Gen g, long long exp) {
  std::vector<Letter> ls;
  const std::int8_t sign = exp >= 0 ? std::int8_t{1} : std::int8_t{-1};
  for (long long i = 0; i < std::llabs(exp); ++i) ls.push_back(Letter{g, sign});
  return Word(std::move(ls));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.reserve(out.size() + rhs.letters_.size());
  for (Letter l : rhs.letters_) push_reduced(out, l);
  Word w;
  w.letters_ = std::move(out);  // already reduced
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  Word w;
  w.letters_ = std::move(out);  // inverse of a reduced word is reduced
  return w;
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, letters_.size());
  Word w;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n));
  return w;
}

Word Word::suffix_from(std::size_t n) const {
  n = std::min(n, letters_.size());
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(n), letters_.end());
  return w;
}

std::array<long long, 2> Word::exponent_sums() const {
  std::array<long long, 2> sums{0, 0};
  for (Letter l : letters_) sums[static_cast<std::size_t>(l.gen)] += l.exp;
  return sums;
}

std::size_t Word::occurrences(Gen g) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(),
                    [g](Letter l) { return l.gen == g; }));
}

bool Word::cyclically_reduced() const {
  if (letters_.size() < 2) return true;
  return letters_.front() != letters_.back().inverse();
}

Word parse_word(std::string_view text, GeneratorNames names) {
  std::vector<Letter> ls;
  ls.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const bool inverted = std::isupper(static_cast<unsigned char>(c)) != 0;
    Gen g;
    if (lower == names.x) {
      g = Gen::x;
    } else if (lower == names.y) {
      g = Gen::y;
    } else {
      throw ParseError("unknown letter '" + std::string(1, c) + "' at position " +
                           std::to_string(i) + "; expected one of '" +
                           std::string(1, names.x) + "', '" + std::string(1, names.y) +
                           "' or their uppercase inverses",
                       i);
    }
    ls.push_back(Letter{g, static_cast<std::int8_t>(inverted ? -1 : 1)});
  }
  return Word(std::move(ls));
}

std::string render_word(const Word& w, GeneratorNames names) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    char c = l.gen == Gen::x ? names.x : names.y;
    if (l.exp < 0) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out.push_back(c);
  }
  return out;
}

Presentation make_presentation(GeneratorNames names, Word relator) {
  Presentation p;
  p.names = names;
  p.cyclically_reduced = relator.cyclically_reduced();
  p.relator = std::move(relator);
  return p;
}

Presentation parse_presentation(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw ParseError("presentation must be of the form \"g1,g2|word\" (missing '|')");
  }
  if (text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError("presentation must contain exactly one '|'");
  }
  const std::string_view gens = text.substr(0, bar);
  if (gens.size() != 3 || gens[1] != ',') {
    throw ParseError("generator list must be two single letters separated by ',' (got \"" +
                     std::string(gens) + "\")");
  }
  const char gx = gens[0];
  const char gy = gens[2];
  auto valid = [](char c) { return std::islower(static_cast<unsigned char>(c)) != 0; };
  if (!valid(gx)) throw ParseError("generator must be a lowercase letter", 0);
  if (!valid(gy)) throw ParseError("generator must be a lowercase letter", 2);
  if (gx == gy) throw ParseError("the two generators must be distinct letters", 2);
  GeneratorNames names{gx, gy};
  Word relator = parse_word(text.substr(bar + 1), names);
  return make_presentation(names, std::move(relator));
}

std::string render_presentation(const Presentation& p) {
  std::string out;
  out.push_back(p.names.x);
  out.push_back(',');
  out.push_back(p.names.y);
  out.push_back('|');
  out += render_word(p.relator, p.names);
  return out;
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  std::vector<Letter> core(w.letters());
  std::vector<Letter> conj;
  while (core.size() >= 2 && core.front() == core.back().inverse()) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return {Word(std::move(core)), Word(std::move(conj))};
}

std::optional<ProperPower> is_proper_power(const Word& w) {
  if (!w.cyclically_reduced()) {
    throw std::invalid_argument("is_proper_power requires a cyclically reduced word");
  }
  const auto& ls = w.letters();
  const std::size_t n = ls.size();
  if (n < 2) return std::nullopt;

  // Minimal period via the KMP failure function; w is a proper power exactly
  // when the minimal period divides the length. Cyclic reducedness makes the
  // letter-level period equal to the free-group one, since no cancellation
  // can occur between consecutive copies of the root.
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = fail[i];
    while (j > 0 && !(ls[i] == ls[j])) j = fail[j];
    if (ls[i] == ls[j]) ++j;
    fail[i + 1] = j;
  }
  const std::size_t period = n - fail[n];
  if (period == n || n % period != 0) return std::nullopt;
  return ProperPower{w.prefix(period), static_cast<long long>(n / period)};
}

Word cyclic_permute(const Word& w, long long k) {
  if (!w.cyclically_reduced()) {
    throw std::invalid_argument("cyclic_permute requires a cyclically reduced word");
  }
  if (w.empty()) return w;
  const long long n = static_cast<long long>(w.size());
  long long shift = ((k % n) + n) % n;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (long long i = 0; i < n; ++i) {
    out.push_back(w.letters()[static_cast<std::size_t>((i + shift) % n)]);
  }
  return Word(std::move(out));
}

Word nielsen_generator_image(NielsenMove m, Gen g) {
  switch (m) {
    case NielsenMove::swap_generators:
      return Word::generator(other(g));
    case NielsenMove::invert_x:
      return g == Gen::x ? Word::generator(Gen::x, -1) : Word::generator(Gen::y);
    case NielsenMove::right_multiply:
      return g == Gen::x ? Word::generator(Gen::x) * Word::generator(Gen::y)
                         : Word::generator(Gen::y);
  }
  throw std::logic_error("unknown Nielsen move");
}

Word apply_nielsen(NielsenMove m, const Word& w) {
  Word out;
  for (Letter l : w.letters()) {
    Word img = nielsen_generator_image(m, l.gen);
    out = out * (l.exp > 0 ? img : img.inverse());
  }
  return out;
}

std::string_view to_string(NielsenMove m) {
  switch (m) {
    case NielsenMove::swap_generators: return "f1 (swap generators)";
    case NielsenMove::invert_x: return "f2 (invert x)";
    case NielsenMove::right_multiply: return "f3 (x -> xy)";
  }
  return "?";
}

}  // namespace onerel
