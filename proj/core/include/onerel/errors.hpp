#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onerel {

// Malformed word or presentation text. `position` is the 0-based offset of
// the offending character when one can be named.
class ParseError : public std::runtime_error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// A would-be character that is identically zero or does not vanish on the
// relator, i.e. does not define a homomorphism to Z through the
// abelianisation.
class CharacterError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace onerel
