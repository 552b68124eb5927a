#pragma once

#include <compare>
#include <cstdint>

#include "uptori/error.hpp"

namespace uptori {

// Letters are 0..size-1. The text format renders 0-9 then a-z, hence the cap.
class Alphabet {
 public:
  static constexpr int kMaxSize = 36;

  explicit Alphabet(int size) : size_(size) {
    if (size < 1 || size > kMaxSize) {
      throw Error(ErrorKind::BadAlphabet, "alphabet size must be in 1..36, got " + std::to_string(size));
    }
  }

  int size() const noexcept { return size_; }
  bool operator==(const Alphabet&) const = default;

 private:
  int size_;
};

// A letter or the wildcard. Ordering puts every letter before the wildcard,
// which is the order canonical forms minimize over.
class Symbol {
 public:
  static constexpr std::uint8_t kDiamondRaw = 0xFF;

  constexpr Symbol() = default;

  static constexpr Symbol letter(int value) { return Symbol(static_cast<std::uint8_t>(value)); }
  static constexpr Symbol diamond() { return Symbol(kDiamondRaw); }

  constexpr bool is_diamond() const noexcept { return raw_ == kDiamondRaw; }
  constexpr bool is_letter() const noexcept { return raw_ != kDiamondRaw; }
  // Only meaningful for letters.
  constexpr int value() const noexcept { return raw_; }
  constexpr std::uint8_t raw() const noexcept { return raw_; }

  constexpr auto operator<=>(const Symbol&) const = default;

 private:
  constexpr explicit Symbol(std::uint8_t raw) : raw_(raw) {}
  std::uint8_t raw_ = 0;
};

inline constexpr Symbol kDiamond = Symbol::diamond();

inline bool fits(Symbol s, const Alphabet& alphabet) {
  return s.is_diamond() || s.value() < alphabet.size();
}

}  // namespace uptori
