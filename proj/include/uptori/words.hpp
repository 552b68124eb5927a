#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uptori/ledger.hpp"
#include "uptori/symbol.hpp"

namespace uptori {

class PartialWord {
 public:
  PartialWord(Alphabet alphabet, std::vector<Symbol> symbols);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  bool is_total() const;
  std::size_t diamond_count() const;

  bool operator==(const PartialWord&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

// A cyclic partial word stored with an explicit start index 0. operator==
// compares representations; cyclically_equal() compares cyclic words.
class CyclicPartialWord {
 public:
  CyclicPartialWord(Alphabet alphabet, std::vector<Symbol> symbols);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  // Index taken modulo size(); negative allowed.
  Symbol at(std::int64_t i) const;

  bool is_total() const;
  std::size_t diamond_count() const;
  PartialWord linear() const { return PartialWord(alphabet_, symbols_); }

  bool operator==(const CyclicPartialWord&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

// Positionwise: every cover symbol is a diamond or the identical letter.
bool covers_word(const PartialWord& cover, const PartialWord& target);

// sigma^i: result[j] = c[(j + i) mod |c|].
CyclicPartialWord rotate(const CyclicPartialWord& c, std::int64_t i);

// Start index of the lexicographically least rotation (Booth).
std::size_t least_rotation_index(std::span<const Symbol> s);
CyclicPartialWord canonical_rotation(const CyclicPartialWord& c);
bool cyclically_equal(const CyclicPartialWord& x, const CyclicPartialWord& y);

// |c| windows; window i is c[i..i+n-1] read cyclically.
std::vector<PartialWord> windows(const CyclicPartialWord& c, int n);

// Linear windows are the |w|-n+1 substrings; cyclic windows wrap.
CoverageLedger coverage_ledger(const PartialWord& w, int n);
CoverageLedger coverage_ledger(const CyclicPartialWord& c, int n);

// Code of a total word; throws TargetNotTotal on a diamond.
Code word_code(std::span<const Symbol> word, int radix);
PartialWord decode_word(Code code, const Alphabet& alphabet, int n);

VerificationReport verify_upword(const PartialWord& w, int n);
VerificationReport verify_upcycle(const CyclicPartialWord& c, int n);

std::optional<int> diamondicity_of(const CyclicPartialWord& c, int n);
std::optional<int> diamondicity_of(const PartialWord& w, int n);

// Verification of total cyclic sequences over an index alphabet of any size
// (rotation sequences, De Bruijn cycles over {0..L-1}).
VerificationReport verify_index_cycle(std::span<const std::uint32_t> values, std::uint32_t radix, int n);

}  // namespace uptori
