#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace uptori {

// Base-a value of a total word (or row-major matrix), most significant symbol first.
using Code = std::uint64_t;

// radix^exponent, throwing TooLarge when it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t radix, int exponent);

// Exact multiset of covered total words of a fixed length, keyed by Code.
// Counts saturate at 0xFFFF; mass() keeps the exact total.
class CoverageLedger {
 public:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 26;
  static constexpr std::uint32_t kSaturated = 0xFFFF;

  CoverageLedger(std::uint64_t radix, int word_length);

  std::uint64_t radix() const noexcept { return radix_; }
  int word_length() const noexcept { return word_length_; }
  std::uint64_t code_space() const noexcept { return code_space_; }
  bool dense() const noexcept { return !dense_.empty() || code_space_ == 0; }
  std::uint64_t mass() const noexcept { return mass_; }

  void add(Code code, std::uint32_t times = 1);
  std::uint32_t count(Code code) const;

  // Every code of every assignment of letters to the diamonds of one window.
  // base has zeros at the diamond positions; weights are their place values.
  void add_expansions(Code base, std::span<const Code> diamond_weights);

  void merge(const CoverageLedger& other);

  bool all_exactly_once() const;
  std::uint64_t distinct_covered() const;

  template <class F>
  void for_each_nonzero(F&& f) const {
    if (!dense_.empty()) {
      for (std::uint64_t c = 0; c < code_space_; ++c) {
        if (dense_[c] != 0) f(Code{c}, std::uint32_t{dense_[c]});
      }
    } else {
      for (const auto& [c, n] : sparse_) f(c, std::uint32_t{n});
    }
  }

  bool operator==(const CoverageLedger& other) const;

 private:
  void bump(Code code, std::uint32_t times);

  std::uint64_t radix_;
  int word_length_;
  std::uint64_t code_space_;
  std::uint64_t mass_ = 0;
  std::vector<std::uint16_t> dense_;
  std::unordered_map<Code, std::uint16_t> sparse_;
};

enum class Triviality { NontrivialPartial, NoDiamonds, AllDiamonds, DegenerateShape };

std::string_view to_string(Triviality t);

struct CodeCount {
  Code code;
  std::uint32_t count;
  bool operator==(const CodeCount&) const = default;
};

struct VerificationReport {
  static constexpr std::size_t kListCap = 32;

  bool valid = false;
  std::vector<Code> missing;
  std::uint64_t missing_total = 0;
  std::vector<CodeCount> duplicated;
  std::uint64_t duplicated_total = 0;
  std::optional<int> diamondicity;
  Triviality triviality = Triviality::NontrivialPartial;
};

// Fills valid/missing/duplicated from a ledger; the caller sets the rest.
VerificationReport summarize(const CoverageLedger& ledger);

}  // namespace uptori
