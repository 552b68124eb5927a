#pragma once

#include <cstdint>
#include <vector>

#include "uptori/words.hpp"

namespace uptori {

// Total De Bruijn sequence over the indices 0..a-1: Hierholzer on the
// order-(n-1) De Bruijn graph, smallest edge first, rotated so the least
// rotation starts at index 0. Works for any a (rotation alphabets can be large).
std::vector<std::uint32_t> debruijn_sequence(std::uint32_t a, int n);

// Same sequence as a cyclic word; a must fit the symbol alphabet (<= 36).
CyclicPartialWord debruijn_cycle(int a, int n);

// Number of De Bruijn cycles for {0..a-1}^n counted up to rotation, by
// exhaustive search over cyclic strings. Requires a^n <= 16.
std::uint64_t count_debruijn_bruteforce(int a, int n);

// Interleaved A/B items a0 b0 a1 b1 ...; A-items sit at even positions.
class AlternatingCycle {
 public:
  AlternatingCycle(std::uint32_t size_a, std::uint32_t size_b, int n, std::vector<std::uint32_t> items);

  std::uint32_t size_a() const noexcept { return size_a_; }
  std::uint32_t size_b() const noexcept { return size_b_; }
  // Alternating words of length 2n+1 are listed exactly once.
  int n() const noexcept { return n_; }
  int order() const noexcept { return 2 * n_ + 1; }
  const std::vector<std::uint32_t>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  // v: number of (A, B) pairs.
  std::size_t pairs() const noexcept { return items_.size() / 2; }
  std::uint32_t a_item(std::size_t i) const { return items_[2 * (i % pairs())]; }
  std::uint32_t b_item(std::size_t i) const { return items_[2 * (i % pairs()) + 1]; }

 private:
  std::uint32_t size_a_;
  std::uint32_t size_b_;
  int n_;
  std::vector<std::uint32_t> items_;
};

// a_items.size() == b_items.size() + 1; read as a0 b0 a1 ... b_{v-1} a_v.
struct AlternatingWord {
  std::vector<std::uint32_t> a_items;
  std::vector<std::uint32_t> b_items;

  std::size_t v() const noexcept { return b_items.size(); }
};

// Eulerian circuit on the graph whose vertices are alternating words of
// length 2n-1 and whose edges append a (b, a) pair, smallest (b, a) first.
AlternatingCycle alternating_debruijn(std::uint32_t size_a, std::uint32_t size_b, int n);

// f_0 r_0 f_1 ... r_{v-1} f_v with f_v = f_0.
AlternatingWord unroll_alternating(const AlternatingCycle& c);

// Occurrence count of every alternating word of length 2n+1 at A-positions,
// indexed by its mixed-radix code (a0 most significant).
std::vector<std::uint32_t> alternating_occurrences(const AlternatingCycle& c);

// 0^k 1^k ... (a-1)^k.
CyclicPartialWord perfect_necklace(int a, int k);

}  // namespace uptori
