#pragma once

#include <cstdint>
#include <vector>

#include "uptori/families.hpp"
#include "uptori/generate.hpp"
#include "uptori/grids.hpp"
#include "uptori/words.hpp"

namespace uptori {

// A word over {0..modulus-1} giving relative row rotations.
class RotationSequence {
 public:
  RotationSequence(std::vector<std::uint32_t> values, std::uint32_t modulus);
  static RotationSequence from_word(const CyclicPartialWord& s, std::uint32_t modulus);

  const std::vector<std::uint32_t>& values() const noexcept { return values_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return values_.size(); }
  // Sum of all values (not reduced).
  std::uint64_t rotation_sum() const;

 private:
  std::vector<std::uint32_t> values_;
  std::uint32_t modulus_;
};

struct Placement {
  std::int64_t row;
  std::int64_t col;
  bool operator==(const Placement&) const = default;
};

// p x |w| matrix: w on top, diamonds below.
PartialGrid mu(const PartialWord& w, int n, int p);

// Row k is sigma^(s_0 + ... + s_k)(u).
PartialGrid build_m_us(const CyclicPartialWord& u, const RotationSequence& s);

struct Certificate {
  PartialGrid torus;
  VerificationReport report;
};

// Checks u is an upcycle for A^x and s a De Bruijn cycle over {0..|u|-1}^y
// (y >= 2), builds m(u, s) and verifies it for (y+1) x x windows. Throws
// CertificationFailed if the verified diamondicity is not d(y+1).
Certificate certify_m_us(const CyclicPartialWord& u, const RotationSequence& s, int x, int y);

struct LocateResult {
  Placement placement;
  std::vector<std::uint32_t> a;  // a_n: rotation of u covering row n in its first x symbols
  std::vector<std::uint32_t> b;  // b_n = a_{n+1} - a_n mod |u|
  std::size_t s_index;           // i with s_i .. s_{i+y-1} = b
};

// Finds the window of m(u, s) covering a total (y+1) x x matrix without scanning.
class Locator {
 public:
  Locator(const CyclicPartialWord& u, const RotationSequence& s, int x, int y);

  LocateResult locate(const PartialGrid& p) const;

 private:
  int x_;
  int y_;
  std::uint32_t length_;
  std::vector<std::int64_t> rotation_by_word_;  // word code -> a, or -1
  std::vector<std::int64_t> index_by_b_;        // b code -> i, or -1
  std::vector<std::uint64_t> prefix_;           // prefix_[i] = s_0 + ... + s_{i-1} mod |u|
  std::size_t s_size_;
};

LocateResult locate(const PartialGrid& p, const CyclicPartialWord& u, const RotationSequence& s);

// Rows phi_n = sigma^(r_0 + ... + r_{n-1})(f_n) for n < v; throws
// LemmaViolation if phi_v != phi_0. A-items index family.members().
PartialGrid build_m_W(const Family& family, const AlternatingWord& w);

// Uses unroll(alternating_debruijn(|F|, |F_0|, y)).
PartialGrid torus_from_family(const Family& family, int y);

// Replaces the diamonds of u^a with 0^k 1^k ... (a-1)^k, k = number of diamonds.
CyclicPartialWord lift(const CyclicPartialWord& u, int n);

struct NoDiamondicityResult {
  Family lifted;
  PartialGrid torus;
};

// Lifts the short members of a quasi-family meeting the length/diamond
// conditions, re-verifies the union as an upfamily and builds m(W).
NoDiamondicityResult build_no_diamondicity(const Family& quasi, int x, int y);

}  // namespace uptori
