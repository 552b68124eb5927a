#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "uptori/words.hpp"

namespace uptori {

// A set of cyclic partial words for A^x. Members are kept in canonical
// (least) rotation, sorted, and must be pairwise cyclically distinct.
class Family {
 public:
  Family(Alphabet alphabet, int word_length, std::vector<CyclicPartialWord> members);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int word_length() const noexcept { return word_length_; }
  const std::vector<CyclicPartialWord>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool equal_lengths() const;
  bool contains(const CyclicPartialWord& w) const;

 private:
  Alphabet alphabet_;
  int word_length_;
  std::vector<CyclicPartialWord> members_;
};

struct FamilyReport : VerificationReport {
  // Codes covered by two different members.
  std::vector<Code> cross_member;
  std::uint64_t cross_member_total = 0;
  // Codes covered twice inside a single member.
  std::vector<Code> within_member;
  std::uint64_t within_member_total = 0;
  // Present for members longer than x that have a constant window diamond count.
  std::vector<std::optional<int>> member_diamondicity;
  bool equal_lengths = false;

  bool is_upfamily() const { return valid && equal_lengths; }
};

// Valid iff every word of A^x is covered exactly once overall and no word is
// covered by two members. Reports follow the order of `members`.
FamilyReport verify_members(std::span<const CyclicPartialWord> members, int x);
FamilyReport verify_family(const Family& f, int x);

class CutSet {
 public:
  CutSet(std::vector<std::size_t> indices, std::size_t source_length);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t source_length() const noexcept { return source_length_; }

 private:
  std::vector<std::size_t> indices_;
  std::size_t source_length_;
};

// Arcs between consecutive cuts, the last one wrapping to the first cut, in cut order.
std::vector<CyclicPartialWord> slice_arcs(const CyclicPartialWord& u, const CutSet& cuts);
Family slice(const CyclicPartialWord& u, const CutSet& cuts, int x);

struct SlicingEntry {
  std::vector<std::size_t> cuts;
  bool valid;
  bool equal_lengths;
};

struct SlicingReport {
  std::size_t block = 0;
  std::size_t scanned = 0;
  // Valid slicings counting the single-member one (u itself).
  std::size_t valid_including_whole = 0;
  // Valid slicings with at least two members.
  std::size_t valid_proper = 0;
  bool whole_valid = false;
  std::size_t valid_upfamilies = 0;
  std::size_t equal_length_subsets = 0;
  // Every equal-length slicing verified (and is therefore an upfamily).
  bool equal_length_all_valid = true;
  std::vector<SlicingEntry> entries;
};

// Cut 0 is always present; every subset of the remaining multiples of
// `block` is sliced and verified.
SlicingReport enumerate_slicings(const CyclicPartialWord& u, std::size_t block, int x);

struct ProbeResult {
  std::size_t offset;
  bool valid;
};

// Slices at {offset, offset + piece_len, ...} for offsets 0..piece_len-1
// (0..|u|-1 with full_range).
std::vector<ProbeResult> probe_equal_slicings(const CyclicPartialWord& u, std::size_t piece_len, int x,
                                              bool full_range = false);

}  // namespace uptori
