#include "uptori/families.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "uptori/error.hpp"

namespace uptori {

namespace {

std::vector<CyclicPartialWord> canonical_sorted(std::vector<CyclicPartialWord> members) {
  for (auto& m : members) m = canonical_rotation(m);
  std::sort(members.begin(), members.end(), [](const CyclicPartialWord& a, const CyclicPartialWord& b) {
    return std::lexicographical_compare(a.symbols().begin(), a.symbols().end(), b.symbols().begin(),
                                        b.symbols().end());
  });
  return members;
}

}  // namespace

Family::Family(Alphabet alphabet, int word_length, std::vector<CyclicPartialWord> members)
    : alphabet_(alphabet), word_length_(word_length), members_(canonical_sorted(std::move(members))) {
  if (word_length < 1) throw Error(ErrorKind::BadWindowLength, "family word length must be >= 1");
  if (members_.empty()) throw Error(ErrorKind::LengthMismatch, "family must have at least one member");
  for (const auto& m : members_) {
    if (!(m.alphabet() == alphabet_)) throw Error(ErrorKind::BadAlphabet, "member alphabet differs from family");
  }
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i] == members_[i - 1]) {
      throw Error(ErrorKind::DuplicateMember, "family members must be cyclically distinct");
    }
  }
}

bool Family::equal_lengths() const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](const CyclicPartialWord& m) { return m.size() == members_.front().size(); });
}

bool Family::contains(const CyclicPartialWord& w) const {
  const auto c = canonical_rotation(w);
  return std::find(members_.begin(), members_.end(), c) != members_.end();
}

FamilyReport verify_members(std::span<const CyclicPartialWord> members, int x) {
  if (x < 1) throw Error(ErrorKind::BadWindowLength, "family word length must be >= 1");
  if (members.empty()) throw Error(ErrorKind::LengthMismatch, "no members to verify");
  const Alphabet alphabet = members.front().alphabet();
  CoverageLedger combined(static_cast<std::uint64_t>(alphabet.size()), x);
  std::unordered_map<Code, std::size_t> owner;
  FamilyReport report;
  const auto cap = VerificationReport::kListCap;

  std::size_t diamonds = 0;
  std::size_t symbols = 0;
  std::optional<int> common;
  bool common_ok = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    if (!(m.alphabet() == alphabet)) throw Error(ErrorKind::BadAlphabet, "member alphabets differ");
    diamonds += m.diamond_count();
    symbols += m.size();
    const CoverageLedger own = coverage_ledger(m, x);
    own.for_each_nonzero([&](Code code, std::uint32_t n) {
      if (n > 1) {
        ++report.within_member_total;
        if (report.within_member.size() < cap) report.within_member.push_back(code);
      }
      auto [it, inserted] = owner.emplace(code, i);
      if (!inserted && it->second != i) {
        ++report.cross_member_total;
        if (report.cross_member.size() < cap) report.cross_member.push_back(code);
      }
    });
    combined.merge(own);

    const auto d = diamondicity_of(m, x);
    report.member_diamondicity.push_back(m.size() > static_cast<std::size_t>(x) ? d : std::nullopt);
    if (!d || (common && *common != *d)) common_ok = false;
    if (d) common = d;
  }
  std::sort(report.cross_member.begin(), report.cross_member.end());
  std::sort(report.within_member.begin(), report.within_member.end());

  static_cast<VerificationReport&>(report) = summarize(combined);
  report.valid = report.valid && report.cross_member_total == 0;
  if (common_ok) report.diamondicity = common;
  if (diamonds == 0) {
    report.triviality = Triviality::NoDiamonds;
  } else if (diamonds == symbols) {
    report.triviality = Triviality::AllDiamonds;
  } else {
    report.triviality = Triviality::NontrivialPartial;
  }
  report.equal_lengths = std::all_of(members.begin(), members.end(),
                                     [&](const CyclicPartialWord& m) { return m.size() == members.front().size(); });
  return report;
}

FamilyReport verify_family(const Family& f, int x) { return verify_members(f.members(), x); }

CutSet::CutSet(std::vector<std::size_t> indices, std::size_t source_length)
    : indices_(std::move(indices)), source_length_(source_length) {
  if (indices_.empty()) throw Error(ErrorKind::BadCut, "cut set must be nonempty");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] >= source_length_) {
      throw Error(ErrorKind::BadCut, "cut " + std::to_string(indices_[i]) + " outside word of length " +
                                         std::to_string(source_length_));
    }
    if (i > 0 && indices_[i] <= indices_[i - 1]) throw Error(ErrorKind::BadCut, "cuts must be strictly increasing");
  }
}

std::vector<CyclicPartialWord> slice_arcs(const CyclicPartialWord& u, const CutSet& cuts) {
  if (cuts.source_length() != u.size()) throw Error(ErrorKind::BadCut, "cut set is for a different length");
  const auto& idx = cuts.indices();
  std::vector<CyclicPartialWord> arcs;
  arcs.reserve(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const std::size_t from = idx[j];
    const std::size_t to = j + 1 < idx.size() ? idx[j + 1] : idx[0] + u.size();
    std::vector<Symbol> arc;
    arc.reserve(to - from);
    for (std::size_t k = from; k < to; ++k) arc.push_back(u[k % u.size()]);
    arcs.emplace_back(u.alphabet(), std::move(arc));
  }
  return arcs;
}

Family slice(const CyclicPartialWord& u, const CutSet& cuts, int x) {
  return Family(u.alphabet(), x, slice_arcs(u, cuts));
}

SlicingReport enumerate_slicings(const CyclicPartialWord& u, std::size_t block, int x) {
  if (block == 0 || u.size() % block != 0) {
    throw Error(ErrorKind::BadBlock, "block " + std::to_string(block) + " does not divide " + std::to_string(u.size()));
  }
  const std::size_t extra = u.size() / block - 1;
  if (extra > 24) throw Error(ErrorKind::TooLarge, "too many cut positions to enumerate");
  SlicingReport report;
  report.block = block;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << extra); ++mask) {
    std::vector<std::size_t> cuts{0};
    for (std::size_t b = 0; b < extra; ++b) {
      if (mask & (std::uint64_t{1} << b)) cuts.push_back((b + 1) * block);
    }
    const auto arcs = slice_arcs(u, CutSet(cuts, u.size()));
    const FamilyReport fr = verify_members(arcs, x);
    ++report.scanned;
    if (fr.equal_lengths) {
      ++report.equal_length_subsets;
      if (!fr.valid) report.equal_length_all_valid = false;
    }
    if (fr.valid) {
      ++report.valid_including_whole;
      if (cuts.size() >= 2) {
        ++report.valid_proper;
      } else {
        report.whole_valid = true;
      }
      if (fr.equal_lengths) ++report.valid_upfamilies;
    }
    report.entries.push_back({std::move(cuts), fr.valid, fr.equal_lengths});
  }
  return report;
}

std::vector<ProbeResult> probe_equal_slicings(const CyclicPartialWord& u, std::size_t piece_len, int x,
                                              bool full_range) {
  if (piece_len == 0 || u.size() % piece_len != 0) {
    throw Error(ErrorKind::BadBlock,
                "piece length " + std::to_string(piece_len) + " does not divide " + std::to_string(u.size()));
  }
  const std::size_t offsets = full_range ? u.size() : piece_len;
  std::vector<ProbeResult> out;
  out.reserve(offsets);
  for (std::size_t offset = 0; offset < offsets; ++offset) {
    std::vector<std::size_t> cuts;
    for (std::size_t k = 0; k < u.size(); k += piece_len) cuts.push_back((offset + k) % u.size());
    std::sort(cuts.begin(), cuts.end());
    const auto arcs = slice_arcs(u, CutSet(cuts, u.size()));
    out.push_back({offset, verify_members(arcs, x).valid});
  }
  return out;
}

}  // namespace uptori
