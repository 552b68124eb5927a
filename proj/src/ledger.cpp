#include "uptori/ledger.hpp"

#include <algorithm>

#include "uptori/error.hpp"

namespace uptori {

std::uint64_t checked_pow(std::uint64_t radix, int exponent) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (radix != 0 && result > UINT64_MAX / radix) {
      throw Error(ErrorKind::TooLarge,
                  std::to_string(radix) + "^" + std::to_string(exponent) + " overflows 64 bits");
    }
    result *= radix;
  }
  return result;
}

CoverageLedger::CoverageLedger(std::uint64_t radix, int word_length)
    : radix_(radix), word_length_(word_length), code_space_(checked_pow(radix, word_length)) {
  if (radix < 1) throw Error(ErrorKind::BadAlphabet, "ledger radix must be positive");
  if (word_length < 1) throw Error(ErrorKind::BadWindowLength, "ledger word length must be >= 1");
  if (code_space_ <= kDenseLimit) dense_.assign(code_space_, 0);
}

void CoverageLedger::add(Code code, std::uint32_t times) {
  mass_ += times;
  bump(code, times);
}

void CoverageLedger::bump(Code code, std::uint32_t times) {
  auto saturating = [times](std::uint16_t& slot) {
    std::uint32_t next = slot + times;
    slot = static_cast<std::uint16_t>(std::min<std::uint32_t>(next, kSaturated));
  };
  if (!dense_.empty()) {
    saturating(dense_[code]);
  } else {
    saturating(sparse_[code]);
  }
}

std::uint32_t CoverageLedger::count(Code code) const {
  if (!dense_.empty()) return code < code_space_ ? dense_[code] : 0;
  auto it = sparse_.find(code);
  return it == sparse_.end() ? 0 : it->second;
}

void CoverageLedger::add_expansions(Code base, std::span<const Code> diamond_weights) {
  if (diamond_weights.empty()) {
    add(base);
    return;
  }
  // Odometer over radix^d assignments.
  std::vector<std::uint64_t> digits(diamond_weights.size(), 0);
  Code code = base;
  for (;;) {
    add(code);
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < radix_) {
        code += diamond_weights[i];
        break;
      }
      code -= diamond_weights[i] * (radix_ - 1);
      digits[i] = 0;
    }
    if (i == digits.size()) break;
  }
}

void CoverageLedger::merge(const CoverageLedger& other) {
  if (other.radix_ != radix_ || other.word_length_ != word_length_) {
    throw Error(ErrorKind::ShapeMismatch, "cannot merge ledgers over different word spaces");
  }
  other.for_each_nonzero([this](Code c, std::uint32_t n) { bump(c, n); });
  mass_ += other.mass_;
}

bool CoverageLedger::all_exactly_once() const {
  if (!dense_.empty()) {
    return std::all_of(dense_.begin(), dense_.end(), [](std::uint16_t n) { return n == 1; });
  }
  if (sparse_.size() != code_space_) return false;
  return std::all_of(sparse_.begin(), sparse_.end(), [](const auto& kv) { return kv.second == 1; });
}

std::uint64_t CoverageLedger::distinct_covered() const {
  if (!dense_.empty()) {
    return static_cast<std::uint64_t>(
        std::count_if(dense_.begin(), dense_.end(), [](std::uint16_t n) { return n != 0; }));
  }
  return sparse_.size();
}

bool CoverageLedger::operator==(const CoverageLedger& other) const {
  if (radix_ != other.radix_ || word_length_ != other.word_length_ || mass_ != other.mass_) return false;
  if (!dense_.empty()) return dense_ == other.dense_;
  return sparse_ == other.sparse_;
}

std::string_view to_string(Triviality t) {
  switch (t) {
    case Triviality::NontrivialPartial: return "nontrivial";
    case Triviality::NoDiamonds: return "no-diamonds";
    case Triviality::AllDiamonds: return "all-diamonds";
    case Triviality::DegenerateShape: return "degenerate-shape";
  }
  return "?";
}

VerificationReport summarize(const CoverageLedger& ledger) {
  VerificationReport report;
  const auto cap = VerificationReport::kListCap;
  ledger.for_each_nonzero([&](Code c, std::uint32_t n) {
    if (n > 1) {
      ++report.duplicated_total;
      if (!ledger.dense() || report.duplicated.size() < cap) report.duplicated.push_back({c, n});
    }
  });
  // The sparse table iterates in hash order; keep reports deterministic.
  std::sort(report.duplicated.begin(), report.duplicated.end(),
            [](const CodeCount& x, const CodeCount& y) { return x.code < y.code; });
  if (report.duplicated.size() > cap) report.duplicated.resize(cap);

  const std::uint64_t covered = ledger.distinct_covered();
  report.missing_total = ledger.code_space() - covered;
  for (Code c = 0; c < ledger.code_space() && report.missing.size() < std::min<std::uint64_t>(cap, report.missing_total);
       ++c) {
    if (ledger.count(c) == 0) report.missing.push_back(c);
  }
  report.valid = report.missing_total == 0 && report.duplicated_total == 0;
  return report;
}

}  // namespace uptori
