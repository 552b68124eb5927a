#include "uptori/words.hpp"

#include <algorithm>
#include <string>

#include "uptori/error.hpp"

namespace uptori {

namespace {

void check_symbols(const Alphabet& alphabet, std::span<const Symbol> symbols) {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (!fits(symbols[i], alphabet)) {
      throw Error(ErrorKind::BadSymbol, "letter " + std::to_string(symbols[i].value()) + " at position " +
                                            std::to_string(i) + " is outside alphabet of size " +
                                            std::to_string(alphabet.size()));
    }
  }
}

std::size_t count_diamonds(std::span<const Symbol> s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](Symbol x) { return x.is_diamond(); }));
}

Triviality classify(std::span<const Symbol> s) {
  const std::size_t d = count_diamonds(s);
  if (d == 0) return Triviality::NoDiamonds;
  if (d == s.size()) return Triviality::AllDiamonds;
  return Triviality::NontrivialPartial;
}

std::vector<Code> place_values(int radix, int n) {
  std::vector<Code> w(static_cast<std::size_t>(n));
  Code p = 1;
  for (int j = n - 1; j >= 0; --j) {
    w[static_cast<std::size_t>(j)] = p;
    if (j > 0) p *= static_cast<Code>(radix);
  }
  return w;
}

struct WindowScan {
  CoverageLedger ledger;
  int min_diamonds;
  int max_diamonds;
};

// Scans `count` windows of length n starting at 0..count-1, reading symbol
// (start + j) mod |s|.
WindowScan scan_windows(std::span<const Symbol> s, int radix, int n, std::size_t count) {
  WindowScan scan{CoverageLedger(static_cast<std::uint64_t>(radix), n), n + 1, -1};
  const auto weights = place_values(radix, n);
  std::vector<Code> diamond_weights;
  diamond_weights.reserve(static_cast<std::size_t>(n));
  const std::size_t len = s.size();
  for (std::size_t start = 0; start < count; ++start) {
    Code base = 0;
    diamond_weights.clear();
    for (int j = 0; j < n; ++j) {
      const Symbol x = s[(start + static_cast<std::size_t>(j)) % len];
      if (x.is_diamond()) {
        diamond_weights.push_back(weights[static_cast<std::size_t>(j)]);
      } else {
        base += static_cast<Code>(x.value()) * weights[static_cast<std::size_t>(j)];
      }
    }
    const int d = static_cast<int>(diamond_weights.size());
    scan.min_diamonds = std::min(scan.min_diamonds, d);
    scan.max_diamonds = std::max(scan.max_diamonds, d);
    scan.ledger.add_expansions(base, diamond_weights);
  }
  return scan;
}

std::optional<int> common_count(const WindowScan& scan) {
  if (scan.min_diamonds == scan.max_diamonds) return scan.min_diamonds;
  return std::nullopt;
}

void check_window_length(int n) {
  if (n < 1) throw Error(ErrorKind::BadWindowLength, "window length must be >= 1, got " + std::to_string(n));
}

void check_linear_window(std::size_t len, int n) {
  check_window_length(n);
  if (len < static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::BadWindowLength,
                "word of length " + std::to_string(len) + " has no window of length " + std::to_string(n));
  }
}

}  // namespace

PartialWord::PartialWord(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  check_symbols(alphabet_, symbols_);
}

bool PartialWord::is_total() const { return count_diamonds(symbols_) == 0; }
std::size_t PartialWord::diamond_count() const { return count_diamonds(symbols_); }

CyclicPartialWord::CyclicPartialWord(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(ErrorKind::LengthMismatch, "cyclic word must be nonempty");
  check_symbols(alphabet_, symbols_);
}

Symbol CyclicPartialWord::at(std::int64_t i) const {
  const auto n = static_cast<std::int64_t>(symbols_.size());
  return symbols_[static_cast<std::size_t>(((i % n) + n) % n)];
}

bool CyclicPartialWord::is_total() const { return count_diamonds(symbols_) == 0; }
std::size_t CyclicPartialWord::diamond_count() const { return count_diamonds(symbols_); }

bool covers_word(const PartialWord& cover, const PartialWord& target) {
  if (cover.size() != target.size()) {
    throw Error(ErrorKind::LengthMismatch, "cover has length " + std::to_string(cover.size()) + ", target " +
                                               std::to_string(target.size()));
  }
  if (!(cover.alphabet() == target.alphabet())) throw Error(ErrorKind::BadAlphabet, "alphabets differ");
  if (!target.is_total()) throw Error(ErrorKind::TargetNotTotal, "target contains a diamond");
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (!cover[i].is_diamond() && cover[i] != target[i]) return false;
  }
  return true;
}

CyclicPartialWord rotate(const CyclicPartialWord& c, std::int64_t i) {
  const auto n = static_cast<std::int64_t>(c.size());
  const auto shift = static_cast<std::size_t>(((i % n) + n) % n);
  std::vector<Symbol> out(c.symbols().begin(), c.symbols().end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift), out.end());
  return CyclicPartialWord(c.alphabet(), std::move(out));
}

std::size_t least_rotation_index(std::span<const Symbol> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  // Booth's failure-function scan over the doubled string.
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Symbol sj = s[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {  // i == -1 here
      if (sj < s[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

CyclicPartialWord canonical_rotation(const CyclicPartialWord& c) {
  return rotate(c, static_cast<std::int64_t>(least_rotation_index(c.symbols())));
}

bool cyclically_equal(const CyclicPartialWord& x, const CyclicPartialWord& y) {
  if (x.size() != y.size() || !(x.alphabet() == y.alphabet())) return false;
  return canonical_rotation(x) == canonical_rotation(y);
}

std::vector<PartialWord> windows(const CyclicPartialWord& c, int n) {
  check_window_length(n);
  std::vector<PartialWord> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<Symbol> w;
    w.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) w.push_back(c.at(static_cast<std::int64_t>(i) + j));
    out.emplace_back(c.alphabet(), std::move(w));
  }
  return out;
}

CoverageLedger coverage_ledger(const PartialWord& w, int n) {
  check_linear_window(w.size(), n);
  return scan_windows(w.symbols(), w.alphabet().size(), n, w.size() - static_cast<std::size_t>(n) + 1).ledger;
}

CoverageLedger coverage_ledger(const CyclicPartialWord& c, int n) {
  check_window_length(n);
  return scan_windows(c.symbols(), c.alphabet().size(), n, c.size()).ledger;
}

Code word_code(std::span<const Symbol> word, int radix) {
  Code code = 0;
  for (Symbol s : word) {
    if (s.is_diamond()) throw Error(ErrorKind::TargetNotTotal, "cannot encode a word containing a diamond");
    code = code * static_cast<Code>(radix) + static_cast<Code>(s.value());
  }
  return code;
}

PartialWord decode_word(Code code, const Alphabet& alphabet, int n) {
  std::vector<Symbol> out(static_cast<std::size_t>(n));
  const auto radix = static_cast<Code>(alphabet.size());
  for (int j = n - 1; j >= 0; --j) {
    out[static_cast<std::size_t>(j)] = Symbol::letter(static_cast<int>(code % radix));
    code /= radix;
  }
  return PartialWord(alphabet, std::move(out));
}

VerificationReport verify_upword(const PartialWord& w, int n) {
  check_linear_window(w.size(), n);
  auto scan = scan_windows(w.symbols(), w.alphabet().size(), n, w.size() - static_cast<std::size_t>(n) + 1);
  VerificationReport report = summarize(scan.ledger);
  report.diamondicity = common_count(scan);
  report.triviality = classify(w.symbols());
  return report;
}

VerificationReport verify_upcycle(const CyclicPartialWord& c, int n) {
  check_window_length(n);
  auto scan = scan_windows(c.symbols(), c.alphabet().size(), n, c.size());
  VerificationReport report = summarize(scan.ledger);
  report.diamondicity = common_count(scan);
  report.triviality = classify(c.symbols());
  return report;
}

std::optional<int> diamondicity_of(const CyclicPartialWord& c, int n) {
  check_window_length(n);
  int lo = n + 1, hi = -1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int d = 0;
    for (int j = 0; j < n; ++j) d += c.at(static_cast<std::int64_t>(i) + j).is_diamond() ? 1 : 0;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  if (lo == hi) return lo;
  return std::nullopt;
}

std::optional<int> diamondicity_of(const PartialWord& w, int n) {
  check_linear_window(w.size(), n);
  int lo = n + 1, hi = -1;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= w.size(); ++i) {
    int d = 0;
    for (int j = 0; j < n; ++j) d += w[i + static_cast<std::size_t>(j)].is_diamond() ? 1 : 0;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  if (lo == hi) return lo;
  return std::nullopt;
}

VerificationReport verify_index_cycle(std::span<const std::uint32_t> values, std::uint32_t radix, int n) {
  check_window_length(n);
  if (values.empty()) throw Error(ErrorKind::LengthMismatch, "index cycle must be nonempty");
  CoverageLedger ledger(radix, n);
  const std::size_t len = values.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (values[i] >= radix) {
      throw Error(ErrorKind::BadSymbol, "index " + std::to_string(values[i]) + " outside 0.." +
                                            std::to_string(radix - 1));
    }
  }
  for (std::size_t start = 0; start < len; ++start) {
    Code code = 0;
    for (int j = 0; j < n; ++j) code = code * radix + values[(start + static_cast<std::size_t>(j)) % len];
    ledger.add(code);
  }
  VerificationReport report = summarize(ledger);
  report.diamondicity = 0;
  report.triviality = Triviality::NoDiamonds;
  return report;
}

}  // namespace uptori
