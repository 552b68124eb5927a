#include "uptori/construct.hpp"

#include <algorithm>
#include <string>

#include "uptori/error.hpp"

namespace uptori {

namespace {

std::uint64_t mod(std::int64_t v, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((v % mm) + mm) % mm);
}

void append_rotated(std::vector<Symbol>& cells, std::span<const Symbol> row, std::uint64_t shift) {
  const std::size_t L = row.size();
  for (std::size_t j = 0; j < L; ++j) cells.push_back(row[(j + shift) % L]);
}

}  // namespace

RotationSequence::RotationSequence(std::vector<std::uint32_t> values, std::uint32_t modulus)
    : values_(std::move(values)), modulus_(modulus) {
  if (modulus_ == 0) throw Error(ErrorKind::RotationOutOfRange, "rotation modulus must be positive");
  if (values_.empty()) throw Error(ErrorKind::LengthMismatch, "rotation sequence must be nonempty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= modulus_) {
      throw Error(ErrorKind::RotationOutOfRange, "rotation " + std::to_string(values_[i]) + " at index " +
                                                     std::to_string(i) + " is not below " + std::to_string(modulus_));
    }
  }
}

RotationSequence RotationSequence::from_word(const CyclicPartialWord& s, std::uint32_t modulus) {
  std::vector<std::uint32_t> values;
  values.reserve(s.size());
  for (Symbol x : s.symbols()) {
    if (x.is_diamond()) throw Error(ErrorKind::NotTotal, "rotation sequence cannot contain a diamond");
    values.push_back(static_cast<std::uint32_t>(x.value()));
  }
  return RotationSequence(std::move(values), modulus);
}

std::uint64_t RotationSequence::rotation_sum() const {
  std::uint64_t sum = 0;
  for (auto v : values_) sum += v;
  return sum;
}

PartialGrid mu(const PartialWord& w, int n, int p) {
  if (p < 2) throw Error(ErrorKind::BadP, "mu needs p >= 2, got " + std::to_string(p));
  if (!verify_upword(w, n).valid) throw Error(ErrorKind::NotAnUpword, "input is not an upword for length " + std::to_string(n));
  const auto cols = static_cast<int>(w.size());
  std::vector<Symbol> cells(static_cast<std::size_t>(p) * w.size(), kDiamond);
  std::copy(w.symbols().begin(), w.symbols().end(), cells.begin());
  return PartialGrid(p, cols, w.alphabet(), GridMode::Matrix, std::move(cells));
}

PartialGrid build_m_us(const CyclicPartialWord& u, const RotationSequence& s) {
  const std::uint64_t L = u.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.values()[i] >= L) {
      throw Error(ErrorKind::RotationOutOfRange,
                  "s[" + std::to_string(i) + "] = " + std::to_string(s.values()[i]) + " >= |u| = " + std::to_string(L));
    }
  }
  std::vector<Symbol> cells;
  cells.reserve(s.size() * L);
  std::uint64_t shift = 0;
  for (auto r : s.values()) {
    shift = (shift + r) % L;
    append_rotated(cells, u.symbols(), shift);
  }
  return PartialGrid(static_cast<int>(s.size()), static_cast<int>(L), u.alphabet(), GridMode::Torus, std::move(cells));
}

Certificate certify_m_us(const CyclicPartialWord& u, const RotationSequence& s, int x, int y) {
  if (y < 2) throw Error(ErrorKind::CertificationFailed, "m(u,s) needs y >= 2, got " + std::to_string(y));
  const VerificationReport ur = verify_upcycle(u, x);
  if (!ur.valid) throw Error(ErrorKind::NotAnUpcycle, "u is not an upcycle for length " + std::to_string(x));
  if (!ur.diamondicity) throw Error(ErrorKind::CertificationFailed, "upcycle has no common window diamond count");
  if (s.modulus() != u.size() || !verify_index_cycle(s.values(), static_cast<std::uint32_t>(u.size()), y).valid) {
    throw Error(ErrorKind::NotADeBruijnCycle,
                "s is not a De Bruijn cycle over {0.." + std::to_string(u.size() - 1) + "}^" + std::to_string(y));
  }
  Certificate cert{build_m_us(u, s), {}};
  cert.report = verify_uptorus(cert.torus, WindowShape(y + 1, x));
  if (!cert.report.valid) throw Error(ErrorKind::CertificationFailed, "m(u,s) failed uptorus verification");
  if (cert.report.diamondicity != *ur.diamondicity * (y + 1)) {
    throw Error(ErrorKind::CertificationFailed, "m(u,s) diamondicity differs from d(y+1)");
  }
  return cert;
}

Locator::Locator(const CyclicPartialWord& u, const RotationSequence& s, int x, int y)
    : x_(x), y_(y), length_(static_cast<std::uint32_t>(u.size())), s_size_(s.size()) {
  if (x < 1 || y < 1) throw Error(ErrorKind::BadWindowLength, "locator needs x >= 1 and y >= 1");
  const int radix = u.alphabet().size();
  rotation_by_word_.assign(checked_pow(static_cast<std::uint64_t>(radix), x), -1);
  for (std::uint32_t a = 0; a < length_; ++a) {
    std::vector<Symbol> head;
    for (int j = 0; j < x; ++j) head.push_back(u.at(static_cast<std::int64_t>(a) + j));
    coverage_ledger(PartialWord(u.alphabet(), head), x).for_each_nonzero([&](Code c, std::uint32_t) {
      if (rotation_by_word_[c] >= 0) {
        throw Error(ErrorKind::NotAnUpcycle, "word covered at two rotations of u");
      }
      rotation_by_word_[c] = a;
    });
  }

  if (s.modulus() != length_) throw Error(ErrorKind::RotationOutOfRange, "s modulus differs from |u|");
  index_by_b_.assign(checked_pow(length_, y), -1);
  const auto& v = s.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint64_t code = 0;
    for (int j = 0; j < y; ++j) code = code * length_ + v[(i + static_cast<std::size_t>(j)) % v.size()];
    if (index_by_b_[code] >= 0) throw Error(ErrorKind::NotADeBruijnCycle, "rotation word repeats in s");
    index_by_b_[code] = static_cast<std::int64_t>(i);
  }
  prefix_.assign(v.size() + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) prefix_[i + 1] = (prefix_[i] + v[i]) % length_;
}

LocateResult Locator::locate(const PartialGrid& p) const {
  if (p.rows() != y_ + 1 || p.cols() != x_) {
    throw Error(ErrorKind::ShapeMismatch, "expected a " + std::to_string(y_ + 1) + "x" + std::to_string(x_) +
                                              " matrix, got " + std::to_string(p.rows()) + "x" +
                                              std::to_string(p.cols()));
  }
  if (p.diamond_count() != 0) throw Error(ErrorKind::NotTotal, "matrix to locate contains a diamond");
  LocateResult out{};
  for (int r = 0; r <= y_; ++r) {
    const Code code = word_code(p.row(r), p.alphabet().size());
    const std::int64_t a = code < rotation_by_word_.size() ? rotation_by_word_[code] : -1;
    if (a < 0) throw Error(ErrorKind::NotAnUpcycle, "row " + std::to_string(r) + " is not covered by u");
    out.a.push_back(static_cast<std::uint32_t>(a));
  }
  std::uint64_t bcode = 0;
  for (int n = 0; n < y_; ++n) {
    const auto b = static_cast<std::uint32_t>(
        mod(static_cast<std::int64_t>(out.a[static_cast<std::size_t>(n) + 1]) - out.a[static_cast<std::size_t>(n)], length_));
    out.b.push_back(b);
    bcode = bcode * length_ + b;
  }
  const std::int64_t i = index_by_b_[bcode];
  if (i < 0) throw Error(ErrorKind::NotADeBruijnCycle, "difference word does not occur in s");
  out.s_index = static_cast<std::size_t>(i);
  out.placement.row = static_cast<std::int64_t>(mod(i - 1, s_size_));
  out.placement.col = static_cast<std::int64_t>(
      mod(static_cast<std::int64_t>(out.a[0]) - static_cast<std::int64_t>(prefix_[static_cast<std::size_t>(i)]), length_));
  return out;
}

LocateResult locate(const PartialGrid& p, const CyclicPartialWord& u, const RotationSequence& s) {
  return Locator(u, s, p.cols(), p.rows() - 1).locate(p);
}

PartialGrid build_m_W(const Family& family, const AlternatingWord& w) {
  if (!family.equal_lengths()) throw Error(ErrorKind::UnequalFamilyLengths, "m(W) needs equal member lengths");
  if (w.a_items.size() != w.b_items.size() + 1 || w.b_items.empty()) {
    throw Error(ErrorKind::LengthMismatch, "unrolled alternating word needs v >= 1 and v+1 family items");
  }
  const auto& members = family.members();
  const std::uint64_t L = members.front().size();
  for (auto f : w.a_items) {
    if (f >= members.size()) throw Error(ErrorKind::BadSymbol, "family index " + std::to_string(f) + " out of range");
  }
  for (auto r : w.b_items) {
    if (r >= L) throw Error(ErrorKind::RotationOutOfRange, "rotation " + std::to_string(r) + " >= member length");
  }
  const std::size_t v = w.v();
  std::vector<Symbol> cells;
  cells.reserve(v * L);
  std::uint64_t shift = 0;
  for (std::size_t n = 0; n < v; ++n) {
    append_rotated(cells, members[w.a_items[n]].symbols(), shift);
    shift = (shift + w.b_items[n]) % L;
  }
  // phi_v must reproduce phi_0 for the rows to close into a torus.
  const auto& first = members[w.a_items.front()];
  const auto& last = members[w.a_items.back()];
  if (w.a_items.back() != w.a_items.front() || shift != 0) {
    const auto phi_v = rotate(last, static_cast<std::int64_t>(shift));
    if (!(phi_v == first)) {
      throw Error(ErrorKind::LemmaViolation, "last row of m'(W) differs from the first (rotation sum " +
                                                 std::to_string(shift) + " mod " + std::to_string(L) + ")");
    }
  }
  return PartialGrid(static_cast<int>(v), static_cast<int>(L), family.alphabet(), GridMode::Torus, std::move(cells));
}

PartialGrid torus_from_family(const Family& family, int y) {
  if (!family.equal_lengths()) throw Error(ErrorKind::UnequalFamilyLengths, "m(W) needs equal member lengths");
  const auto L = static_cast<std::uint32_t>(family.members().front().size());
  const auto cycle = alternating_debruijn(static_cast<std::uint32_t>(family.size()), L, y);
  return build_m_W(family, unroll_alternating(cycle));
}

CyclicPartialWord lift(const CyclicPartialWord& u, int n) {
  if (diamondicity_of(u, n) != 1) {
    throw Error(ErrorKind::DiamondicityNotOne, "every " + std::to_string(n) + "-window must hold exactly one diamond");
  }
  const CoverageLedger ledger = coverage_ledger(u, n);
  bool repeated = false;
  ledger.for_each_nonzero([&](Code, std::uint32_t c) { repeated = repeated || c > 1; });
  if (repeated) throw Error(ErrorKind::DoubleCoverage, "u covers some word more than once");

  const int a = u.alphabet().size();
  const auto necklace = perfect_necklace(a, static_cast<int>(u.diamond_count()));
  std::vector<Symbol> out;
  out.reserve(u.size() * static_cast<std::size_t>(a));
  std::size_t next = 0;
  for (int copy = 0; copy < a; ++copy) {
    for (Symbol s : u.symbols()) out.push_back(s.is_diamond() ? necklace[next++] : s);
  }
  return CyclicPartialWord(u.alphabet(), std::move(out));
}

NoDiamondicityResult build_no_diamondicity(const Family& quasi, int x, int y) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::ConditionsNotMet, what); };
  if (y < 2) fail("y >= 2 required");
  const FamilyReport qr = verify_family(quasi, x);
  if (!qr.valid) fail("input is not a universal partial quasi-family");

  const auto& members = quasi.members();
  const auto a = static_cast<std::size_t>(quasi.alphabet().size());
  std::size_t c = members.front().size();
  for (const auto& m : members) c = std::min(c, m.size());
  if (c < static_cast<std::size_t>(x)) fail("shortest member length " + std::to_string(c) + " is below x");

  std::vector<CyclicPartialWord> lifted;
  bool have_long = false;
  bool long_with_one = false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    const auto d = diamondicity_of(m, x);
    if (m.size() == c) {
      if (d != 1) fail("(c) short member " + std::to_string(i) + " lacks one diamond per window");
      lifted.push_back(lift(m, x));
    } else if (m.size() == c * a) {
      have_long = true;
      long_with_one = long_with_one || d == 1;
      lifted.push_back(m);
    } else {
      fail("(a) member " + std::to_string(i) + " has length " + std::to_string(m.size()) + ", expected " +
           std::to_string(c) + " or " + std::to_string(c * a));
    }
  }
  if (!have_long) fail("(b) no member of length c*|A|");
  if (!long_with_one) fail("(c) no long member has one diamond per window");

  NoDiamondicityResult result{Family(quasi.alphabet(), x, std::move(lifted)),
                              PartialGrid(1, 1, quasi.alphabet(), GridMode::Torus)};
  if (!verify_family(result.lifted, x).is_upfamily()) {
    throw Error(ErrorKind::CertificationFailed, "lifted family is not an upfamily");
  }
  result.torus = torus_from_family(result.lifted, y);
  return result;
}

}  // namespace uptori
