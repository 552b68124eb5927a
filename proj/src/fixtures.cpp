#include "uptori/fixtures.hpp"

#include <algorithm>

#include "uptori/error.hpp"
#include "uptori/io.hpp"

namespace uptori {

namespace {

constexpr const char* kAlphabetMultiplied = "001*110*003*112*021*130*023*132*201*310*203*312*221*330*223*332*";

Fixture word(std::string name, std::string text, int a, int n, bool valid, std::string what) {
  return {std::move(name), FixtureKind::Word, std::move(text), a, n, std::nullopt, valid, std::move(what)};
}

Fixture cycle(std::string name, std::string text, int a, int n, bool valid, std::string what) {
  return {std::move(name), FixtureKind::Cycle, std::move(text), a, n, std::nullopt, valid, std::move(what)};
}

Fixture grid(std::string name, std::string text, WindowShape shape, bool valid, std::string what) {
  return {std::move(name), FixtureKind::Grid, std::move(text), 0, 0, shape, valid, std::move(what)};
}

Fixture family(std::string name, std::string text, int x, bool valid, std::string what) {
  return {std::move(name), FixtureKind::Family, std::move(text), 0, x, std::nullopt, valid, std::move(what)};
}

std::vector<Fixture> build() {
  std::vector<Fixture> v;
  v.push_back(cycle("u4", "001*110*", 2, 4, true, "binary upcycle for length 4, diamondicity 1"));
  v.push_back(cycle("debruijn16", "0000100110101111", 2, 4, true, "binary De Bruijn cycle for length 4"));
  v.push_back(cycle("upcycle64", kAlphabetMultiplied, 4, 4, true, "64-symbol upcycle over 4 letters for length 4"));
  v.push_back(cycle("s64", "0017020304050607112722313733414247445152535755616263646776654321", 8, 2, true,
                    "De Bruijn cycle over 0..7 for length 2 (row rotations for u4)"));
  v.push_back(word("universal_word", "0120221100", 3, 2, true, "universal word over 3 letters for length 2"));
  v.push_back(word("upword_00110", "00110", 2, 2, true, "binary universal word for length 2"));
  v.push_back(cycle("lift_input", "003*112*", 4, 4, false,
                    "diamondicity-1 cyclic partial word to lift; covers 32 words once each"));
  v.push_back(cycle("lift_output", "00301120003111210032112200331123", 4, 4, false,
                    "lift of lift_input; covers the same 32 words"));

  v.push_back(grid("subarray_p", "2 3 2 matrix\n011\n*1*\n", WindowShape(2, 3), false,
                   "2x3 subarray of upmatrix_3x5 at (0,1)"));
  v.push_back(grid("upmatrix_3x5", "3 5 2 matrix\n00110\n0*1*0\n10011\n", WindowShape(2, 2), true,
                   "binary 2x2 upmatrix, gluable horizontally only"));
  v.push_back(grid("upmatrix_3x6", "3 6 2 matrix\n000111\n011001\n*1**00\n", WindowShape(2, 2), true,
                   "binary 2x2 upmatrix, gluable in neither direction"));
  v.push_back(grid("upmatrix_4x5", "4 5 2 matrix\n*001*\n11001\n11001\n*001*\n", WindowShape(2, 2), true,
                   "binary 2x2 upmatrix, gluable in both directions"));
  v.push_back(grid("upmatrix_2x11", "2 11 2 matrix\n00000101*1*\n0011001*011\n", WindowShape(2, 2), true,
                   "binary 2x2 upmatrix with only two rows"));
  v.push_back(grid("debruijn_2x17", "2 17 2 matrix\n00000101010111110\n00110001101100110\n", WindowShape(2, 2),
                   true, "trivial binary 2x2 upmatrix without diamonds"));
  v.push_back(grid("mu_example", "2 10 3 matrix\n0120221100\n**********\n", WindowShape(2, 2), true,
                   "mu(0120221100, 2), upmatrix over 3 letters for 2x2"));
  v.push_back(grid("trivial_8x8",
                   "8 8 4 torus\n001*110*\n003*112*\n021*130*\n023*132*\n201*310*\n203*312*\n221*330*\n223*332*\n",
                   WindowShape(1, 4), true, "trivial uptorus over 4 letters for 1x4"));
  v.push_back(grid("minimal", "3 4 2 torus\n*001\n1100\n1100\n", WindowShape(2, 2), true,
                   "minimal nontrivial binary 2x2 uptorus"));
  v.push_back(grid("minimal_equiv1", "3 4 2 torus\n*110\n0011\n0011\n", WindowShape(2, 2), true,
                   "equivalent of minimal: alphabet swap"));
  v.push_back(grid("minimal_equiv2", "3 4 2 torus\n100*\n0011\n0011\n", WindowShape(2, 2), true,
                   "equivalent of minimal"));
  v.push_back(grid("minimal_equiv3", "3 4 2 torus\n1100\n1100\n*001\n", WindowShape(2, 2), true,
                   "equivalent of minimal: row rotation"));
  v.push_back(grid("minimal_equiv4", "4 3 2 torus\n*11\n011\n000\n100\n", WindowShape(2, 2), true,
                   "equivalent of minimal: transposed shape"));
  v.push_back(grid("locate_p", "3 4 2 matrix\n0011\n1010\n1001\n", WindowShape(3, 4), false,
                   "total 3x4 matrix located in m(u4, s64)"));

  v.push_back(family("F", "8 4 4\n001*110*\n003*112*\n021*130*\n023*132*\n201*310*\n203*312*\n221*330*\n223*332*\n",
                     4, true, "8-member upfamily: upcycle64 cut every 8 from 0"));
  v.push_back(family("F_prime",
                     "8 4 4\n01*110*0\n03*112*0\n21*130*0\n23*132*2\n01*310*2\n03*312*2\n21*330*2\n23*332*0\n", 4,
                     true, "8-member upfamily: upcycle64 cut every 8 from 1"));
  v.push_back(family("F_double_prime",
                     "8 4 4\n1*110*00\n3*112*02\n1*130*02\n3*132*20\n1*310*20\n3*312*22\n1*330*22\n3*332*00\n", 4,
                     true, "8-member upfamily: upcycle64 cut every 8 from 2"));
  v.push_back(family("F4",
                     "4 4 4\n001*110*003*112*\n021*130*023*132*\n201*310*203*312*\n221*330*223*332*\n", 4, true,
                     "4-member upfamily: upcycle64 cut every 16"));
  v.push_back(family("upqf2", "2 4 4\n001*110*\n003*112*021*130*023*132*201*310*203*312*221*330*223*332*\n", 4,
                     true, "2-member quasi-family: upcycle64 cut at 0 and 8"));
  v.push_back(family("S_invalid", "2 4 4\n223*332*\n001*110*003*112*021*130*023*132*201*310*203*312*221*330*\n", 4,
                     false, "not a quasi-family: both members cover 32*2"));
  v.push_back(family("upqf5", "5 4 4\n001*110*003*112*021*130*023*132*\n201*310*\n203*312*\n221*330*\n223*332*\n", 4,
                     true, "5-member quasi-family with lengths 8 and 32"));
  v.push_back(family("F2",
                     "5 4 4\n001*110*003*112*021*130*023*132*\n20103100201131012012310220133103\n"
                     "20303120203131212032312220333123\n22103300221133012212330222133303\n"
                     "22303320223133212232332222333323\n",
                     4, true, "upfamily from lifting the short members of upqf5"));
  return v;
}

const Fixture& require(std::string_view name, FixtureKind kind) {
  const Fixture& f = fixture(name);
  if (f.kind != kind) {
    throw Error(ErrorKind::Parse, "fixture " + std::string(name) + " is a " + std::string(to_string(f.kind)) +
                                      ", not a " + std::string(to_string(kind)));
  }
  return f;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& fixture(std::string_view name) {
  const auto& all = fixtures();
  auto it = std::find_if(all.begin(), all.end(), [&](const Fixture& f) { return f.name == name; });
  if (it == all.end()) throw Error(ErrorKind::Parse, "unknown fixture '" + std::string(name) + "'");
  return *it;
}

std::string_view to_string(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::Word: return "word";
    case FixtureKind::Cycle: return "cycle";
    case FixtureKind::Grid: return "grid";
    case FixtureKind::Family: return "family";
  }
  return "unknown";
}

PartialWord fixture_word(std::string_view name) {
  const Fixture& f = fixture(name);
  if (f.kind != FixtureKind::Word && f.kind != FixtureKind::Cycle) require(name, FixtureKind::Word);
  return parse_word(f.text, Alphabet(f.alphabet));
}

CyclicPartialWord fixture_cycle(std::string_view name) {
  const Fixture& f = fixture(name);
  if (f.kind != FixtureKind::Word && f.kind != FixtureKind::Cycle) require(name, FixtureKind::Cycle);
  return parse_cycle(f.text, Alphabet(f.alphabet));
}

PartialGrid fixture_grid(std::string_view name) { return parse_grid(require(name, FixtureKind::Grid).text); }

Family fixture_family(std::string_view name) { return parse_family(require(name, FixtureKind::Family).text); }

std::string fixture_file_text(const Fixture& f) {
  if (f.kind == FixtureKind::Word || f.kind == FixtureKind::Cycle) return f.text + "\n";
  return f.text;
}

}  // namespace uptori
