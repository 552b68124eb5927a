#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "uptori/error.hpp"
#include "uptori/fixtures.hpp"
#include "uptori/io.hpp"
#include "uptori/words.hpp"

using namespace uptori;

namespace {

CyclicPartialWord cyc(const std::string& s, int a) { return parse_cycle(s, Alphabet(a)); }
PartialWord lin(const std::string& s, int a) { return parse_word(s, Alphabet(a)); }

}  // namespace

TEST_CASE("u4 is a binary upcycle for length 4 with diamondicity 1") {
  const auto r = verify_upcycle(cyc("001*110*", 2), 4);
  CHECK(r.valid);
  CHECK(r.missing_total == 0);
  CHECK(r.duplicated_total == 0);
  REQUIRE(r.diamondicity);
  CHECK(*r.diamondicity == 1);
}

TEST_CASE("De Bruijn cycle 0000100110101111 has diamondicity 0") {
  const auto r = verify_upcycle(cyc("0000100110101111", 2), 4);
  CHECK(r.valid);
  REQUIRE(r.diamondicity);
  CHECK(*r.diamondicity == 0);
  CHECK(r.triviality == Triviality::NoDiamonds);
}

TEST_CASE("a broken cycle reports missing and duplicated words") {
  const auto r = verify_upcycle(cyc("001*111*", 2), 4);
  CHECK_FALSE(r.valid);
  const auto c = oracle::cyclic_counts("001*111*", 2, 4);
  CHECK(r.missing_total == static_cast<std::uint64_t>(oracle::missing(c, 2, 4)));
  CHECK(r.duplicated_total == static_cast<std::uint64_t>(oracle::duplicated(c)));
}

TEST_CASE("universal words are verified linearly") {
  CHECK(verify_upword(lin("0120221100", 3), 2).valid);
  CHECK(verify_upword(lin("00110", 2), 2).valid);
  CHECK_FALSE(verify_upword(lin("0011", 2), 2).valid);
  CHECK_FALSE(verify_upcycle(cyc("00110", 2), 2).valid);
}

TEST_CASE("rotation and canonical rotation") {
  const auto u = cyc("001*110*", 2);
  CHECK(format_symbols(rotate(u, 3).symbols()) == "*110*001");
  CHECK(format_symbols(rotate(u, -1).symbols()) == "*001*110");
  CHECK(rotate(rotate(u, 5), 3) == u);
  CHECK(format_symbols(canonical_rotation(rotate(u, 6)).symbols()) == "001*110*");
  CHECK(cyclically_equal(u, rotate(u, 7)));
  CHECK_FALSE(cyclically_equal(u, cyc("001*111*", 2)));
}

TEST_CASE("word codes and decoding round-trip") {
  const Alphabet a(3);
  for (Code c = 0; c < 27; ++c) {
    const auto w = decode_word(c, a, 3);
    CHECK(word_code(w.symbols(), 3) == c);
  }
  CHECK_THROWS_AS(word_code(parse_symbols("0*1"), 2), Error);
}

TEST_CASE("covers relation") {
  CHECK(covers_word(lin("0*1", 2), lin("011", 2)));
  CHECK_FALSE(covers_word(lin("0*1", 2), lin("111", 2)));
}

TEST_CASE("diamondicity undefined when windows differ") {
  CHECK_FALSE(diamondicity_of(cyc("0*10", 2), 2).has_value());
  CHECK(diamondicity_of(cyc("0*1*", 2), 2) == 1);
}

TEST_CASE("verifier agrees with the naive oracle on random short cycles") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int a = 2 + static_cast<int>(rng() % 2);
    const int n = 1 + static_cast<int>(rng() % 4);
    const int len = 1 + static_cast<int>(rng() % 12);
    std::string s;
    for (int i = 0; i < len; ++i) {
      const int v = static_cast<int>(rng() % static_cast<unsigned>(a + 1));
      s.push_back(v == a ? '*' : static_cast<char>('0' + v));
    }
    const auto c = oracle::cyclic_counts(s, a, n);
    const auto r = verify_upcycle(cyc(s, a), n);
    CHECK_MESSAGE(r.valid == oracle::exactly_once(c, a, n), s);
    CHECK(r.missing_total == static_cast<std::uint64_t>(oracle::missing(c, a, n)));
    CHECK(r.duplicated_total == static_cast<std::uint64_t>(oracle::duplicated(c)));
    const auto ledger = coverage_ledger(cyc(s, a), n);
    for (const auto& [w, k] : c) CHECK(ledger.count(word_code(parse_symbols(w), a)) == static_cast<std::uint32_t>(k));
  }
}

TEST_CASE("invalid construction arguments throw") {
  CHECK_THROWS_AS(Alphabet(0), Error);
  CHECK_THROWS_AS(cyc("012", 2), Error);
  CHECK_THROWS_AS(verify_upcycle(cyc("01", 2), 0), Error);
}
