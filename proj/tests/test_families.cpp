#include <doctest.h>

#include "oracle.hpp"
#include "uptori/error.hpp"
#include "uptori/families.hpp"
#include "uptori/fixtures.hpp"
#include "uptori/io.hpp"

using namespace uptori;

namespace {

std::vector<std::string> member_texts(const Family& f) {
  std::vector<std::string> out;
  for (const auto& m : f.members()) out.push_back(format_symbols(m.symbols()));
  return out;
}

CutSet every(std::size_t step, std::size_t from, std::size_t len) {
  std::vector<std::size_t> cuts;
  for (std::size_t i = from; i < len; i += step) cuts.push_back(i);
  return CutSet(cuts, len);
}

}  // namespace

TEST_CASE("family fixtures agree with the naive oracle") {
  for (const auto& f : fixtures()) {
    if (f.kind != FixtureKind::Family) continue;
    const auto fam = fixture_family(f.name);
    const auto r = verify_family(fam, f.word_length);
    CHECK_MESSAGE(r.valid == f.expect_valid, f.name);
    CHECK_MESSAGE(oracle::family_valid(member_texts(fam), fam.alphabet().size(), f.word_length) == f.expect_valid,
                  f.name);
  }
}

TEST_CASE("S fails by cross-member duplication") {
  const auto r = verify_family(fixture_family("S_invalid"), 4);
  CHECK_FALSE(r.valid);
  CHECK(r.cross_member_total > 0);
  int within = 0;
  for (const auto& m : member_texts(fixture_family("S_invalid"))) within += oracle::duplicated(oracle::cyclic_counts(m, 4, 4));
  CHECK(r.within_member_total == static_cast<std::uint64_t>(within));
  bool cross = false;
  oracle::family_valid(member_texts(fixture_family("S_invalid")), 4, 4, &cross);
  CHECK(cross);
  const Code c3202 = word_code(parse_symbols("3202"), 4);
  CHECK(std::find(r.cross_member.begin(), r.cross_member.end(), c3202) != r.cross_member.end());
}

TEST_CASE("slicing upcycle64 reproduces the fixture families") {
  const auto u = fixture_cycle("upcycle64");
  CHECK(member_texts(slice(u, every(8, 0, 64), 4)) == member_texts(fixture_family("F")));
  CHECK(member_texts(slice(u, every(8, 1, 64), 4)) == member_texts(fixture_family("F_prime")));
  CHECK(member_texts(slice(u, every(8, 2, 64), 4)) == member_texts(fixture_family("F_double_prime")));
  CHECK(member_texts(slice(u, every(16, 0, 64), 4)) == member_texts(fixture_family("F4")));
  CHECK(member_texts(slice(u, CutSet({0, 8}, 64), 4)) == member_texts(fixture_family("upqf2")));
}

TEST_CASE("slice arcs concatenate back to u") {
  const auto u = fixture_cycle("upcycle64");
  const CutSet cuts({3, 10, 40}, 64);
  std::string joined;
  for (const auto& arc : slice_arcs(u, cuts)) joined += format_symbols(arc.symbols());
  CHECK(joined == format_symbols(rotate(u, 3).symbols()));
  CHECK_THROWS_AS(CutSet({5, 5}, 64), Error);
  CHECK_THROWS_AS(CutSet({64}, 64), Error);
}

TEST_CASE("members of the 8-member family have diamondicity 1") {
  const auto r = verify_family(fixture_family("F"), 4);
  CHECK(r.is_upfamily());
  for (const auto& d : r.member_diamondicity) CHECK(d == 1);
}

TEST_CASE("small slicing enumeration matches brute force") {
  const auto u = fixture_cycle("u4");
  const auto rep = enumerate_slicings(u, 4, 4);
  CHECK(rep.scanned == 2);
  CHECK(rep.whole_valid);
  const bool halves = oracle::family_valid({"001*", "110*"}, 2, 4);
  CHECK(rep.valid_proper == static_cast<std::size_t>(halves));
  CHECK_THROWS_AS(enumerate_slicings(u, 3, 4), Error);
}

TEST_CASE("probing equal slicings of upcycle64") {
  const auto u = fixture_cycle("upcycle64");
  const auto p8 = probe_equal_slicings(u, 8, 4, true);
  CHECK(p8.size() == 64);
  for (const auto& r : p8) CHECK(r.valid);
  const auto p16 = probe_equal_slicings(u, 16, 4);
  CHECK(p16.at(0).valid);
}

TEST_CASE("family member handling") {
  const Alphabet a(2);
  CHECK_THROWS_AS(Family(a, 2, {parse_cycle("01", a), parse_cycle("10", a)}), Error);
  const Family f(a, 2, {parse_cycle("10", a), parse_cycle("0", a)});
  CHECK(format_symbols(f.members()[0].symbols()) == "0");
  CHECK(f.contains(parse_cycle("01", a)));
  CHECK_FALSE(f.equal_lengths());
}
