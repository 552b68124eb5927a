// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "uptori/construct.hpp"
#include "uptori/error.hpp"
#include "uptori/fixtures.hpp"
#include "uptori/generate.hpp"
#include "uptori/io.hpp"
#include "uptori/search.hpp"

using namespace uptori;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long max_rss_mib() {
  rusage u{};
  getrusage(RUSAGE_SELF, &u);
  return u.ru_maxrss / 1024;
}

std::vector<std::string> text_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

bool covers_total(const PartialGrid& window, const PartialGrid& p) {
  for (int r = 0; r < p.rows(); ++r) {
    for (int c = 0; c < p.cols(); ++c) {
      const Symbol s = window(r, c);
      if (!s.is_diamond() && s != p(r, c)) return false;
    }
  }
  return true;
}

bool exactly_once_over(const CoverageLedger& l, std::uint64_t space) {
  return l.code_space() == space && l.all_exactly_once();
}

// 1. Fixture verification sweep.
void fixture_sweep(Check& c) {
  for (const char* name : {"u4", "upcycle64"}) {
    const auto u = fixture_cycle(name);
    const auto r = verify_upcycle(u, 4);
    const auto l = coverage_ledger(u, 4);
    c.expect(r.valid && r.diamondicity == 1, std::string(name) + " upcycle with diamondicity 1");
    c.expect(l.distinct_covered() == (std::string(name) == "u4" ? 16u : 256u), std::string(name) + " word count");
  }
  for (const char* name : {"upmatrix_3x5", "upmatrix_3x6", "upmatrix_4x5", "upmatrix_2x11"}) {
    const auto r = verify_upmatrix(fixture_grid(name), WindowShape(2, 2));
    c.expect(r.valid && r.triviality == Triviality::NontrivialPartial, std::string(name) + " nontrivial upmatrix");
  }
  c.expect(verify_uptorus(fixture_grid("minimal"), WindowShape(2, 2)).valid, "minimal uptorus");
  const auto t = verify_uptorus(fixture_grid("trivial_8x8"), WindowShape(1, 4));
  c.expect(t.valid && t.triviality == Triviality::DegenerateShape, "8x8 grid valid but trivial");
  for (const char* name : {"F", "F_prime", "F_double_prime", "F4"}) {
    c.expect(verify_family(fixture_family(name), 4).is_upfamily(), std::string(name) + " upfamily");
  }
  const auto q = verify_family(fixture_family("upqf2"), 4);
  c.expect(q.valid && !q.equal_lengths, "2-member quasi-family");
  const auto s = verify_family(fixture_family("S_invalid"), 4);
  c.expect(!s.valid && s.cross_member_total > 0, "S invalid with a cross-member duplicate");
  c.note("S cross-member duplicates: " + std::to_string(s.cross_member_total));
}

// 2. m(u, s) reproduction.
void m_us_reproduction(Check& c) {
  const auto u = fixture_cycle("u4");
  const auto s = RotationSequence::from_word(fixture_cycle("s64"), 8);
  const auto cert = certify_m_us(u, s, 4, 2);
  const auto& m = cert.torus;
  c.expect(m.rows() == 64 && m.cols() == 8, "64x8 torus");
  c.expect(exactly_once_over(grid_coverage(m, WindowShape(3, 4)), 4096), "4096 codes each exactly once");
  c.expect(format_symbols(m.row(63)) == "001*110*", "bottom row equals u");
  c.expect(cert.report.diamondicity == 3, "diamondicity 3");
}

// 3. Locator agreement.
void locator_agreement(Check& c) {
  const auto u = fixture_cycle("u4");
  const auto s = RotationSequence::from_word(fixture_cycle("s64"), 8);
  const auto m = build_m_us(u, s);
  const Locator loc(u, s, 4, 2);
  const WindowShape shape(3, 4);
  auto scan = [&](const PartialGrid& p) {
    std::vector<Placement> hits;
    for (int r = 0; r < m.rows(); ++r) {
      for (int col = 0; col < m.cols(); ++col) {
        if (covers_total(subarray(m, r, col, shape), p)) hits.push_back({r, col});
      }
    }
    return hits;
  };
  const auto p = fixture_grid("locate_p");
  const auto r = loc.locate(p);
  c.expect(r.a == std::vector<std::uint32_t>{0, 5, 7}, "a = (0,5,7)");
  c.expect(r.b == std::vector<std::uint32_t>{5, 2}, "b = (5,2)");
  const auto hits = scan(p);
  c.expect(hits.size() == 1 && hits[0] == r.placement, "locate_p placement matches scan");
  std::mt19937 rng(20240601);
  int agree = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<Symbol> cells;
    for (int i = 0; i < 12; ++i) cells.push_back(Symbol::letter(static_cast<int>(rng() % 2)));
    const PartialGrid q(3, 4, Alphabet(2), GridMode::Matrix, cells);
    const auto h = scan(q);
    agree += h.size() == 1 && h[0] == loc.locate(q).placement;
  }
  c.expect(agree == 1000, "1000 random matrices located as by scan (" + std::to_string(agree) + ")");
}

// 4. m(W) construction.
void m_w_construction(Check& c) {
  const auto f = fixture_family("F");
  const auto big = torus_from_family(f, 2);
  c.expect(big.rows() == 32768 && big.cols() == 8, "order 5 gives 32768x8");
  c.expect(exactly_once_over(grid_coverage(big, WindowShape(3, 4)), 16777216), "4^12 codes each once");
  const auto small = torus_from_family(f, 1);
  c.expect(small.rows() == 512 && small.cols() == 8, "order 3 gives 512x8");
  c.expect(exactly_once_over(grid_coverage(small, WindowShape(2, 4)), 65536), "4^8 codes each once");
}

// 5. Slicing enumeration.
void slicing_enumeration(Check& c) {
  const auto rep = enumerate_slicings(fixture_cycle("upcycle64"), 8, 4);
  c.note("valid including the whole cycle: " + std::to_string(rep.valid_including_whole) +
         ", with at least two members: " + std::to_string(rep.valid_proper));
  c.expect(rep.scanned == 128, "128 subsets scanned");
  c.expect(rep.valid_including_whole == 42 || rep.valid_proper == 42, "one tally equals 42");
  c.expect(rep.equal_length_all_valid, "equal-length subsets are upfamilies");
  std::size_t eq_valid = 0;
  for (const auto& e : rep.entries) eq_valid += e.valid && e.equal_lengths;
  c.expect(eq_valid == rep.equal_length_subsets && eq_valid == rep.valid_upfamilies, "equal-length tallies agree");
}

// 6. Lifting.
void lifting(Check& c) {
  const auto in = fixture_cycle("lift_input");
  const auto out = lift(in, 4);
  c.expect(format_symbols(out.symbols()) == "00301120003111210032112200331123", "lift byte-exact");
  c.expect(coverage_ledger(out, 4) == coverage_ledger(in, 4), "ledger equality");
  const auto quasi = text_lines(fixture("upqf5").text);
  const auto lifted = text_lines(fixture("F2").text);
  const Alphabet a(4);
  for (std::size_t i = 2; i < quasi.size(); ++i) {
    const auto got = format_symbols(lift(parse_cycle(quasi[i], a), 4).symbols());
    c.expect(got == lifted[i], "lift of " + quasi[i]);
  }
}

// 7. No-diamondicity pipeline.
void no_diamondicity(Check& c) {
  const auto res = build_no_diamondicity(fixture_family("upqf5"), 4, 2);
  const auto& t = res.torus;
  c.expect(t.rows() == 128000 && t.cols() == 32, "128000x32 torus");
  c.expect(exactly_once_over(grid_coverage(t, WindowShape(3, 4)), 16777216), "4^12 codes each once");
  const auto h = window_diamond_histogram(t, WindowShape(3, 4));
  c.expect(h.count(3) && h.count(0), "windows with 3 and with 0 diamonds");
  std::string hist;
  for (const auto& [d, n] : h) hist += " " + std::to_string(d) + ":" + std::to_string(n);
  c.note("window diamond histogram" + hist);
  const long rss = max_rss_mib();
  c.note("peak RSS " + std::to_string(rss) + " MiB");
  c.expect(rss < 1024, "memory under 1 GiB");
}

// 8. Search reproduction.
void search_reproduction(Check& c) {
  auto spec = [](int rows, int cols, GridMode mode) {
    SearchSpec s;
    s.alphabet_size = 2;
    s.shape = WindowShape(2, 2);
    s.rows = rows;
    s.cols = cols;
    s.mode = mode;
    s.dedup = true;
    return s;
  };
  const WindowShape w(2, 2);
  auto contains = [&](const Catalog& cat, const char* name) {
    const auto key = canonical_form(fixture_grid(name), w);
    return std::find(cat.solutions.begin(), cat.solutions.end(), key) != cat.solutions.end();
  };
  auto timed = [&](const SearchSpec& s, const char* label, double limit) {
    const auto t0 = std::chrono::steady_clock::now();
    Catalog cat = search(s);
    const double dt = seconds_since(t0);
    c.note(std::string(label) + ": " + std::to_string(cat.canonical_count) + " classes, " +
           std::to_string(cat.raw_count) + " raw, " + std::to_string(dt) + " s");
    c.expect(dt < limit, std::string(label) + " within time");
    return cat;
  };

  const auto t34 = timed(spec(3, 4, GridMode::Torus), "3x4 torus", 60);
  c.expect(contains(t34, "minimal"), "3x4 torus contains the minimal class");

  const auto t33 = timed(spec(3, 3, GridMode::Torus), "3x3 torus", 60);
  c.expect(t33.raw_count == 0, "3x3 torus has no solutions");
  auto all = spec(3, 3, GridMode::Torus);
  all.disable_pruning = true;
  const auto full = search(all);
  std::uint64_t leaves = 0;
  std::string masses;
  for (const auto& [m, n] : full.leaf_mass) {
    leaves += n;
    if (m <= 20) masses += " " + std::to_string(m) + ":" + std::to_string(n);
  }
  c.expect(leaves == 19683, "all 3^9 assignments reached");
  c.expect(!full.leaf_mass.count(16), "no 3x3 candidate has ledger mass 16");
  c.note("3x3 torus ledger masses up to 20:" + masses);

  const auto m35 = timed(spec(3, 5, GridMode::Matrix), "3x5 matrix", 60);
  c.expect(contains(m35, "upmatrix_3x5"), "3x5 contains the first example");
  const auto m44 = timed(spec(4, 4, GridMode::Matrix), "4x4 matrix", 60);
  c.expect(m44.canonical_count > 0, "4x4 nonempty");
  auto s36 = spec(3, 6, GridMode::Matrix);
  s36.capacity_pruning = true;
  const auto m36 = timed(s36, "3x6 matrix", 1800);
  c.expect(m36.complete && contains(m36, "upmatrix_3x6"), "3x6 completes and contains the second example");
  auto s45 = spec(4, 5, GridMode::Matrix);
  s45.capacity_pruning = true;
  const auto m45 = timed(s45, "4x5 matrix", 1800);
  c.expect(contains(m45, "upmatrix_4x5"), "4x5 contains the third example");
}

// 9. Generator properties.
void generators(Check& c) {
  for (auto [a, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {8, 2}}) {
    const auto r = verify_upcycle(debruijn_cycle(a, n), n);
    c.expect(r.valid && r.diamondicity == 0, "De Bruijn (" + std::to_string(a) + "," + std::to_string(n) + ")");
  }
  const auto s = debruijn_sequence(64, 2);
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> table;
  for (std::size_t i = 0; i < s.size(); ++i) ++table[{s[i], s[(i + 1) % s.size()]}];
  bool once = s.size() == 4096 && table.size() == 4096;
  for (const auto& [k, v] : table) once = once && v == 1;
  c.expect(once, "De Bruijn (64,2) by associative table");
  c.expect(count_debruijn_bruteforce(2, 3) == 2, "count (2,3) = 2");
  for (auto [A, B, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, int>>{{2, 2, 1}, {8, 8, 2}}) {
    const auto cyc = alternating_debruijn(A, B, n);
    std::uint64_t words = 1;
    for (int i = 0; i <= n; ++i) words *= A;
    for (int i = 0; i < n; ++i) words *= B;
    std::map<std::vector<std::uint32_t>, int> seen;
    for (std::size_t p = 0; p < cyc.size(); p += 2) {
      std::vector<std::uint32_t> w;
      for (int k = 0; k < 2 * n + 1; ++k) w.push_back(cyc.items()[(p + static_cast<std::size_t>(k)) % cyc.size()]);
      ++seen[w];
    }
    bool ok = cyc.size() == 2 * words && seen.size() == words;
    for (const auto& [w, k] : seen) ok = ok && k == 1;
    const std::string label = "(" + std::to_string(A) + "," + std::to_string(B) + "," + std::to_string(n) + ")";
    c.expect(ok, "alternating " + label + " exact-once scan");
    std::map<std::uint32_t, std::uint64_t> freq;
    for (std::size_t i = 0; i < cyc.pairs(); ++i) ++freq[cyc.b_item(i)];
    std::uint64_t expect = 1;
    for (int i = 0; i <= n; ++i) expect *= A;
    for (int i = 0; i < n - 1; ++i) expect *= B;
    bool equal = freq.size() == B;
    for (const auto& [b, k] : freq) equal = equal && k == expect;
    c.expect(equal, "alternating " + label + " equal B frequency");
  }
}

// 10. Oracle equivalence.
void oracle_equivalence(Check& c) {
  const Alphabet bin(2);
  std::size_t checked = 0;
  int mismatches = 0;
  std::string s;
  std::function<void(int)> walk = [&](int len) {
    if (static_cast<int>(s.size()) == len) {
      const auto counts = oracle::cyclic_counts(s, 2, 4);
      const auto r = verify_upcycle(parse_cycle(s, bin), 4);
      const bool same = r.valid == oracle::exactly_once(counts, 2, 4) &&
                        r.missing_total == static_cast<std::uint64_t>(oracle::missing(counts, 2, 4)) &&
                        r.duplicated_total == static_cast<std::uint64_t>(oracle::duplicated(counts));
      mismatches += !same;
      ++checked;
      return;
    }
    for (char ch : {'0', '1', '*'}) {
      s.push_back(ch);
      walk(len);
      s.pop_back();
    }
  };
  for (int len = 1; len <= 10; ++len) walk(len);
  c.note("cyclic partial words compared: " + std::to_string(checked));
  c.expect(mismatches == 0, "verifier equals oracle on every binary cyclic partial word up to length 10");

  std::mt19937 rng(99);
  int sampled_bad = 0;
  for (int t = 0; t < 10000; ++t) {
    const int a = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 4);
    const int len = 1 + static_cast<int>(rng() % 12);
    std::string w;
    for (int i = 0; i < len; ++i) {
      const int v = static_cast<int>(rng() % static_cast<unsigned>(a + 1));
      w.push_back(v == a ? '*' : static_cast<char>('0' + v));
    }
    sampled_bad += verify_upcycle(parse_cycle(w, Alphabet(a)), n).valid !=
                   oracle::exactly_once(oracle::cyclic_counts(w, a, n), a, n);
  }
  c.expect(sampled_bad == 0, "10^4 sampled cases agree");

  int fixture_bad = 0;
  for (const auto& f : fixtures()) {
    bool lib = false;
    bool ref = false;
    switch (f.kind) {
      case FixtureKind::Word:
        lib = verify_upword(fixture_word(f.name), f.word_length).valid;
        ref = oracle::exactly_once(oracle::linear_counts(f.text, f.alphabet, f.word_length), f.alphabet, f.word_length);
        break;
      case FixtureKind::Cycle:
        lib = verify_upcycle(fixture_cycle(f.name), f.word_length).valid;
        ref = oracle::exactly_once(oracle::cyclic_counts(f.text, f.alphabet, f.word_length), f.alphabet, f.word_length);
        break;
      case FixtureKind::Grid:
        lib = verify_grid(fixture_grid(f.name), *f.window).valid;
        ref = oracle::grid_valid(fixture_grid(f.name), f.window->w, f.window->l);
        break;
      case FixtureKind::Family: {
        const auto fam = fixture_family(f.name);
        lib = verify_family(fam, f.word_length).valid;
        std::vector<std::string> members;
        for (const auto& m : fam.members()) members.push_back(oracle::text(m.symbols()));
        ref = oracle::family_valid(members, fam.alphabet().size(), f.word_length);
        break;
      }
    }
    fixture_bad += lib != ref;
  }
  c.expect(fixture_bad == 0, "all fixtures agree with the oracle");

  for (int a : {2, 3}) {
    const int n = 2;
    const int max_len = a * a + n - 1;
    std::vector<std::string> upwords;
    std::string w;
    std::function<void(int)> gen = [&](int len) {
      if (static_cast<int>(w.size()) == len) {
        if (oracle::exactly_once(oracle::linear_counts(w, a, n), a, n)) upwords.push_back(w);
        return;
      }
      for (int v = 0; v <= a; ++v) {
        w.push_back(v == a ? '*' : static_cast<char>('0' + v));
        gen(len);
        w.pop_back();
      }
    };
    for (int len = n; len <= max_len; ++len) gen(len);
    int bad = 0;
    for (const auto& u : upwords) {
      for (int p : {2, 3}) {
        const auto g = mu(parse_word(u, Alphabet(a)), n, p);
        bad += !verify_upmatrix(g, WindowShape(p, n)).valid || !oracle::grid_valid(g, p, n);
      }
    }
    c.note("universal words for alphabet " + std::to_string(a) + ": " + std::to_string(upwords.size()));
    c.expect(!upwords.empty() && bad == 0, "mu property for every universal word over " + std::to_string(a) + " letters");
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  void (*run)(Check&);
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "fixture verification sweep", 1, fixture_sweep},
      {2, "m(u,s) reproduction", 1, m_us_reproduction},
      {3, "locator agreement", 5, locator_agreement},
      {4, "m(W) construction", 60, m_w_construction},
      {5, "slicing enumeration", 10, slicing_enumeration},
      {6, "lifting", 1, lifting},
      {7, "no-diamondicity pipeline", 600, no_diamondicity},
      {8, "search reproduction", 1800, search_reproduction},
      {9, "generator properties", 30, generators},
      {10, "oracle equivalence", 120, oracle_equivalence},
  };
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& cr : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    if (dt >= cr.limit_seconds) check.expect(false, "runtime limit " + std::to_string(cr.limit_seconds) + " s");
    const bool ok = check.failures().empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, dt);
    for (const auto& n : check.notes()) std::printf("    %s\n", n.c_str());
    for (const auto& f : check.failures()) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
