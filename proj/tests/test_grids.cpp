#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "uptori/error.hpp"
#include "uptori/fixtures.hpp"
#include "uptori/io.hpp"

using namespace uptori;

TEST_CASE("subarray of the 3x5 upmatrix") {
  const auto g = fixture_grid("upmatrix_3x5");
  const auto p = subarray(g, 0, 1, WindowShape(2, 3));
  CHECK(p == fixture_grid("subarray_p"));
  CHECK_THROWS_AS(subarray(g, 2, 0, WindowShape(2, 2)), Error);
  const auto t = fixture_grid("minimal");
  CHECK(subarray(t, 2, 3, WindowShape(2, 2)).cells().size() == 4);
}

TEST_CASE("grid fixtures agree with the naive oracle") {
  for (const auto& f : fixtures()) {
    if (f.kind != FixtureKind::Grid) continue;
    const auto g = fixture_grid(f.name);
    const auto r = verify_grid(g, *f.window);
    CHECK_MESSAGE(r.valid == f.expect_valid, f.name);
    CHECK_MESSAGE(oracle::grid_valid(g, f.window->w, f.window->l) == f.expect_valid, f.name);
  }
}

TEST_CASE("triviality classification") {
  CHECK(classify_grid(fixture_grid("minimal"), WindowShape(2, 2)) == Triviality::NontrivialPartial);
  CHECK(classify_grid(fixture_grid("trivial_8x8"), WindowShape(1, 4)) == Triviality::DegenerateShape);
  CHECK(classify_grid(fixture_grid("debruijn_2x17"), WindowShape(2, 2)) == Triviality::NoDiamonds);
  CHECK(classify_grid(PartialGrid(2, 2, Alphabet(2), GridMode::Matrix), WindowShape(2, 2)) == Triviality::AllDiamonds);
}

TEST_CASE("gluability of the three 2x2 upmatrices") {
  const WindowShape s(2, 2);
  const auto g35 = gluability(fixture_grid("upmatrix_3x5"), s);
  CHECK_FALSE(g35.wraps_vertically);
  CHECK(g35.wraps_horizontally);
  const auto g36 = gluability(fixture_grid("upmatrix_3x6"), s);
  CHECK_FALSE(g36.wraps_vertically);
  CHECK_FALSE(g36.wraps_horizontally);
  const auto g45 = gluability(fixture_grid("upmatrix_4x5"), s);
  CHECK(g45.wraps_vertically);
  CHECK(g45.wraps_horizontally);
  const auto glued = glue_matrix(fixture_grid("upmatrix_4x5"), s);
  REQUIRE(glued);
  CHECK(glued->rows() == 3);
  CHECK(glued->cols() == 4);
  CHECK(verify_uptorus(*glued, s).valid);
  CHECK_FALSE(glue_matrix(fixture_grid("upmatrix_3x6"), s).has_value());
}

TEST_CASE("unrolling a torus yields an upmatrix") {
  const auto t = fixture_grid("minimal");
  const auto m = unroll_torus(t, WindowShape(2, 2));
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 5);
  CHECK(m.mode() == GridMode::Matrix);
  CHECK(verify_upmatrix(m, WindowShape(2, 2)).valid);
}

TEST_CASE("window diamond histogram of the minimal uptorus") {
  const auto h = window_diamond_histogram(fixture_grid("minimal"), WindowShape(2, 2));
  CHECK(h.at(0) == 8);
  CHECK(h.at(1) == 4);
}

TEST_CASE("minimal uptorus equivalents share a canonical class") {
  const WindowShape s(2, 2);
  const auto key = shape_independent_form(fixture_grid("minimal"), s);
  for (const char* name : {"minimal_equiv1", "minimal_equiv2", "minimal_equiv3", "minimal_equiv4"}) {
    CHECK_MESSAGE(shape_independent_form(fixture_grid(name), s) == key, name);
    CHECK(verify_uptorus(fixture_grid(name), s).valid);
  }
  const auto c = canonical_form(fixture_grid("minimal"), s);
  CHECK(canonical_form(c, s) == c);
}

TEST_CASE("symmetries preserve validity and canonical form") {
  const WindowShape s(2, 2);
  const auto g = fixture_grid("upmatrix_3x6");
  const auto key = canonical_form(g, s);
  const std::vector<GridSymmetry> ops = {GridSymmetry::horizontal_reflect(), GridSymmetry::vertical_reflect(),
                                         GridSymmetry::alphabet_permute({1, 0})};
  for (const auto& op : ops) {
    const auto h = op.apply(g);
    CHECK(verify_upmatrix(h, s).valid);
    CHECK(canonical_form(h, s) == key);
  }
  const auto t = transpose(g);
  CHECK(verify_upmatrix(t, s).valid);
  CHECK(transpose(t) == g);
  CHECK_THROWS_AS(GridSymmetry::alphabet_permute({0, 0}), Error);
}

TEST_CASE("torus rotations preserve validity") {
  const WindowShape s(2, 2);
  const auto g = fixture_grid("minimal");
  for (int k = 0; k < 4; ++k) {
    const auto h = GridSymmetry::col_rotate(k).apply(GridSymmetry::row_rotate(k).apply(g));
    CHECK(verify_uptorus(h, s).valid);
    CHECK(canonical_form(h, s) == canonical_form(g, s));
  }
}

TEST_CASE("random grids agree with the naive oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int rows = 2 + static_cast<int>(rng() % 3);
    const int cols = 2 + static_cast<int>(rng() % 4);
    std::vector<Symbol> cells;
    for (int i = 0; i < rows * cols; ++i) {
      const int v = static_cast<int>(rng() % 3);
      cells.push_back(v == 2 ? kDiamond : Symbol::letter(v));
    }
    const GridMode mode = trial % 2 ? GridMode::Torus : GridMode::Matrix;
    const PartialGrid g(rows, cols, Alphabet(2), mode, cells);
    const auto c = oracle::grid_counts(g, 2, 2);
    const auto r = verify_grid(g, WindowShape(2, 2));
    CHECK(r.valid == oracle::exactly_once(c, 2, 4));
    CHECK(r.missing_total == static_cast<std::uint64_t>(oracle::missing(c, 2, 4)));
    CHECK(r.duplicated_total == static_cast<std::uint64_t>(oracle::duplicated(c)));
  }
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(WindowShape(0, 2), Error);
  CHECK_THROWS_AS(verify_upmatrix(fixture_grid("upmatrix_2x11"), WindowShape(3, 2)), Error);
  CHECK_THROWS_AS(PartialGrid(2, 2, Alphabet(2), GridMode::Matrix, std::vector<Symbol>(3)), Error);
}
