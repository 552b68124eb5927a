#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "uptori/ledger.hpp"
#include "uptori/symbol.hpp"

namespace uptori {

enum class GridMode { Matrix, Torus };

// Window size w x l (rows x columns).
struct WindowShape {
  int w;
  int l;

  WindowShape(int rows, int cols);
  WindowShape transposed() const { return {l, w}; }
  bool operator==(const WindowShape&) const = default;
};

// Row-major partial matrix; Torus mode reads both indices modulo the size.
class PartialGrid {
 public:
  PartialGrid(int rows, int cols, Alphabet alphabet, GridMode mode, std::vector<Symbol> cells);
  // All-diamond grid.
  PartialGrid(int rows, int cols, Alphabet alphabet, GridMode mode);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  GridMode mode() const noexcept { return mode_; }
  std::span<const Symbol> cells() const noexcept { return cells_; }

  Symbol operator()(int r, int c) const { return cells_[index(r, c)]; }
  void set(int r, int c, Symbol s);
  // Wrapping access regardless of mode.
  Symbol wrapped(std::int64_t r, std::int64_t c) const;
  std::span<const Symbol> row(int r) const {
    return {cells_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_),
            static_cast<std::size_t>(cols_)};
  }

  PartialGrid with_mode(GridMode mode) const;
  std::size_t diamond_count() const;

  bool operator==(const PartialGrid&) const = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_;
  int cols_;
  Alphabet alphabet_;
  GridMode mode_;
  std::vector<Symbol> cells_;
};

// w x l Matrix-mode grid with p[y,x] = g[y+r, x+c].
PartialGrid subarray(const PartialGrid& g, std::int64_t r, std::int64_t c, WindowShape shape);

// Window anchors: (R-w+1)(C-l+1) for Matrix, R*C for Torus. Codes are row-major.
CoverageLedger grid_coverage(const PartialGrid& g, WindowShape shape);

// Number of windows holding each diamond count.
std::map<int, std::uint64_t> window_diamond_histogram(const PartialGrid& g, WindowShape shape);

Triviality classify_grid(const PartialGrid& g, WindowShape shape);

VerificationReport verify_upmatrix(const PartialGrid& g, WindowShape shape);
VerificationReport verify_uptorus(const PartialGrid& g, WindowShape shape);
// Dispatches on g.mode().
VerificationReport verify_grid(const PartialGrid& g, WindowShape shape);

PartialGrid unroll_torus(const PartialGrid& t, WindowShape shape);

struct Gluability {
  bool wraps_vertically;    // top w-1 rows repeat at the bottom
  bool wraps_horizontally;  // left l-1 columns repeat at the right
};

Gluability gluability(const PartialGrid& m, WindowShape shape);
std::optional<PartialGrid> glue_matrix(const PartialGrid& m, WindowShape shape);

PartialGrid transpose(const PartialGrid& g);

class GridSymmetry {
 public:
  enum class Kind { HorizontalReflect, VerticalReflect, Transpose, RowRotate, ColRotate, AlphabetPermute };

  static GridSymmetry horizontal_reflect() { return GridSymmetry(Kind::HorizontalReflect, 0, {}); }
  static GridSymmetry vertical_reflect() { return GridSymmetry(Kind::VerticalReflect, 0, {}); }
  static GridSymmetry transpose() { return GridSymmetry(Kind::Transpose, 0, {}); }
  static GridSymmetry row_rotate(int k) { return GridSymmetry(Kind::RowRotate, k, {}); }
  static GridSymmetry col_rotate(int k) { return GridSymmetry(Kind::ColRotate, k, {}); }
  // perm[i] is the image of letter i; must be a bijection on 0..a-1.
  static GridSymmetry alphabet_permute(std::vector<int> perm);

  Kind kind() const noexcept { return kind_; }
  PartialGrid apply(const PartialGrid& g) const;

 private:
  GridSymmetry(Kind kind, int k, std::vector<int> perm) : kind_(kind), k_(k), perm_(std::move(perm)) {}

  Kind kind_;
  int k_;
  std::vector<int> perm_;
};

PartialGrid apply_all(const PartialGrid& g, std::span<const GridSymmetry> ops);

// Least cell sequence over the orbit under reflections, alphabet permutations,
// row/column rotations (Torus mode only) and transposition (square grid and
// square window only). Idempotent.
PartialGrid canonical_form(const PartialGrid& g, WindowShape shape);

// Cross-shape key: the smaller (rows, cols, cells) of canonical_form(g) and
// canonical_form of its transpose under the transposed window.
PartialGrid shape_independent_form(const PartialGrid& g, WindowShape shape);

}  // namespace uptori
