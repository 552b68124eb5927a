#include "uptori/grids.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "uptori/error.hpp"

namespace uptori {

namespace {

std::string dims(int r, int c) { return std::to_string(r) + "x" + std::to_string(c); }

std::size_t reduce(std::int64_t i, int n) {
  return static_cast<std::size_t>(((i % n) + n) % n);
}

struct GridScan {
  CoverageLedger ledger;
  std::map<int, std::uint64_t> histogram;
};

void check_matrix_fits(const PartialGrid& g, WindowShape shape) {
  if (g.mode() == GridMode::Matrix && (g.rows() < shape.w || g.cols() < shape.l)) {
    throw Error(ErrorKind::ShapeTooLarge,
                "window " + dims(shape.w, shape.l) + " does not fit matrix " + dims(g.rows(), g.cols()));
  }
}

GridScan scan_grid(const PartialGrid& g, WindowShape shape, bool want_ledger) {
  check_matrix_fits(g, shape);
  const int radix = g.alphabet().size();
  const int cells = shape.w * shape.l;
  GridScan scan{want_ledger ? CoverageLedger(static_cast<std::uint64_t>(radix), cells) : CoverageLedger(1, 1), {}};

  std::vector<Code> weights(static_cast<std::size_t>(cells));
  Code p = 1;
  for (int j = cells - 1; j >= 0; --j) {
    weights[static_cast<std::size_t>(j)] = p;
    if (j > 0) p *= static_cast<Code>(radix);
  }

  const bool torus = g.mode() == GridMode::Torus;
  const int anchor_rows = torus ? g.rows() : g.rows() - shape.w + 1;
  const int anchor_cols = torus ? g.cols() : g.cols() - shape.l + 1;
  const auto all = g.cells();
  const auto C = static_cast<std::size_t>(g.cols());

  std::vector<std::size_t> row_base(static_cast<std::size_t>(shape.w));
  std::vector<std::size_t> col_idx(static_cast<std::size_t>(shape.l));
  std::vector<Code> diamond_weights;
  diamond_weights.reserve(static_cast<std::size_t>(cells));

  for (int r = 0; r < anchor_rows; ++r) {
    for (int y = 0; y < shape.w; ++y) row_base[static_cast<std::size_t>(y)] = reduce(r + y, g.rows()) * C;
    for (int c = 0; c < anchor_cols; ++c) {
      for (int x = 0; x < shape.l; ++x) col_idx[static_cast<std::size_t>(x)] = reduce(c + x, g.cols());
      Code base = 0;
      diamond_weights.clear();
      std::size_t k = 0;
      for (int y = 0; y < shape.w; ++y) {
        const std::size_t rb = row_base[static_cast<std::size_t>(y)];
        for (int x = 0; x < shape.l; ++x, ++k) {
          const Symbol s = all[rb + col_idx[static_cast<std::size_t>(x)]];
          if (s.is_diamond()) {
            diamond_weights.push_back(weights[k]);
          } else {
            base += static_cast<Code>(s.value()) * weights[k];
          }
        }
      }
      ++scan.histogram[static_cast<int>(diamond_weights.size())];
      if (want_ledger) scan.ledger.add_expansions(base, diamond_weights);
    }
  }
  return scan;
}

VerificationReport report_for(const PartialGrid& g, WindowShape shape) {
  GridScan scan = scan_grid(g, shape, true);
  VerificationReport report = summarize(scan.ledger);
  if (scan.histogram.size() == 1) report.diamondicity = scan.histogram.begin()->first;
  report.triviality = classify_grid(g, shape);
  return report;
}

std::vector<Symbol> relabel_first_occurrence(std::span<const Symbol> cells) {
  std::vector<int> map(256, -1);
  int next = 0;
  std::vector<Symbol> out(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Symbol s = cells[i];
    if (s.is_diamond()) {
      out[i] = s;
      continue;
    }
    int& m = map[s.raw()];
    if (m < 0) m = next++;
    out[i] = Symbol::letter(m);
  }
  return out;
}

PartialGrid canonical_same_shape(const PartialGrid& g, bool allow_transpose) {
  const bool torus = g.mode() == GridMode::Torus;
  const int R = g.rows();
  const int C = g.cols();
  std::vector<const PartialGrid*> bases{&g};
  std::optional<PartialGrid> t;
  if (allow_transpose) {
    t = transpose(g);
    bases.push_back(&*t);
  }
  std::vector<Symbol> best;
  std::vector<Symbol> candidate(static_cast<std::size_t>(R) * static_cast<std::size_t>(C));
  for (const PartialGrid* base : bases) {
    for (int hflip = 0; hflip < 2; ++hflip) {
      for (int vflip = 0; vflip < 2; ++vflip) {
        for (int dr = 0; dr < (torus ? R : 1); ++dr) {
          for (int dc = 0; dc < (torus ? C : 1); ++dc) {
            std::size_t k = 0;
            for (int r = 0; r < R; ++r) {
              const int sr0 = (r + dr) % R;
              const int sr = vflip ? R - 1 - sr0 : sr0;
              for (int c = 0; c < C; ++c) {
                const int sc0 = (c + dc) % C;
                const int sc = hflip ? C - 1 - sc0 : sc0;
                candidate[k++] = (*base)(sr, sc);
              }
            }
            // The least relabeling maps letters to 0,1,... in order of first
            // appearance; diamonds stay fixed.
            auto relabeled = relabel_first_occurrence(candidate);
            if (best.empty() || relabeled < best) best = std::move(relabeled);
          }
        }
      }
    }
  }
  return PartialGrid(R, C, g.alphabet(), g.mode(), std::move(best));
}

}  // namespace

WindowShape::WindowShape(int rows, int cols) : w(rows), l(cols) {
  if (rows < 1 || cols < 1) {
    throw Error(ErrorKind::BadWindowLength, "window shape must be at least 1x1, got " + dims(rows, cols));
  }
}

PartialGrid::PartialGrid(int rows, int cols, Alphabet alphabet, GridMode mode, std::vector<Symbol> cells)
    : rows_(rows), cols_(cols), alphabet_(alphabet), mode_(mode), cells_(std::move(cells)) {
  if (rows < 1 || cols < 1) throw Error(ErrorKind::ShapeMismatch, "grid must be at least 1x1, got " + dims(rows, cols));
  if (cells_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw Error(ErrorKind::ShapeMismatch, "grid " + dims(rows, cols) + " given " + std::to_string(cells_.size()) +
                                              " cells");
  }
  for (Symbol s : cells_) {
    if (!fits(s, alphabet_)) {
      throw Error(ErrorKind::BadSymbol, "letter " + std::to_string(s.value()) + " outside alphabet of size " +
                                            std::to_string(alphabet_.size()));
    }
  }
}

PartialGrid::PartialGrid(int rows, int cols, Alphabet alphabet, GridMode mode)
    : PartialGrid(rows, cols, alphabet, mode,
                  std::vector<Symbol>(static_cast<std::size_t>(std::max(rows, 0)) *
                                          static_cast<std::size_t>(std::max(cols, 0)),
                                      kDiamond)) {}

void PartialGrid::set(int r, int c, Symbol s) {
  if (!fits(s, alphabet_)) throw Error(ErrorKind::BadSymbol, "letter outside alphabet");
  cells_[index(r, c)] = s;
}

Symbol PartialGrid::wrapped(std::int64_t r, std::int64_t c) const {
  return cells_[reduce(r, rows_) * static_cast<std::size_t>(cols_) + reduce(c, cols_)];
}

PartialGrid PartialGrid::with_mode(GridMode mode) const {
  PartialGrid out = *this;
  out.mode_ = mode;
  return out;
}

std::size_t PartialGrid::diamond_count() const {
  return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](Symbol s) { return s.is_diamond(); }));
}

PartialGrid subarray(const PartialGrid& g, std::int64_t r, std::int64_t c, WindowShape shape) {
  if (g.mode() == GridMode::Matrix) {
    if (r < 0 || c < 0 || r > g.rows() - shape.w || c > g.cols() - shape.l) {
      throw Error(ErrorKind::OutOfBounds, "subarray " + dims(shape.w, shape.l) + " at (" + std::to_string(r) + "," +
                                              std::to_string(c) + ") leaves matrix " + dims(g.rows(), g.cols()));
    }
  }
  std::vector<Symbol> cells;
  cells.reserve(static_cast<std::size_t>(shape.w) * static_cast<std::size_t>(shape.l));
  for (int y = 0; y < shape.w; ++y) {
    for (int x = 0; x < shape.l; ++x) cells.push_back(g.wrapped(r + y, c + x));
  }
  return PartialGrid(shape.w, shape.l, g.alphabet(), GridMode::Matrix, std::move(cells));
}

CoverageLedger grid_coverage(const PartialGrid& g, WindowShape shape) { return scan_grid(g, shape, true).ledger; }

std::map<int, std::uint64_t> window_diamond_histogram(const PartialGrid& g, WindowShape shape) {
  return scan_grid(g, shape, false).histogram;
}

Triviality classify_grid(const PartialGrid& g, WindowShape shape) {
  const std::size_t d = g.diamond_count();
  if (d == 0) return Triviality::NoDiamonds;
  if (d == g.cells().size()) return Triviality::AllDiamonds;
  if (shape.w == 1 || shape.l == 1) return Triviality::DegenerateShape;
  return Triviality::NontrivialPartial;
}

VerificationReport verify_upmatrix(const PartialGrid& g, WindowShape shape) {
  if (g.mode() != GridMode::Matrix) throw Error(ErrorKind::ModeMismatch, "verify_upmatrix needs a matrix");
  return report_for(g, shape);
}

VerificationReport verify_uptorus(const PartialGrid& g, WindowShape shape) {
  if (g.mode() != GridMode::Torus) throw Error(ErrorKind::ModeMismatch, "verify_uptorus needs a torus");
  return report_for(g, shape);
}

VerificationReport verify_grid(const PartialGrid& g, WindowShape shape) { return report_for(g, shape); }

PartialGrid unroll_torus(const PartialGrid& t, WindowShape shape) {
  if (t.mode() != GridMode::Torus) throw Error(ErrorKind::ModeMismatch, "unroll_torus needs a torus");
  const int R = t.rows() + shape.w - 1;
  const int C = t.cols() + shape.l - 1;
  std::vector<Symbol> cells;
  cells.reserve(static_cast<std::size_t>(R) * static_cast<std::size_t>(C));
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < C; ++c) cells.push_back(t.wrapped(r, c));
  }
  return PartialGrid(R, C, t.alphabet(), GridMode::Matrix, std::move(cells));
}

Gluability gluability(const PartialGrid& m, WindowShape shape) {
  Gluability g{m.rows() > shape.w - 1, m.cols() > shape.l - 1};
  const int R = m.rows();
  const int C = m.cols();
  for (int r = 0; g.wraps_vertically && r < shape.w - 1; ++r) {
    for (int c = 0; c < C; ++c) {
      if (m(r, c) != m(R - shape.w + 1 + r, c)) {
        g.wraps_vertically = false;
        break;
      }
    }
  }
  for (int c = 0; g.wraps_horizontally && c < shape.l - 1; ++c) {
    for (int r = 0; r < R; ++r) {
      if (m(r, c) != m(r, C - shape.l + 1 + c)) {
        g.wraps_horizontally = false;
        break;
      }
    }
  }
  return g;
}

std::optional<PartialGrid> glue_matrix(const PartialGrid& m, WindowShape shape) {
  const Gluability g = gluability(m, shape);
  if (!g.wraps_vertically || !g.wraps_horizontally) return std::nullopt;
  const int R = m.rows() - shape.w + 1;
  const int C = m.cols() - shape.l + 1;
  std::vector<Symbol> cells;
  cells.reserve(static_cast<std::size_t>(R) * static_cast<std::size_t>(C));
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < C; ++c) cells.push_back(m(r, c));
  }
  return PartialGrid(R, C, m.alphabet(), GridMode::Torus, std::move(cells));
}

PartialGrid transpose(const PartialGrid& g) {
  std::vector<Symbol> cells;
  cells.reserve(g.cells().size());
  for (int c = 0; c < g.cols(); ++c) {
    for (int r = 0; r < g.rows(); ++r) cells.push_back(g(r, c));
  }
  return PartialGrid(g.cols(), g.rows(), g.alphabet(), g.mode(), std::move(cells));
}

GridSymmetry GridSymmetry::alphabet_permute(std::vector<int> perm) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) throw Error(ErrorKind::BadAlphabet, "alphabet permutation is not a bijection");
  }
  return GridSymmetry(Kind::AlphabetPermute, 0, std::move(perm));
}

PartialGrid GridSymmetry::apply(const PartialGrid& g) const {
  const int R = g.rows();
  const int C = g.cols();
  std::vector<Symbol> cells(g.cells().size());
  auto at = [&](int r, int c) -> Symbol& {
    return cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(C) + static_cast<std::size_t>(c)];
  };
  switch (kind_) {
    case Kind::Transpose:
      return uptori::transpose(g);
    case Kind::HorizontalReflect:
      for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c) at(r, c) = g(r, C - 1 - c);
      break;
    case Kind::VerticalReflect:
      for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c) at(r, c) = g(R - 1 - r, c);
      break;
    case Kind::RowRotate:
      for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c) at(r, c) = g.wrapped(r + k_, c);
      break;
    case Kind::ColRotate:
      for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c) at(r, c) = g.wrapped(r, c + k_);
      break;
    case Kind::AlphabetPermute:
      if (perm_.size() != static_cast<std::size_t>(g.alphabet().size())) {
        throw Error(ErrorKind::BadAlphabet, "permutation size does not match alphabet");
      }
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const Symbol s = g.cells()[i];
        cells[i] = s.is_diamond() ? s : Symbol::letter(perm_[static_cast<std::size_t>(s.value())]);
      }
      break;
  }
  return PartialGrid(R, C, g.alphabet(), g.mode(), std::move(cells));
}

PartialGrid apply_all(const PartialGrid& g, std::span<const GridSymmetry> ops) {
  PartialGrid out = g;
  for (const auto& op : ops) out = op.apply(out);
  return out;
}

PartialGrid canonical_form(const PartialGrid& g, WindowShape shape) {
  const bool square = g.rows() == g.cols() && shape.w == shape.l;
  return canonical_same_shape(g, square);
}

PartialGrid shape_independent_form(const PartialGrid& g, WindowShape shape) {
  PartialGrid a = canonical_form(g, shape);
  PartialGrid b = canonical_form(transpose(g), shape.transposed());
  auto key = [](const PartialGrid& x) {
    return std::make_tuple(x.rows(), x.cols(), std::vector<Symbol>(x.cells().begin(), x.cells().end()));
  };
  return key(b) < key(a) ? b : a;
}

}  // namespace uptori
