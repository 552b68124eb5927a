#include "uptori/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <string>
#include <thread>

#include "uptori/error.hpp"

namespace uptori {

namespace {

constexpr std::uint8_t kUnset = 0xFF;

struct Window {
  std::vector<std::uint32_t> cells;  // window-local row-major order
  std::uint32_t last;                // highest cell index, completes the window
};

struct Layout {
  int a;
  std::uint32_t cell_count;
  std::uint64_t code_space;
  std::vector<Window> windows;
  // completes_at[cell] lists windows whose last cell is `cell`.
  std::vector<std::vector<std::uint32_t>> completes_at;
  // Windows sorted by last cell; first_incomplete[cell] = first window index
  // (in that order) still incomplete once cells 0..cell are set.
  std::vector<std::uint32_t> by_last;
  std::vector<std::uint32_t> first_incomplete;
};

Layout make_layout(const SearchSpec& spec) {
  Layout lay;
  lay.a = spec.alphabet_size;
  lay.cell_count = static_cast<std::uint32_t>(spec.rows) * static_cast<std::uint32_t>(spec.cols);
  const int w = spec.shape.w;
  const int l = spec.shape.l;
  lay.code_space = checked_pow(static_cast<std::uint64_t>(lay.a), w * l);
  const bool torus = spec.mode == GridMode::Torus;
  const int anchor_rows = torus ? spec.rows : spec.rows - w + 1;
  const int anchor_cols = torus ? spec.cols : spec.cols - l + 1;
  lay.completes_at.resize(lay.cell_count);
  for (int r = 0; r < anchor_rows; ++r) {
    for (int c = 0; c < anchor_cols; ++c) {
      Window win;
      win.last = 0;
      for (int i = 0; i < w; ++i) {
        for (int j = 0; j < l; ++j) {
          const auto cell = static_cast<std::uint32_t>(((r + i) % spec.rows) * spec.cols + (c + j) % spec.cols);
          win.cells.push_back(cell);
          win.last = std::max(win.last, cell);
        }
      }
      lay.completes_at[win.last].push_back(static_cast<std::uint32_t>(lay.windows.size()));
      lay.windows.push_back(std::move(win));
    }
  }
  lay.by_last.resize(lay.windows.size());
  for (std::uint32_t i = 0; i < lay.by_last.size(); ++i) lay.by_last[i] = i;
  std::stable_sort(lay.by_last.begin(), lay.by_last.end(),
                   [&](std::uint32_t x, std::uint32_t y) { return lay.windows[x].last < lay.windows[y].last; });
  lay.first_incomplete.resize(lay.cell_count);
  std::uint32_t k = 0;
  for (std::uint32_t cell = 0; cell < lay.cell_count; ++cell) {
    while (k < lay.by_last.size() && lay.windows[lay.by_last[k]].last <= cell) ++k;
    lay.first_incomplete[cell] = k;
  }
  return lay;
}

struct Shared {
  const SearchSpec& spec;
  const Layout& lay;
  bool nontrivial_only;
  const ProgressCallback& progress;
  std::chrono::steady_clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> accepted{0};
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> next_task{0};
  std::mutex mutex;
  std::vector<PartialGrid> solutions{};
  std::map<std::uint64_t, std::uint64_t> leaf_mass{};
};

class Worker {
 public:
  explicit Worker(Shared& shared)
      : sh_(shared), lay_(shared.lay), values_(lay_.cell_count, kUnset), counts_(lay_.code_space, 0) {}

  void run_task(std::uint64_t task, std::uint32_t prefix) {
    std::uint64_t rest = task;
    std::vector<std::uint8_t> digits(prefix);
    for (std::uint32_t i = prefix; i-- > 0;) {
      digits[i] = static_cast<std::uint8_t>(rest % static_cast<std::uint64_t>(lay_.a + 1));
      rest /= static_cast<std::uint64_t>(lay_.a + 1);
    }
    const std::size_t mark = undo_.size();
    std::uint32_t set = 0;
    bool ok = true;
    for (; set < prefix && ok; ++set) ok = assign(set, digits[set]);
    if (ok) descend(prefix);
    rollback(mark);
    for (std::uint32_t i = 0; i < set; ++i) values_[i] = kUnset;
  }

  void flush_nodes() {
    sh_.nodes += local_nodes_;
    local_nodes_ = 0;
  }

  void flush_leaves() {
    std::lock_guard<std::mutex> lock(sh_.mutex);
    for (const auto& [mass, n] : leaf_mass_) sh_.leaf_mass[mass] += n;
    leaf_mass_.clear();
  }

 private:
  // Sets the cell and commits completed windows; false means prune.
  bool assign(std::uint32_t cell, std::uint8_t v) {
    ++local_nodes_;
    if ((local_nodes_ & 0xFFFFF) == 0) report();
    values_[cell] = v;
    bool ok = true;
    for (auto wi : lay_.completes_at[cell]) {
      if (!commit(lay_.windows[wi])) ok = false;
      if (!ok && !sh_.spec.disable_pruning) return false;
    }
    if (!ok && !sh_.spec.disable_pruning) return false;
    if (sh_.spec.capacity_pruning && !sh_.spec.disable_pruning && !capacity_ok(cell)) return false;
    return true;
  }

  bool commit(const Window& win) {
    const auto a = static_cast<std::uint64_t>(lay_.a);
    std::uint64_t base = 0;
    weights_.clear();
    std::uint64_t place = lay_.code_space;
    for (auto cell : win.cells) {
      place /= a;
      const std::uint8_t v = values_[cell];
      if (v == lay_.a) {
        weights_.push_back(place);
      } else {
        base += v * place;
      }
    }
    bool ok = true;
    // Odometer over the diamond assignments.
    digits_.assign(weights_.size(), 0);
    std::uint64_t code = base;
    while (true) {
      if (++counts_[code] == 1) {
        ++covered_;
      } else {
        ok = false;
      }
      undo_.push_back(static_cast<std::uint32_t>(code));
      if (!ok && !sh_.spec.disable_pruning) return false;
      std::size_t k = 0;
      while (k < digits_.size() && digits_[k] + 1 == a) {
        code -= digits_[k] * weights_[k];
        digits_[k] = 0;
        ++k;
      }
      if (k == digits_.size()) break;
      ++digits_[k];
      code += weights_[k];
    }
    return ok;
  }

  bool capacity_ok(std::uint32_t cell) const {
    const std::uint64_t uncovered = lay_.code_space - covered_;
    std::uint64_t possible = 0;
    for (std::size_t k = lay_.first_incomplete[cell]; k < lay_.by_last.size(); ++k) {
      int free = 0;
      for (auto c : lay_.windows[lay_.by_last[k]].cells) {
        if (values_[c] == kUnset || values_[c] == lay_.a) ++free;
      }
      possible += checked_pow(static_cast<std::uint64_t>(lay_.a), free);
      if (possible >= uncovered) return true;
    }
    return possible >= uncovered;
  }

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      if (--counts_[undo_.back()] == 0) --covered_;
      undo_.pop_back();
    }
  }

  void descend(std::uint32_t cell) {
    if (sh_.stop.load(std::memory_order_relaxed)) return;
    if (cell == lay_.cell_count) {
      ++leaf_mass_[undo_.size()];
      if (covered_ == lay_.code_space && undo_.size() == lay_.code_space) accept();
      return;
    }
    for (int v = 0; v <= lay_.a; ++v) {
      const std::size_t mark = undo_.size();
      if (assign(cell, static_cast<std::uint8_t>(v))) descend(cell + 1);
      rollback(mark);
      if (sh_.stop.load(std::memory_order_relaxed)) break;
    }
    values_[cell] = kUnset;
  }

  void accept() {
    const auto& spec = sh_.spec;
    std::vector<Symbol> cells;
    cells.reserve(values_.size());
    for (auto v : values_) cells.push_back(v == lay_.a ? kDiamond : Symbol::letter(v));
    PartialGrid g(spec.rows, spec.cols, Alphabet(spec.alphabet_size), spec.mode, std::move(cells));
    if (!verify_grid(g, spec.shape).valid) {
      throw Error(ErrorKind::CertificationFailed, "search produced a grid the verifier rejects");
    }
    if (sh_.nontrivial_only && classify_grid(g, spec.shape) != Triviality::NontrivialPartial) return;
    const std::uint64_t n = ++sh_.accepted;
    if (spec.limit && n > *spec.limit) {
      sh_.stop = true;
      return;
    }
    {
      std::lock_guard<std::mutex> lock(sh_.mutex);
      sh_.solutions.push_back(std::move(g));
    }
    if (spec.limit && n == *spec.limit) sh_.stop = true;
  }

  void report() {
    flush_nodes();
    if (!sh_.progress) return;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - sh_.start).count();
    std::lock_guard<std::mutex> lock(sh_.mutex);
    sh_.progress({sh_.nodes.load(), static_cast<std::uint64_t>(sh_.solutions.size()), secs});
  }

  Shared& sh_;
  const Layout& lay_;
  std::vector<std::uint8_t> values_;
  std::vector<std::uint16_t> counts_;
  std::vector<std::uint32_t> undo_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> digits_;
  std::uint64_t covered_ = 0;
  std::map<std::uint64_t, std::uint64_t> leaf_mass_;
  std::uint64_t local_nodes_ = 0;
};

bool grid_less(const PartialGrid& x, const PartialGrid& y) {
  if (x.rows() != y.rows()) return x.rows() < y.rows();
  if (x.cols() != y.cols()) return x.cols() < y.cols();
  return std::lexicographical_compare(x.cells().begin(), x.cells().end(), y.cells().begin(), y.cells().end());
}

void validate(const SearchSpec& spec) {
  Alphabet check(spec.alphabet_size);
  if (spec.alphabet_size > 254) throw Error(ErrorKind::SpecTooLarge, "alphabet too large for search");
  if (spec.rows < 1 || spec.cols < 1) throw Error(ErrorKind::OutOfBounds, "grid dimensions must be >= 1");
  if (spec.mode == GridMode::Matrix && (spec.rows < spec.shape.w || spec.cols < spec.shape.l)) {
    throw Error(ErrorKind::ShapeTooLarge, "matrix search needs R >= w and C >= l");
  }
  const auto cells = static_cast<std::uint64_t>(spec.shape.w) * static_cast<std::uint64_t>(spec.shape.l);
  std::uint64_t space = 1;
  for (std::uint64_t i = 0; i < cells; ++i) {
    space *= static_cast<std::uint64_t>(spec.alphabet_size);
    if (space > (std::uint64_t{1} << 26)) {
      throw Error(ErrorKind::SpecTooLarge, "a^(w*l) exceeds 2^26 window codes");
    }
  }
  if (spec.threads < 1) throw Error(ErrorKind::OutOfBounds, "threads must be >= 1");
}

Catalog run(const SearchSpec& spec, bool nontrivial_only, const ProgressCallback& progress) {
  validate(spec);
  const Layout lay = make_layout(spec);
  Shared shared{spec, lay, nontrivial_only, progress, std::chrono::steady_clock::now(), {}, {}, {}, {}, {}};

  std::uint32_t prefix = 0;
  std::uint64_t tasks = 1;
  if (spec.threads > 1) {
    const auto target = static_cast<std::uint64_t>(spec.threads) * 64;
    while (tasks < target && prefix < lay.cell_count) {
      tasks *= static_cast<std::uint64_t>(spec.alphabet_size + 1);
      ++prefix;
    }
  }

  auto work = [&]() {
    Worker worker(shared);
    for (std::uint64_t t = shared.next_task++; t < tasks && !shared.stop; t = shared.next_task++) {
      worker.run_task(t, prefix);
    }
    worker.flush_nodes();
    worker.flush_leaves();
  };
  if (spec.threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < spec.threads; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  Catalog cat;
  cat.spec = spec;
  cat.nodes_explored = shared.nodes.load();
  cat.leaf_mass = std::move(shared.leaf_mass);
  cat.complete = !shared.stop.load();
  cat.raw_count = shared.solutions.size();

  std::vector<std::pair<PartialGrid, PartialGrid>> keyed;
  keyed.reserve(shared.solutions.size());
  for (auto& g : shared.solutions) {
    PartialGrid key = canonical_form(g, spec.shape);
    keyed.emplace_back(std::move(key), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (grid_less(x.first, y.first)) return true;
    if (grid_less(y.first, x.first)) return false;
    return grid_less(x.second, y.second);
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    const bool fresh = i == 0 || !(keyed[i].first == keyed[i - 1].first);
    if (fresh) ++cat.canonical_count;
    if (!spec.dedup) {
      cat.solutions.push_back(std::move(keyed[i].second));
    } else if (fresh) {
      cat.solutions.push_back(keyed[i].first);
    }
  }
  return cat;
}

}  // namespace

Catalog search(const SearchSpec& spec, const ProgressCallback& progress) { return run(spec, false, progress); }

Catalog search_nontrivial(const SearchSpec& spec, const ProgressCallback& progress) {
  return run(spec, true, progress);
}

}  // namespace uptori
