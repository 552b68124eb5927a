#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "uptori/grids.hpp"

namespace uptori {

struct SearchSpec {
  int alphabet_size = 2;
  WindowShape shape{2, 2};
  int rows = 1;
  int cols = 1;
  GridMode mode = GridMode::Matrix;
  bool dedup = false;
  std::optional<std::size_t> limit;
  // Prune when incomplete windows cannot cover every uncovered word.
  bool capacity_pruning = false;
  // Debug: never prune on duplicates; check only complete assignments.
  bool disable_pruning = false;
  int threads = 1;
};

struct SearchProgress {
  std::uint64_t nodes;
  std::uint64_t solutions;
  double seconds;
};

struct Catalog {
  SearchSpec spec;
  // Sorted by canonical form; canonical representatives when spec.dedup.
  std::vector<PartialGrid> solutions;
  std::size_t canonical_count = 0;
  std::size_t raw_count = 0;
  std::uint64_t nodes_explored = 0;
  // Ledger mass -> number of complete assignments reached with that mass.
  std::map<std::uint64_t, std::uint64_t> leaf_mass;
  // False when the limit stopped the search early.
  bool complete = true;
};

using ProgressCallback = std::function<void(const SearchProgress&)>;

Catalog search(const SearchSpec& spec, const ProgressCallback& progress = {});

// As search, keeping only solutions classified NontrivialPartial.
Catalog search_nontrivial(const SearchSpec& spec, const ProgressCallback& progress = {});

}  // namespace uptori
