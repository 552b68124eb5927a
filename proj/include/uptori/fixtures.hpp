#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uptori/families.hpp"
#include "uptori/grids.hpp"
#include "uptori/words.hpp"

namespace uptori {

enum class FixtureKind { Word, Cycle, Grid, Family };

struct Fixture {
  std::string name;
  FixtureKind kind;
  // Word/cycle line, or the full grid/family file text.
  std::string text;
  // Alphabet size for words and cycles (grids and families carry their own).
  int alphabet = 2;
  // Word length n for words/cycles, x for families.
  int word_length = 0;
  // Window for grids.
  std::optional<WindowShape> window;
  // Expected verdict under the parameters above.
  bool expect_valid = true;
  std::string description;
};

const std::vector<Fixture>& fixtures();
// Throws Parse for unknown names.
const Fixture& fixture(std::string_view name);

std::string_view to_string(FixtureKind kind);

PartialWord fixture_word(std::string_view name);
CyclicPartialWord fixture_cycle(std::string_view name);
PartialGrid fixture_grid(std::string_view name);
Family fixture_family(std::string_view name);

// File contents for export: grid/family text as stored, words as a single line.
std::string fixture_file_text(const Fixture& f);

}  // namespace uptori
