#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uptori/families.hpp"
#include "uptori/grids.hpp"
#include "uptori/words.hpp"

namespace uptori {

// Letters 0-9 then a-z; the diamond is '*'.
char symbol_char(Symbol s);
std::string format_symbols(std::span<const Symbol> symbols);

// Accepts '*' or a UTF-8 lozenge for the diamond; whitespace is skipped.
std::vector<Symbol> parse_symbols(std::string_view text);
// Largest letter + 1, at least 2.
int infer_alphabet_size(std::span<const Symbol> symbols);

PartialWord parse_word(std::string_view text, Alphabet alphabet);
CyclicPartialWord parse_cycle(std::string_view text, Alphabet alphabet);

// Header `R C a mode`, then R lines of C symbols. Blank lines and lines
// starting with '#' are ignored.
PartialGrid parse_grid(std::string_view text);
std::string format_grid(const PartialGrid& g);
void write_grid(std::ostream& out, const PartialGrid& g);

// Header `count x a`, then one member per line.
Family parse_family(std::string_view text);
std::string format_family(const Family& f);

// Binary P6: 0 black, letters 1..a-1 evenly spaced greys up to 200, diamond red.
void write_ppm(std::ostream& out, const PartialGrid& g, int scale = 1, bool transpose = false);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

std::string mode_name(GridMode mode);
GridMode parse_mode(std::string_view name);
WindowShape parse_shape(std::string_view text);  // "WxL"

// Codes are rendered as symbol strings of `cells` letters.
nlohmann::json report_json(const VerificationReport& r, int radix, int cells);
nlohmann::json family_report_json(const FamilyReport& r, int radix, int cells);
nlohmann::json grid_json(const PartialGrid& g);

}  // namespace uptori
