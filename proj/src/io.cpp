#include "uptori/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "uptori/error.hpp"

namespace uptori {

namespace {

constexpr std::string_view kLozenge = "\xE2\x97\x8A";
constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty() && line.front() != '#') out.push_back(line);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> fields(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string f; in >> f;) out.push_back(f);
  return out;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, std::string("expected integer for ") + what + ", got '" + s + "'");
  }
}

std::string code_string(Code code, int radix, int cells) {
  std::string s(static_cast<std::size_t>(cells), '0');
  for (int i = cells - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = kDigits[code % static_cast<Code>(radix)];
    code /= static_cast<Code>(radix);
  }
  return s;
}

void fill_report(nlohmann::json& j, const VerificationReport& r, int radix, int cells) {
  j["valid"] = r.valid;
  j["missing_total"] = r.missing_total;
  j["duplicated_total"] = r.duplicated_total;
  auto& missing = j["missing"] = nlohmann::json::array();
  for (auto c : r.missing) missing.push_back(code_string(c, radix, cells));
  auto& dup = j["duplicated"] = nlohmann::json::array();
  for (const auto& d : r.duplicated) dup.push_back({{"word", code_string(d.code, radix, cells)}, {"count", d.count}});
  j["diamondicity"] = r.diamondicity ? nlohmann::json(*r.diamondicity) : nlohmann::json(nullptr);
  j["triviality"] = std::string(to_string(r.triviality));
}

}  // namespace

char symbol_char(Symbol s) {
  if (s.is_diamond()) return '*';
  if (s.value() >= static_cast<int>(kDigits.size())) throw Error(ErrorKind::BadSymbol, "letter has no text form");
  return kDigits[static_cast<std::size_t>(s.value())];
}

std::string format_symbols(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(symbol_char(s));
  return out;
}

std::vector<Symbol> parse_symbols(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') continue;
    if (ch == '*') {
      out.push_back(kDiamond);
    } else if (text.substr(i, kLozenge.size()) == kLozenge) {
      out.push_back(kDiamond);
      i += kLozenge.size() - 1;
    } else if (ch >= '0' && ch <= '9') {
      out.push_back(Symbol::letter(ch - '0'));
    } else if (ch >= 'a' && ch <= 'z') {
      out.push_back(Symbol::letter(ch - 'a' + 10));
    } else {
      throw Error(ErrorKind::Parse, "unexpected character '" + std::string(1, ch) + "' at offset " + std::to_string(i));
    }
  }
  return out;
}

int infer_alphabet_size(std::span<const Symbol> symbols) {
  int top = 1;
  for (Symbol s : symbols) {
    if (s.is_letter()) top = std::max(top, s.value());
  }
  return top + 1;
}

PartialWord parse_word(std::string_view text, Alphabet alphabet) { return PartialWord(alphabet, parse_symbols(text)); }

CyclicPartialWord parse_cycle(std::string_view text, Alphabet alphabet) {
  return CyclicPartialWord(alphabet, parse_symbols(text));
}

PartialGrid parse_grid(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::Parse, "grid text is empty");
  const auto head = fields(lines[0]);
  if (head.size() != 4) throw Error(ErrorKind::Parse, "grid header must be `R C a mode`");
  const int rows = parse_int(head[0], "rows");
  const int cols = parse_int(head[1], "cols");
  const int a = parse_int(head[2], "alphabet size");
  const GridMode mode = parse_mode(head[3]);
  if (rows < 1 || cols < 1) throw Error(ErrorKind::Parse, "grid dimensions must be positive");
  if (lines.size() != static_cast<std::size_t>(rows) + 1) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(rows) + " grid rows, got " +
                                      std::to_string(lines.size() - 1));
  }
  std::vector<Symbol> cells;
  cells.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (int r = 0; r < rows; ++r) {
    const auto row = parse_symbols(lines[static_cast<std::size_t>(r) + 1]);
    if (row.size() != static_cast<std::size_t>(cols)) {
      throw Error(ErrorKind::Parse, "row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                        " symbols, expected " + std::to_string(cols));
    }
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return PartialGrid(rows, cols, Alphabet(a), mode, std::move(cells));
}

void write_grid(std::ostream& out, const PartialGrid& g) {
  out << g.rows() << ' ' << g.cols() << ' ' << g.alphabet().size() << ' ' << mode_name(g.mode()) << '\n';
  std::string line;
  for (int r = 0; r < g.rows(); ++r) {
    line = format_symbols(g.row(r));
    line.push_back('\n');
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

std::string format_grid(const PartialGrid& g) {
  std::ostringstream out;
  write_grid(out, g);
  return out.str();
}

Family parse_family(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::Parse, "family text is empty");
  const auto head = fields(lines[0]);
  if (head.size() != 3) throw Error(ErrorKind::Parse, "family header must be `count x a`");
  const int count = parse_int(head[0], "member count");
  const int x = parse_int(head[1], "word length");
  const int a = parse_int(head[2], "alphabet size");
  if (count < 1 || lines.size() != static_cast<std::size_t>(count) + 1) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(count) + " members");
  }
  const Alphabet alphabet(a);
  std::vector<CyclicPartialWord> members;
  for (int i = 1; i <= count; ++i) members.push_back(parse_cycle(lines[static_cast<std::size_t>(i)], alphabet));
  return Family(alphabet, x, std::move(members));
}

std::string format_family(const Family& f) {
  std::string out = std::to_string(f.size()) + ' ' + std::to_string(f.word_length()) + ' ' +
                    std::to_string(f.alphabet().size()) + '\n';
  for (const auto& m : f.members()) out += format_symbols(m.symbols()) + '\n';
  return out;
}

void write_ppm(std::ostream& out, const PartialGrid& g, int scale, bool transpose_image) {
  if (scale < 1) throw Error(ErrorKind::OutOfBounds, "pixel scale must be >= 1");
  const int a = g.alphabet().size();
  const int height = (transpose_image ? g.cols() : g.rows()) * scale;
  const int width = (transpose_image ? g.rows() : g.cols()) * scale;
  out << "P6\n" << width << ' ' << height << "\n255\n";
  std::string line(static_cast<std::size_t>(width) * 3, '\0');
  for (int py = 0; py < height; ++py) {
    for (int px = 0; px < width; ++px) {
      const int r = (transpose_image ? px : py) / scale;
      const int c = (transpose_image ? py : px) / scale;
      const Symbol s = g(r, c);
      unsigned char rgb[3];
      if (s.is_diamond()) {
        rgb[0] = 255;
        rgb[1] = 0;
        rgb[2] = 0;
      } else {
        const int grey = a > 1 ? static_cast<int>(std::lround(200.0 * s.value() / (a - 1))) : 0;
        rgb[0] = rgb[1] = rgb[2] = static_cast<unsigned char>(grey);
      }
      std::copy(rgb, rgb + 3, line.begin() + static_cast<std::ptrdiff_t>(px) * 3);
    }
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
  if (!out) throw Error(ErrorKind::Io, "failed writing image");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot create " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::Io, "failed writing " + path);
}

std::string mode_name(GridMode mode) { return mode == GridMode::Torus ? "torus" : "matrix"; }

GridMode parse_mode(std::string_view name) {
  if (name == "torus") return GridMode::Torus;
  if (name == "matrix") return GridMode::Matrix;
  throw Error(ErrorKind::Parse, "mode must be matrix or torus, got '" + std::string(name) + "'");
}

WindowShape parse_shape(std::string_view text) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) throw Error(ErrorKind::Parse, "shape must look like WxL");
  return WindowShape(parse_int(std::string(text.substr(0, x)), "rows"),
                     parse_int(std::string(text.substr(x + 1)), "cols"));
}

nlohmann::json report_json(const VerificationReport& r, int radix, int cells) {
  nlohmann::json j;
  fill_report(j, r, radix, cells);
  return j;
}

nlohmann::json family_report_json(const FamilyReport& r, int radix, int cells) {
  nlohmann::json j;
  fill_report(j, r, radix, cells);
  j["equal_lengths"] = r.equal_lengths;
  j["upfamily"] = r.is_upfamily();
  j["cross_member_total"] = r.cross_member_total;
  j["within_member_total"] = r.within_member_total;
  auto& cross = j["cross_member"] = nlohmann::json::array();
  for (auto c : r.cross_member) cross.push_back(code_string(c, radix, cells));
  auto& within = j["within_member"] = nlohmann::json::array();
  for (auto c : r.within_member) within.push_back(code_string(c, radix, cells));
  auto& per = j["member_diamondicity"] = nlohmann::json::array();
  for (const auto& d : r.member_diamondicity) per.push_back(d ? nlohmann::json(*d) : nlohmann::json(nullptr));
  return j;
}

nlohmann::json grid_json(const PartialGrid& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < g.rows(); ++r) rows.push_back(format_symbols(g.row(r)));
  return {{"rows", g.rows()}, {"cols", g.cols()}, {"alphabet", g.alphabet().size()},
          {"mode", mode_name(g.mode())}, {"cells", rows}};
}

}  // namespace uptori
