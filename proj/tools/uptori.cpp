#include <unistd.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "uptori/construct.hpp"
#include "uptori/error.hpp"
#include "uptori/families.hpp"
#include "uptori/fixtures.hpp"
#include "uptori/generate.hpp"
#include "uptori/grids.hpp"
#include "uptori/io.hpp"
#include "uptori/search.hpp"
#include "uptori/words.hpp"

using nlohmann::json;
using namespace uptori;

namespace {

constexpr std::string_view kFixturePrefix = "fixture:";

bool g_json = false;

// Exit status carried out of a subcommand.
struct Outcome {
  int code = 0;
};

void emit(const json& j) {
  if (g_json) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

std::optional<std::string_view> fixture_name(const std::string& spec) {
  if (spec.rfind(kFixturePrefix, 0) == 0) return std::string_view(spec).substr(kFixturePrefix.size());
  return std::nullopt;
}

// A word argument is a fixture, a file holding one line, or the literal text.
std::pair<std::vector<Symbol>, std::optional<int>> load_symbols(const std::string& spec) {
  if (auto name = fixture_name(spec)) {
    const Fixture& f = fixture(*name);
    if (f.kind != FixtureKind::Word && f.kind != FixtureKind::Cycle) {
      throw Error(ErrorKind::Parse, "fixture " + std::string(*name) + " is not a word");
    }
    return {parse_symbols(f.text), f.alphabet};
  }
  if (std::filesystem::is_regular_file(spec)) {
    std::istringstream in(read_text_file(spec));
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.front() != '#' && line.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    return {parse_symbols(line), std::nullopt};
  }
  return {parse_symbols(spec), std::nullopt};
}

Alphabet pick_alphabet(const std::vector<Symbol>& symbols, std::optional<int> from_source, int flag) {
  if (flag > 0) return Alphabet(flag);
  if (from_source) return Alphabet(*from_source);
  return Alphabet(infer_alphabet_size(symbols));
}

CyclicPartialWord load_cycle(const std::string& spec, int alphabet_flag) {
  auto [symbols, a] = load_symbols(spec);
  const Alphabet alphabet = pick_alphabet(symbols, a, alphabet_flag);
  return CyclicPartialWord(alphabet, std::move(symbols));
}

PartialWord load_word(const std::string& spec, int alphabet_flag) {
  auto [symbols, a] = load_symbols(spec);
  const Alphabet alphabet = pick_alphabet(symbols, a, alphabet_flag);
  return PartialWord(alphabet, std::move(symbols));
}

PartialGrid load_grid(const std::string& spec) {
  if (auto name = fixture_name(spec)) return fixture_grid(*name);
  return parse_grid(read_text_file(spec));
}

Family load_family(const std::string& spec) {
  if (auto name = fixture_name(spec)) return fixture_family(*name);
  return parse_family(read_text_file(spec));
}

const Fixture* maybe_fixture(const std::string& spec) {
  if (auto name = fixture_name(spec)) return &fixture(*name);
  return nullptr;
}

int require_length(int flag, const Fixture* f, const char* what) {
  if (flag > 0) return flag;
  if (f && f->word_length > 0) return f->word_length;
  throw Error(ErrorKind::Parse, std::string("missing --") + what);
}

WindowShape require_window(const std::string& flag, const Fixture* f) {
  if (!flag.empty()) return parse_shape(flag);
  if (f && f->window) return *f->window;
  throw Error(ErrorKind::Parse, "missing --window");
}

std::vector<std::size_t> parse_cuts(const std::string& text) {
  std::vector<std::size_t> cuts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      cuts.push_back(static_cast<std::size_t>(std::stoull(item)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad cut index '" + item + "'");
    }
  }
  return cuts;
}

void write_grid_output(const PartialGrid& g, const std::string& out) {
  if (out.empty() || out == "-") {
    write_grid(std::cout, g);
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw Error(ErrorKind::Io, "cannot create " + out);
  write_grid(file, g);
  if (!file) throw Error(ErrorKind::Io, "failed writing " + out);
}

json word_report(const VerificationReport& r, const Alphabet& a, int n) { return report_json(r, a.size(), n); }

void add_verify(CLI::App& app, Outcome& outcome) {
  auto* cmd = app.add_subcommand("verify", "Verify an upword, upcycle, upmatrix, uptorus or family");
  auto kind = std::make_shared<std::string>();
  auto input = std::make_shared<std::string>();
  auto n = std::make_shared<int>(0);
  auto window = std::make_shared<std::string>();
  auto alphabet = std::make_shared<int>(0);
  cmd->add_option("kind", *kind, "upword | upcycle | upmatrix | uptorus | grid | family")
      ->required()
      ->check(CLI::IsMember({"upword", "upcycle", "upmatrix", "uptorus", "grid", "family"}));
  cmd->add_option("input", *input, "file, literal word, or fixture:<name>")->required();
  cmd->add_option("--n,--x", *n, "word length");
  cmd->add_option("--window", *window, "window shape WxL");
  cmd->add_option("--alphabet", *alphabet, "alphabet size for words");
  cmd->callback([=, &outcome] {
    const Fixture* f = maybe_fixture(*input);
    json j;
    j["kind"] = *kind;
    bool valid = false;
    if (*kind == "upword" || *kind == "upcycle") {
      const int len = require_length(*n, f, "n");
      VerificationReport r;
      Alphabet a(2);
      if (*kind == "upword") {
        const auto w = load_word(*input, *alphabet);
        a = w.alphabet();
        r = verify_upword(w, len);
      } else {
        const auto c = load_cycle(*input, *alphabet);
        a = c.alphabet();
        r = verify_upcycle(c, len);
      }
      j.update(word_report(r, a, len));
      j["alphabet"] = a.size();
      j["n"] = len;
      valid = r.valid;
    } else if (*kind == "family") {
      const Family fam = load_family(*input);
      const int x = *n > 0 ? *n : fam.word_length();
      const FamilyReport r = verify_family(fam, x);
      j.update(family_report_json(r, fam.alphabet().size(), x));
      j["members"] = fam.size();
      j["x"] = x;
      valid = r.valid;
    } else {
      PartialGrid g = load_grid(*input);
      if (*kind == "upmatrix") g = g.with_mode(GridMode::Matrix);
      if (*kind == "uptorus") g = g.with_mode(GridMode::Torus);
      const WindowShape shape = require_window(*window, f);
      const VerificationReport r = verify_grid(g, shape);
      j.update(report_json(r, g.alphabet().size(), shape.w * shape.l));
      j["rows"] = g.rows();
      j["cols"] = g.cols();
      j["mode"] = mode_name(g.mode());
      j["window"] = std::to_string(shape.w) + "x" + std::to_string(shape.l);
      if (g.mode() == GridMode::Matrix && g.rows() >= shape.w && g.cols() >= shape.l) {
        const Gluability glue = gluability(g, shape);
        j["wraps_vertically"] = glue.wraps_vertically;
        j["wraps_horizontally"] = glue.wraps_horizontally;
      }
      valid = r.valid;
    }
    emit(j);
    outcome.code = valid ? 0 : 1;
  });
}

void add_generate(CLI::App& app) {
  auto* cmd = app.add_subcommand("generate", "Generate De Bruijn cycles, alternating cycles, necklaces");
  cmd->require_subcommand(1);

  auto* db = cmd->add_subcommand("debruijn", "De Bruijn cycle over 0..a-1 for length n");
  auto a = std::make_shared<int>(0);
  auto n = std::make_shared<int>(0);
  db->add_option("a", *a)->required()->check(CLI::PositiveNumber);
  db->add_option("n", *n)->required()->check(CLI::PositiveNumber);
  db->callback([=] {
    const auto seq = debruijn_sequence(static_cast<std::uint32_t>(*a), *n);
    if (*a <= Alphabet::kMaxSize) {
      std::string line;
      for (auto v : seq) line.push_back(symbol_char(Symbol::letter(static_cast<int>(v))));
      std::cout << line << '\n';
    } else {
      for (std::size_t i = 0; i < seq.size(); ++i) std::cout << (i ? " " : "") << seq[i];
      std::cout << '\n';
    }
  });

  auto* alt = cmd->add_subcommand("altdb", "Alternating De Bruijn cycle of order 2n+1");
  auto sa = std::make_shared<int>(0);
  auto sb = std::make_shared<int>(0);
  auto an = std::make_shared<int>(0);
  alt->add_option("A", *sa)->required()->check(CLI::PositiveNumber);
  alt->add_option("B", *sb)->required()->check(CLI::PositiveNumber);
  alt->add_option("n", *an)->required()->check(CLI::PositiveNumber);
  alt->callback([=] {
    const auto c = alternating_debruijn(static_cast<std::uint32_t>(*sa), static_cast<std::uint32_t>(*sb), *an);
    for (std::size_t i = 0; i < c.pairs(); ++i) std::cout << (i ? " " : "") << c.a_item(i);
    std::cout << '\n';
    for (std::size_t i = 0; i < c.pairs(); ++i) std::cout << (i ? " " : "") << c.b_item(i);
    std::cout << '\n';
  });

  auto* neck = cmd->add_subcommand("necklace", "Perfect necklace 0^k 1^k ... (a-1)^k");
  auto na = std::make_shared<int>(0);
  auto nk = std::make_shared<int>(0);
  neck->add_option("a", *na)->required()->check(CLI::PositiveNumber);
  neck->add_option("k", *nk)->required()->check(CLI::PositiveNumber);
  neck->callback([=] { std::cout << format_symbols(perfect_necklace(*na, *nk).symbols()) << '\n'; });
}

void add_construct(CLI::App& app) {
  auto* cmd = app.add_subcommand("construct", "Build upmatrices, uptori and lifts");
  cmd->require_subcommand(1);

  auto* mu_cmd = cmd->add_subcommand("mu", "Upword on top of p-1 diamond rows");
  auto w = std::make_shared<std::string>();
  auto n = std::make_shared<int>(0);
  auto p = std::make_shared<int>(2);
  auto alphabet = std::make_shared<int>(0);
  auto out = std::make_shared<std::string>();
  mu_cmd->add_option("word", *w)->required();
  mu_cmd->add_option("--n", *n, "upword length");
  mu_cmd->add_option("--p", *p, "number of rows");
  mu_cmd->add_option("--alphabet", *alphabet);
  mu_cmd->add_option("--out", *out);
  mu_cmd->callback([=] {
    const int len = require_length(*n, maybe_fixture(*w), "n");
    write_grid_output(mu(load_word(*w, *alphabet), len, *p), *out);
  });

  auto* us = cmd->add_subcommand("torus-from-upcycle", "m(u, s) from an upcycle and a De Bruijn cycle");
  auto u = std::make_shared<std::string>();
  auto s = std::make_shared<std::string>();
  auto x = std::make_shared<int>(0);
  auto y = std::make_shared<int>(2);
  auto out2 = std::make_shared<std::string>();
  auto ualpha = std::make_shared<int>(0);
  us->add_option("u", *u)->required();
  us->add_option("--s", *s, "rotation cycle; generated when omitted");
  us->add_option("--x", *x, "upcycle word length");
  us->add_option("--y", *y, "rotation word length (window has y+1 rows)");
  us->add_option("--alphabet", *ualpha);
  us->add_option("--out", *out2);
  us->callback([=] {
    const auto cyc = load_cycle(*u, *ualpha);
    const int len = require_length(*x, maybe_fixture(*u), "x");
    const auto L = static_cast<std::uint32_t>(cyc.size());
    std::vector<std::uint32_t> values;
    if (s->empty()) {
      values = debruijn_sequence(L, *y);
    } else {
      auto [sym, _] = load_symbols(*s);
      for (Symbol v : sym) {
        if (v.is_diamond()) throw Error(ErrorKind::NotTotal, "rotation cycle has a diamond");
        values.push_back(static_cast<std::uint32_t>(v.value()));
      }
    }
    const Certificate cert = certify_m_us(cyc, RotationSequence(std::move(values), L), len, *y);
    write_grid_output(cert.torus, *out2);
  });

  auto* tf = cmd->add_subcommand("torus-from-family", "m(W) from an upfamily");
  auto fam = std::make_shared<std::string>();
  auto fy = std::make_shared<int>(2);
  auto out3 = std::make_shared<std::string>();
  auto check = std::make_shared<bool>(false);
  tf->add_option("family", *fam)->required();
  tf->add_option("--y", *fy, "window has y+1 rows");
  tf->add_option("--out", *out3);
  tf->add_flag("--verify", *check, "verify the torus and report on stderr");
  tf->callback([=] {
    const Family family = load_family(*fam);
    const FamilyReport fr = verify_family(family, family.word_length());
    if (!fr.is_upfamily()) throw Error(ErrorKind::NotAnUpfamily, "input is not an upfamily");
    const PartialGrid t = torus_from_family(family, *fy);
    if (*check) {
      const auto r = verify_uptorus(t, WindowShape(*fy + 1, family.word_length()));
      std::cerr << report_json(r, family.alphabet().size(), (*fy + 1) * family.word_length()).dump() << '\n';
      if (!r.valid) throw Error(ErrorKind::CertificationFailed, "m(W) failed verification");
    }
    write_grid_output(t, *out3);
  });

  auto* lf = cmd->add_subcommand("lift", "Lift a diamondicity-1 cyclic partial word");
  auto lu = std::make_shared<std::string>();
  auto ln = std::make_shared<int>(0);
  auto la = std::make_shared<int>(0);
  lf->add_option("u", *lu)->required();
  lf->add_option("--n", *ln);
  lf->add_option("--alphabet", *la);
  lf->callback([=] {
    const int len = require_length(*ln, maybe_fixture(*lu), "n");
    std::cout << format_symbols(lift(load_cycle(*lu, *la), len).symbols()) << '\n';
  });

  auto* nd = cmd->add_subcommand("no-diamondicity", "Uptorus without diamondicity from a quasi-family");
  auto q = std::make_shared<std::string>();
  auto qy = std::make_shared<int>(2);
  auto out4 = std::make_shared<std::string>();
  auto lifted_out = std::make_shared<std::string>();
  nd->add_option("family", *q)->required();
  nd->add_option("--y", *qy);
  nd->add_option("--out", *out4);
  nd->add_option("--lifted-out", *lifted_out, "write the lifted family here");
  nd->callback([=] {
    const Family quasi = load_family(*q);
    const auto result = build_no_diamondicity(quasi, quasi.word_length(), *qy);
    if (!lifted_out->empty()) write_text_file(*lifted_out, format_family(result.lifted));
    write_grid_output(result.torus, *out4);
  });
}

void add_locate(CLI::App& app) {
  auto* cmd = app.add_subcommand("locate", "Find the window of m(u, s) covering a total matrix");
  auto p = std::make_shared<std::string>();
  auto u = std::make_shared<std::string>("fixture:u4");
  auto s = std::make_shared<std::string>("fixture:s64");
  auto alphabet = std::make_shared<int>(0);
  auto scan = std::make_shared<bool>(false);
  cmd->add_option("matrix", *p)->required();
  cmd->add_option("--u", *u, "upcycle");
  cmd->add_option("--s", *s, "De Bruijn rotation cycle");
  cmd->add_option("--alphabet", *alphabet);
  cmd->add_flag("--scan", *scan, "cross-check against an exhaustive scan");
  cmd->callback([=] {
    const PartialGrid pm = load_grid(*p);
    const auto cyc = load_cycle(*u, *alphabet);
    auto [sym, _] = load_symbols(*s);
    std::vector<std::uint32_t> values;
    for (Symbol v : sym) values.push_back(static_cast<std::uint32_t>(v.value()));
    const RotationSequence rs(std::move(values), static_cast<std::uint32_t>(cyc.size()));
    const LocateResult r = locate(pm, cyc, rs);
    json j{{"row", r.placement.row}, {"col", r.placement.col}, {"a", r.a}, {"b", r.b}, {"s_index", r.s_index}};
    if (*scan) {
      const PartialGrid t = build_m_us(cyc, rs);
      json hits = json::array();
      for (int rr = 0; rr < t.rows(); ++rr) {
        for (int cc = 0; cc < t.cols(); ++cc) {
          const PartialGrid win = subarray(t, rr, cc, WindowShape(pm.rows(), pm.cols()));
          bool covers = true;
          for (std::size_t i = 0; i < win.cells().size() && covers; ++i) {
            covers = win.cells()[i].is_diamond() || win.cells()[i] == pm.cells()[i];
          }
          if (covers) hits.push_back({rr, cc});
        }
      }
      j["scan"] = hits;
    }
    emit(j);
  });
}

void add_slicing(CLI::App& app) {
  auto* cmd = app.add_subcommand("slice", "Slice a cyclic partial word at cut indices");
  auto u = std::make_shared<std::string>();
  auto cuts = std::make_shared<std::string>();
  auto x = std::make_shared<int>(0);
  auto alphabet = std::make_shared<int>(0);
  auto out = std::make_shared<std::string>();
  cmd->add_option("u", *u)->required();
  cmd->add_option("--cuts", *cuts, "comma-separated increasing indices")->required();
  cmd->add_option("--x", *x, "word length");
  cmd->add_option("--alphabet", *alphabet);
  cmd->add_option("--out", *out, "write the family file here");
  cmd->callback([=] {
    const auto cyc = load_cycle(*u, *alphabet);
    const int len = require_length(*x, maybe_fixture(*u), "x");
    const CutSet cs(parse_cuts(*cuts), cyc.size());
    const auto arcs = slice_arcs(cyc, cs);
    const FamilyReport r = verify_members(arcs, len);
    json j = family_report_json(r, cyc.alphabet().size(), len);
    json members = json::array();
    for (const auto& m : arcs) members.push_back(format_symbols(m.symbols()));
    j["members"] = members;
    if (!out->empty()) write_text_file(*out, format_family(Family(cyc.alphabet(), len, arcs)));
    emit(j);
  });

  auto* en = app.add_subcommand("enumerate-slicings", "Verify every cut subset on a block grid");
  auto eu = std::make_shared<std::string>();
  auto block = std::make_shared<std::size_t>(0);
  auto ex = std::make_shared<int>(0);
  auto ea = std::make_shared<int>(0);
  auto eout = std::make_shared<std::string>();
  en->add_option("u", *eu)->required();
  en->add_option("--block", *block)->required();
  en->add_option("--x", *ex);
  en->add_option("--alphabet", *ea);
  en->add_option("--out", *eout, "write the full catalog (JSON) here");
  en->callback([=] {
    const auto cyc = load_cycle(*eu, *ea);
    const int len = require_length(*ex, maybe_fixture(*eu), "x");
    const SlicingReport r = enumerate_slicings(cyc, *block, len);
    json j{{"scanned", r.scanned},
           {"valid_including_whole", r.valid_including_whole},
           {"valid_proper", r.valid_proper},
           {"whole_valid", r.whole_valid},
           {"valid_upfamilies", r.valid_upfamilies},
           {"equal_length_subsets", r.equal_length_subsets},
           {"equal_length_all_valid", r.equal_length_all_valid}};
    if (!eout->empty()) {
      json cat = j;
      json entries = json::array();
      for (const auto& e : r.entries) {
        entries.push_back({{"cuts", e.cuts}, {"valid", e.valid}, {"equal_lengths", e.equal_lengths}});
      }
      cat["entries"] = entries;
      write_text_file(*eout, cat.dump(2) + "\n");
    }
    emit(j);
  });

  auto* pr = app.add_subcommand("probe-slicings", "Verify equal-length slicings at every start offset");
  auto pu = std::make_shared<std::string>();
  auto piece = std::make_shared<std::size_t>(0);
  auto px = std::make_shared<int>(0);
  auto pa = std::make_shared<int>(0);
  auto full = std::make_shared<bool>(false);
  pr->add_option("u", *pu)->required();
  pr->add_option("--piece", *piece)->required();
  pr->add_option("--x", *px);
  pr->add_option("--alphabet", *pa);
  pr->add_flag("--full-range", *full, "all offsets 0..|u|-1");
  pr->callback([=] {
    const auto cyc = load_cycle(*pu, *pa);
    const int len = require_length(*px, maybe_fixture(*pu), "x");
    json offsets = json::array();
    std::size_t valid = 0;
    for (const auto& r : probe_equal_slicings(cyc, *piece, len, *full)) {
      offsets.push_back({{"offset", r.offset}, {"valid", r.valid}});
      valid += r.valid ? 1 : 0;
    }
    emit({{"probed", offsets.size()}, {"valid", valid}, {"offsets", offsets}});
  });
}

void add_search(CLI::App& app) {
  auto* cmd = app.add_subcommand("search", "Exhaustive search for upmatrices or uptori");
  auto spec = std::make_shared<SearchSpec>();
  auto window = std::make_shared<std::string>("2x2");
  auto dims = std::make_shared<std::string>();
  auto mode = std::make_shared<std::string>("matrix");
  auto nontrivial = std::make_shared<bool>(false);
  auto limit = std::make_shared<std::size_t>(0);
  auto out = std::make_shared<std::string>();
  cmd->add_option("--alphabet", spec->alphabet_size)->check(CLI::PositiveNumber);
  cmd->add_option("--window", *window, "WxL");
  cmd->add_option("--dims", *dims, "RxC")->required();
  cmd->add_option("--mode", *mode)->check(CLI::IsMember({"matrix", "torus"}));
  cmd->add_flag("--nontrivial", *nontrivial);
  cmd->add_flag("--dedup", spec->dedup);
  cmd->add_option("--limit", *limit);
  cmd->add_flag("--capacity-pruning", spec->capacity_pruning);
  cmd->add_flag("--no-prune", spec->disable_pruning, "debug: check complete assignments only");
  cmd->add_option("--threads", spec->threads)->check(CLI::PositiveNumber);
  cmd->add_option("--out", *out, "write catalog JSON here");
  cmd->callback([=] {
    SearchSpec s = *spec;
    s.shape = parse_shape(*window);
    const WindowShape d = parse_shape(*dims);
    s.rows = d.w;
    s.cols = d.l;
    s.mode = parse_mode(*mode);
    if (*limit > 0) s.limit = *limit;
    auto progress = [](const SearchProgress& p) {
      std::cerr << "nodes " << p.nodes << "  " << static_cast<std::uint64_t>(p.nodes / std::max(p.seconds, 1e-9))
                << "/s  solutions " << p.solutions << '\n';
    };
    const Catalog cat = *nontrivial ? search_nontrivial(s, progress) : search(s, progress);
    json sols = json::array();
    for (const auto& g : cat.solutions) sols.push_back(grid_json(g)["cells"]);
    json mass = json::object();
    for (const auto& [m, count] : cat.leaf_mass) mass[std::to_string(m)] = count;
    json j{{"raw_count", cat.raw_count},     {"canonical_count", cat.canonical_count},
           {"nodes_explored", cat.nodes_explored}, {"complete", cat.complete},
           {"leaf_mass", mass}};
    if (!out->empty()) {
      json full = j;
      full["alphabet"] = s.alphabet_size;
      full["window"] = *window;
      full["dims"] = *dims;
      full["mode"] = *mode;
      full["dedup"] = s.dedup;
      full["solutions"] = sols;
      write_text_file(*out, full.dump(2) + "\n");
    } else {
      j["solutions"] = sols;
    }
    emit(j);
  });
}

void add_render(CLI::App& app) {
  auto* cmd = app.add_subcommand("render", "Write a grid as a binary PPM image");
  auto in = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>();
  auto scale = std::make_shared<int>(1);
  auto tr = std::make_shared<bool>(false);
  cmd->add_option("grid", *in)->required();
  cmd->add_option("--out", *out)->required();
  cmd->add_option("--scale", *scale)->check(CLI::PositiveNumber);
  cmd->add_flag("--transpose", *tr);
  cmd->callback([=] {
    const PartialGrid g = load_grid(*in);
    std::ofstream file(*out, std::ios::binary);
    if (!file) throw Error(ErrorKind::Io, "cannot create " + *out);
    write_ppm(file, g, *scale, *tr);
  });
}

void add_fixtures(CLI::App& app) {
  auto* cmd = app.add_subcommand("fixtures", "List or export the bundled objects");
  cmd->require_subcommand(1);
  auto* list = cmd->add_subcommand("list", "List fixture names");
  list->callback([] {
    if (g_json) {
      json arr = json::array();
      for (const auto& f : fixtures()) {
        arr.push_back({{"name", f.name}, {"kind", std::string(to_string(f.kind))}, {"description", f.description}});
      }
      std::cout << arr.dump(2) << '\n';
      return;
    }
    for (const auto& f : fixtures()) std::cout << f.name << "  [" << to_string(f.kind) << "]  " << f.description << '\n';
  });
  auto* ex = cmd->add_subcommand("export", "Write fixtures to files");
  auto name = std::make_shared<std::string>();
  auto dir = std::make_shared<std::string>(".");
  ex->add_option("name", *name, "fixture name or 'all'")->required();
  ex->add_option("--dir", *dir);
  ex->callback([=] {
    std::filesystem::create_directories(*dir);
    for (const auto& f : fixtures()) {
      if (*name != "all" && f.name != *name) continue;
      const std::string ext = f.kind == FixtureKind::Grid ? ".grid" : f.kind == FixtureKind::Family ? ".family" : ".txt";
      write_text_file((std::filesystem::path(*dir) / (f.name + ext)).string(), fixture_file_text(f));
    }
    if (*name != "all") fixture(*name);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal partial words, cycles, families, matrices and tori"};
  app.require_subcommand(1);
  app.fallthrough();
  bool force_json = false;
  app.add_flag("--json", force_json, "emit JSON even on a terminal");
  g_json = !isatty(STDOUT_FILENO);
  for (int i = 1; i < argc; ++i) g_json = g_json || std::string_view(argv[i]) == "--json";
  Outcome outcome;
  add_verify(app, outcome);
  add_generate(app);
  add_construct(app);
  add_locate(app);
  add_slicing(app);
  add_search(app);
  add_render(app);
  add_fixtures(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Io ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return outcome.code;
}
