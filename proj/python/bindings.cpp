#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uptori/construct.hpp"
#include "uptori/error.hpp"
#include "uptori/families.hpp"
#include "uptori/fixtures.hpp"
#include "uptori/generate.hpp"
#include "uptori/io.hpp"
#include "uptori/search.hpp"

namespace py = pybind11;
using namespace uptori;

namespace {

Alphabet alphabet_for(const std::vector<Symbol>& symbols, int a) {
  return Alphabet(a > 0 ? a : infer_alphabet_size(symbols));
}

std::string verify_word(const std::string& text, int n, int a, bool cyclic) {
  const auto symbols = parse_symbols(text);
  const Alphabet alphabet = alphabet_for(symbols, a);
  const VerificationReport r = cyclic ? verify_upcycle(CyclicPartialWord(alphabet, symbols), n)
                                      : verify_upword(PartialWord(alphabet, symbols), n);
  return report_json(r, alphabet.size(), n).dump();
}

}  // namespace

PYBIND11_MODULE(_uptori, m) {
  m.doc() = "Universal partial words, cycles, families, matrices and tori";

  py::register_exception<Error>(m, "UptoriError", PyExc_ValueError);

  m.def("verify_upcycle", [](const std::string& w, int n, int a) { return verify_word(w, n, a, true); },
        py::arg("word"), py::arg("n"), py::arg("alphabet") = 0);
  m.def("verify_upword", [](const std::string& w, int n, int a) { return verify_word(w, n, a, false); },
        py::arg("word"), py::arg("n"), py::arg("alphabet") = 0);
  m.def(
      "verify_grid",
      [](const std::string& text, const std::string& window) {
        const PartialGrid g = parse_grid(text);
        const WindowShape shape = parse_shape(window);
        return report_json(verify_grid(g, shape), g.alphabet().size(), shape.w * shape.l).dump();
      },
      py::arg("grid_text"), py::arg("window"));
  m.def(
      "verify_family",
      [](const std::string& text, int x) {
        const Family f = parse_family(text);
        const int len = x > 0 ? x : f.word_length();
        return family_report_json(verify_family(f, len), f.alphabet().size(), len).dump();
      },
      py::arg("family_text"), py::arg("x") = 0);
  m.def("debruijn", [](std::uint32_t a, int n) { return debruijn_sequence(a, n); }, py::arg("a"), py::arg("n"));
  m.def(
      "lift",
      [](const std::string& w, int n, int a) {
        const auto symbols = parse_symbols(w);
        return format_symbols(lift(CyclicPartialWord(alphabet_for(symbols, a), symbols), n).symbols());
      },
      py::arg("word"), py::arg("n"), py::arg("alphabet") = 0);
  m.def(
      "torus_from_upcycle",
      [](const std::string& u, int x, int y, int a) {
        const auto symbols = parse_symbols(u);
        const CyclicPartialWord cyc(alphabet_for(symbols, a), symbols);
        const auto L = static_cast<std::uint32_t>(cyc.size());
        const Certificate cert = certify_m_us(cyc, RotationSequence(debruijn_sequence(L, y), L), x, y);
        return format_grid(cert.torus);
      },
      py::arg("upcycle"), py::arg("x"), py::arg("y"), py::arg("alphabet") = 0);
  m.def(
      "search",
      [](int a, const std::string& window, const std::string& dims, const std::string& mode, bool dedup,
         bool nontrivial, bool capacity_pruning) {
        SearchSpec spec;
        spec.alphabet_size = a;
        spec.shape = parse_shape(window);
        const WindowShape d = parse_shape(dims);
        spec.rows = d.w;
        spec.cols = d.l;
        spec.mode = parse_mode(mode);
        spec.dedup = dedup;
        spec.capacity_pruning = capacity_pruning;
        Catalog cat;
        {
          py::gil_scoped_release release;
          cat = nontrivial ? search_nontrivial(spec) : search(spec);
        }
        nlohmann::json sols = nlohmann::json::array();
        for (const auto& g : cat.solutions) sols.push_back(grid_json(g)["cells"]);
        return nlohmann::json{{"raw_count", cat.raw_count},
                              {"canonical_count", cat.canonical_count},
                              {"nodes_explored", cat.nodes_explored},
                              {"solutions", sols}}
            .dump();
      },
      py::arg("alphabet"), py::arg("window"), py::arg("dims"), py::arg("mode") = "matrix", py::arg("dedup") = true,
      py::arg("nontrivial") = false, py::arg("capacity_pruning") = false);
  m.def("fixture_names", [] {
    std::vector<std::string> names;
    for (const auto& f : fixtures()) names.push_back(f.name);
    return names;
  });
  m.def("fixture_text", [](const std::string& name) { return fixture_file_text(fixture(name)); }, py::arg("name"));
}
