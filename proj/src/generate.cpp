#include "uptori/generate.hpp"

#include <algorithm>
#include <string>

#include "uptori/error.hpp"

namespace uptori {

namespace {

// Iterative Hierholzer over an implicit graph where every vertex has exactly
// `degree` out-edges numbered 0..degree-1, visited in increasing order.
// Returns the edge labels of the circuit starting and ending at vertex 0.
template <class Next>
std::vector<std::uint32_t> eulerian_circuit(std::uint64_t vertices, std::uint32_t degree, Next next) {
  std::vector<std::uint32_t> used(vertices, 0);
  struct Frame {
    std::uint64_t vertex;
    std::uint32_t label;
  };
  std::vector<Frame> stack{{0, 0}};
  std::vector<std::uint32_t> circuit;
  circuit.reserve(vertices * degree);
  while (!stack.empty()) {
    const std::uint64_t v = stack.back().vertex;
    if (used[v] < degree) {
      const std::uint32_t e = used[v]++;
      stack.push_back({next(v, e), e});
    } else {
      if (stack.size() > 1) circuit.push_back(stack.back().label);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace

std::vector<std::uint32_t> debruijn_sequence(std::uint32_t a, int n) {
  if (a < 1) throw Error(ErrorKind::BadAlphabet, "De Bruijn alphabet must be nonempty");
  if (n < 1) throw Error(ErrorKind::BadWindowLength, "De Bruijn word length must be >= 1");
  if (a == 1) return {0};
  const std::uint64_t vertices = checked_pow(a, n - 1);
  if (vertices * a > (std::uint64_t{1} << 32)) throw Error(ErrorKind::TooLarge, "De Bruijn sequence too long");
  // Vertex = last n-1 letters; following edge e appends letter e.
  auto seq = eulerian_circuit(vertices, a, [&](std::uint64_t v, std::uint32_t e) { return (v * a + e) % vertices; });
  std::vector<Symbol> as_symbols;
  // Least rotation over raw indices; reuse Booth on a byte view when possible.
  std::size_t start = 0;
  if (a <= 255) {
    as_symbols.reserve(seq.size());
    for (auto x : seq) as_symbols.push_back(Symbol::letter(static_cast<int>(x)));
    start = least_rotation_index(as_symbols);
  } else {
    std::vector<std::uint32_t> best = seq;
    for (std::size_t i = 1; i < seq.size(); ++i) {
      std::vector<std::uint32_t> r(seq.begin() + static_cast<std::ptrdiff_t>(i), seq.end());
      r.insert(r.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
      if (r < best) {
        best = std::move(r);
        start = i;
      }
    }
  }
  std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(start), seq.end());
  return seq;
}

CyclicPartialWord debruijn_cycle(int a, int n) {
  Alphabet alphabet(a);
  auto seq = debruijn_sequence(static_cast<std::uint32_t>(a), n);
  std::vector<Symbol> symbols;
  symbols.reserve(seq.size());
  for (auto x : seq) symbols.push_back(Symbol::letter(static_cast<int>(x)));
  return CyclicPartialWord(alphabet, std::move(symbols));
}

std::uint64_t count_debruijn_bruteforce(int a, int n) {
  if (a < 1 || n < 1) throw Error(ErrorKind::BadWindowLength, "need a >= 1 and n >= 1");
  const std::uint64_t length = checked_pow(static_cast<std::uint64_t>(a), n);
  if (length > 16) throw Error(ErrorKind::TooLarge, "brute force limited to a^n <= 16");
  if (a == 1) return 1;

  // Enumerate every length-L string whose cyclic n-windows are distinct.
  // Each De Bruijn cycle is primitive, so it has exactly L rotations.
  const auto L = static_cast<std::size_t>(length);
  std::vector<int> s(L, 0);
  std::vector<bool> seen(L, false);
  std::uint64_t strings = 0;
  auto window = [&](std::size_t start) {
    std::uint64_t code = 0;
    for (int j = 0; j < n; ++j) code = code * static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(s[(start + static_cast<std::size_t>(j)) % L]);
    return static_cast<std::size_t>(code);
  };
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == L) {
      // Wrapping windows start at L-n+1 .. L-1.
      std::vector<std::size_t> added;
      bool ok = true;
      for (std::size_t start = L - static_cast<std::size_t>(n) + 1; start < L && n > 1; ++start) {
        const auto w = window(start);
        if (seen[w]) {
          ok = false;
          break;
        }
        seen[w] = true;
        added.push_back(w);
      }
      if (ok) ++strings;
      for (auto w : added) seen[w] = false;
      return;
    }
    for (int letter = 0; letter < a; ++letter) {
      s[pos] = letter;
      if (pos + 1 >= static_cast<std::size_t>(n)) {
        const auto w = window(pos + 1 - static_cast<std::size_t>(n));
        if (seen[w]) continue;
        seen[w] = true;
        self(self, pos + 1);
        seen[w] = false;
      } else {
        self(self, pos + 1);
      }
    }
  };
  rec(rec, 0);
  return strings / length;
}

AlternatingCycle::AlternatingCycle(std::uint32_t size_a, std::uint32_t size_b, int n, std::vector<std::uint32_t> items)
    : size_a_(size_a), size_b_(size_b), n_(n), items_(std::move(items)) {
  if (items_.empty() || items_.size() % 2 != 0) {
    throw Error(ErrorKind::LengthMismatch, "alternating cycle needs a positive even length");
  }
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const std::uint32_t bound = i % 2 == 0 ? size_a_ : size_b_;
    if (items_[i] >= bound) throw Error(ErrorKind::BadSymbol, "alternating item out of range at " + std::to_string(i));
  }
}

AlternatingCycle alternating_debruijn(std::uint32_t size_a, std::uint32_t size_b, int n) {
  if (size_a < 1 || size_b < 1) throw Error(ErrorKind::BadAlphabet, "alternating alphabets must be nonempty");
  if (n < 1) throw Error(ErrorKind::BadWindowLength, "alternating order parameter n must be >= 1");
  // Vertex: a0 b0 ... a_{n-1} in mixed radix with a0 most significant.
  const std::uint64_t vertices = checked_pow(size_a, n) * checked_pow(size_b, n - 1);
  const std::uint64_t degree64 = std::uint64_t{size_a} * size_b;
  if (degree64 > UINT32_MAX || vertices * degree64 > (std::uint64_t{1} << 31)) {
    throw Error(ErrorKind::TooLarge, "alternating De Bruijn cycle too long");
  }
  const auto degree = static_cast<std::uint32_t>(degree64);
  // Edge label e encodes (b, a) as b * size_a + a, so smaller b comes first.
  auto labels = eulerian_circuit(vertices, degree, [&](std::uint64_t v, std::uint32_t e) {
    const std::uint64_t b = e / size_a;
    const std::uint64_t a = e % size_a;
    return ((v * size_b + b) * size_a + a) % vertices;
  });

  // Recover the item string: the start vertex (all zeros) followed by the
  // appended pairs; the cyclic sequence is its first 2E items.
  std::vector<std::uint32_t> linear(static_cast<std::size_t>(2 * n - 1), 0);
  linear.reserve(linear.size() + 2 * labels.size());
  for (auto e : labels) {
    linear.push_back(e / size_a);
    linear.push_back(e % size_a);
  }
  linear.resize(2 * labels.size());
  return AlternatingCycle(size_a, size_b, n, std::move(linear));
}

AlternatingWord unroll_alternating(const AlternatingCycle& c) {
  AlternatingWord w;
  const std::size_t v = c.pairs();
  w.a_items.reserve(v + 1);
  w.b_items.reserve(v);
  for (std::size_t i = 0; i < v; ++i) {
    w.a_items.push_back(c.a_item(i));
    w.b_items.push_back(c.b_item(i));
  }
  w.a_items.push_back(c.a_item(0));
  return w;
}

std::vector<std::uint32_t> alternating_occurrences(const AlternatingCycle& c) {
  const int n = c.n();
  const std::uint64_t space = checked_pow(c.size_a(), n + 1) * checked_pow(c.size_b(), n);
  std::vector<std::uint32_t> counts(space, 0);
  const std::size_t len = c.size();
  const auto& items = c.items();
  for (std::size_t start = 0; start < len; start += 2) {
    std::uint64_t code = 0;
    for (int j = 0; j < 2 * n + 1; ++j) {
      const std::uint64_t radix = j % 2 == 0 ? c.size_a() : c.size_b();
      code = code * radix + items[(start + static_cast<std::size_t>(j)) % len];
    }
    ++counts[code];
  }
  return counts;
}

CyclicPartialWord perfect_necklace(int a, int k) {
  Alphabet alphabet(a);
  if (k < 1) throw Error(ErrorKind::BadWindowLength, "necklace block length must be >= 1");
  std::vector<Symbol> symbols;
  symbols.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(k));
  for (int letter = 0; letter < a; ++letter) symbols.insert(symbols.end(), static_cast<std::size_t>(k), Symbol::letter(letter));
  return CyclicPartialWord(alphabet, std::move(symbols));
}

}  // namespace uptori
