#include "lmhslab/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

namespace lmhslab {

namespace {

bool diagonal_even(const IntMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (!mpz_even_p(g(i, i).get_mpz_t())) return false;
  return true;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix g(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) g(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) g(a.rows() + i, a.cols() + j) = b(i, j);
  return g;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Lattice::Lattice(IntMatrix gram, std::string label)
    : Lattice(std::move(gram), std::move(label), std::vector<std::size_t>{}) {}

Lattice::Lattice(IntMatrix gram, std::string label, std::vector<std::size_t> block_sizes) {
  if (!gram.is_square() || gram.rows() == 0) throw DimensionError("Gram matrix must be square with positive size");
  if (!gram.is_symmetric()) throw PreconditionError("Gram matrix must be symmetric");
  if (block_sizes.empty()) block_sizes.push_back(gram.rows());
  std::size_t total = 0;
  for (auto b : block_sizes) total += b;
  if (total != gram.rows()) throw DimensionError("block sizes do not add up to the rank");
  // Off-block entries must vanish for the recorded decomposition to be honest.
  std::size_t start = 0;
  for (auto b : block_sizes) {
    for (std::size_t i = start; i < start + b; ++i)
      for (std::size_t j = start + b; j < gram.cols(); ++j)
        if (gram(i, j) != 0) throw PreconditionError("Gram matrix is not block diagonal for the given blocks");
    start += b;
  }
  bool even = diagonal_even(gram);
  data_ = std::make_shared<const Data>(Data{std::move(gram), std::move(label), std::move(block_sizes), even});
}

Integer Lattice::determinant() const { return lmhslab::determinant(gram()); }

Signature Lattice::signature() const { return lmhslab::signature(to_rational(gram())); }

LatticeVector::LatticeVector(Lattice parent, std::vector<std::int64_t> coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != parent_.rank()) throw DimensionError("vector length does not match lattice rank");
}

IntVector LatticeVector::to_integer() const {
  IntVector v;
  v.reserve(coords_.size());
  for (auto c : coords_) v.emplace_back(static_cast<long>(c));
  return v;
}

RatVector LatticeVector::to_rational() const {
  RatVector v;
  v.reserve(coords_.size());
  for (auto c : coords_) v.emplace_back(static_cast<long>(c));
  return v;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  return os.str();
}

IntMatrix e8_minus_gram() {
  // Bourbaki edges on nodes 1..8, shifted to 0-based.
  static constexpr std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) {
    g(a, b) = 1;
    g(b, a) = 1;
  }
  return g;
}

Lattice rank_one(std::int64_t n) {
  IntMatrix g(1, 1);
  g(0, 0) = static_cast<long>(n);
  return Lattice(std::move(g), "<" + std::to_string(n) + ">");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  std::vector<std::size_t> blocks = a.block_sizes();
  blocks.insert(blocks.end(), b.block_sizes().begin(), b.block_sizes().end());
  return Lattice(block_diagonal(a.gram(), b.gram()), a.label() + "+" + b.label(), std::move(blocks));
}

Lattice builtin(BuiltinLattice which) {
  switch (which) {
    case BuiltinLattice::U:
      return Lattice(IntMatrix{{0, 1}, {1, 0}}, "U");
    case BuiltinLattice::E8_MINUS:
      return Lattice(e8_minus_gram(), "E8m");
    case BuiltinLattice::A1_MINUS:
      return Lattice(IntMatrix{{-2}}, "A1m");
    case BuiltinLattice::DEG4:
      return Lattice(IntMatrix{{4}}, "DEG4");
    case BuiltinLattice::K3: {
      Lattice u = builtin(BuiltinLattice::U);
      Lattice e8 = builtin(BuiltinLattice::E8_MINUS);
      Lattice l = direct_sum(direct_sum(direct_sum(direct_sum(u, u), u), e8), e8);
      return Lattice(l.gram(), "K3", l.block_sizes());
    }
    case BuiltinLattice::PAPER_LAMBDA: {
      Lattice e8 = builtin(BuiltinLattice::E8_MINUS);
      Lattice l = direct_sum(direct_sum(direct_sum(builtin(BuiltinLattice::U), e8), e8),
                             builtin(BuiltinLattice::A1_MINUS));
      return Lattice(l.gram(), "PAPER_LAMBDA", l.block_sizes());
    }
  }
  throw PreconditionError("unknown builtin lattice");
}

Lattice builtin(std::string_view name) {
  if (name == "U") return builtin(BuiltinLattice::U);
  if (name == "E8_MINUS" || name == "E8m") return builtin(BuiltinLattice::E8_MINUS);
  if (name == "A1_MINUS" || name == "A1m") return builtin(BuiltinLattice::A1_MINUS);
  if (name == "DEG4") return builtin(BuiltinLattice::DEG4);
  if (name == "K3") return builtin(BuiltinLattice::K3);
  if (name == "PAPER_LAMBDA") return builtin(BuiltinLattice::PAPER_LAMBDA);
  throw PreconditionError("unknown builtin lattice '" + std::string(name) + "'");
}

Lattice parse_lattice(std::string_view spec) {
  std::optional<Lattice> acc;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
  };
  auto parse_int = [&](std::int64_t& out) {
    skip_ws();
    std::size_t start = pos;
    if (pos < spec.size() && (spec[pos] == '-' || spec[pos] == '+')) ++pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    const char* first = spec.data() + start + (start < spec.size() && spec[start] == '+' ? 1 : 0);
    auto res = std::from_chars(first, spec.data() + pos, out);
    if (pos == start || res.ec != std::errc() || res.ptr != spec.data() + pos)
      throw ParseError("expected an integer", start);
  };

  while (true) {
    skip_ws();
    if (pos >= spec.size()) throw ParseError("expected a lattice summand", pos);
    const std::size_t atom_start = pos;
    Lattice atom = builtin(BuiltinLattice::U);
    if (spec[pos] == '<') {
      ++pos;
      std::int64_t n = 0;
      parse_int(n);
      skip_ws();
      if (pos >= spec.size() || spec[pos] != '>') throw ParseError("expected '>'", pos);
      ++pos;
      if (n == 0) throw ParseError("<0> is degenerate", atom_start);
      atom = rank_one(n);
    } else {
      while (pos < spec.size() && (std::isalnum(static_cast<unsigned char>(spec[pos])) || spec[pos] == '_')) ++pos;
      std::string_view name = spec.substr(atom_start, pos - atom_start);
      if (name.empty()) throw ParseError("expected a lattice name", atom_start);
      try {
        atom = builtin(name);
      } catch (const PreconditionError&) {
        throw ParseError("unknown lattice '" + std::string(name) + "'", atom_start);
      }
    }
    skip_ws();
    std::int64_t count = 1;
    if (pos < spec.size() && spec[pos] == '^') {
      ++pos;
      const std::size_t at = pos;
      parse_int(count);
      if (count < 1 || count > 64) throw ParseError("repeat count out of range", at);
    }
    for (std::int64_t i = 0; i < count; ++i) acc = acc ? direct_sum(*acc, atom) : atom;
    skip_ws();
    if (pos == spec.size()) break;
    if (spec[pos] != '+') throw ParseError("expected '+'", pos);
    ++pos;
  }
  std::string label(trim(spec));
  return Lattice(acc->gram(), label, acc->block_sizes());
}

std::vector<std::int64_t> parse_int_vector(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::int64_t v = 0;
    const char* first = text.data() + start + (start < text.size() && text[start] == '+' ? 1 : 0);
    auto res = std::from_chars(first, text.data() + pos, v);
    if (res.ec != std::errc() || res.ptr != text.data() + pos || pos == start)
      throw ParseError("expected an integer", start);
    out.push_back(v);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return out;
}

Integer inner(const LatticeVector& v, const LatticeVector& w) {
  if (v.parent() != w.parent()) throw PreconditionError("vectors belong to different lattices");
  const IntMatrix& g = v.parent().gram();
  Integer acc = 0;
  Integer row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    row = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) row += g(i, j) * static_cast<long>(w[j]);
    acc += row * static_cast<long>(v[i]);
  }
  return acc;
}

bool search_order_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  auto l1 = [](const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (auto x : v) s += x < 0 ? -x : x;
    return s;
  };
  const auto la = l1(a), lb = l1(b);
  if (la != lb) return la < lb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool is_primitive_sublattice(const Lattice& l, const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) return true;
  IntMatrix m(vectors.size(), l.rank());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].parent() != l) throw PreconditionError("vector does not belong to the lattice");
    for (std::size_t j = 0; j < l.rank(); ++j) m(i, j) = static_cast<long>(vectors[i][j]);
  }
  SmithForm snf = smith_normal_form(m);
  for (const auto& d : snf.diagonal()) {
    if (d == 0) throw PreconditionError("vectors are linearly dependent");
    if (d != 1) return false;
  }
  return true;
}

IntMatrix gram_of(const std::vector<LatticeVector>& vectors) {
  IntMatrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) g(i, j) = inner(vectors[i], vectors[j]);
  return g;
}

}  // namespace lmhslab
