#include "lmhslab/monodromy.hpp"

#include <sstream>
#include <utility>

namespace lmhslab {

namespace {

IntVector gram_times(const Lattice& l, const LatticeVector& v) { return l.gram().apply(v.to_integer()); }

}  // namespace

CycleConfiguration::CycleConfiguration(Lattice lattice, std::vector<LatticeVector> cycles)
    : lattice_(std::move(lattice)), cycles_(std::move(cycles)) {
  for (const auto& c : cycles_)
    if (c.parent() != lattice_) throw PreconditionError("cycle does not belong to the configuration lattice");
  pairwise_gram_ = gram_of(cycles_);
}

CycleConfiguration parse_cycle_configuration(const std::string& text, const std::optional<Lattice>& lattice) {
  std::istringstream in(text);
  std::string line;
  std::optional<Lattice> from_file;
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t offset = 0;
  bool first = true;
  while (std::getline(in, line)) {
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    std::string body = line.substr(a, b - a + 1);
    const bool looks_numeric = body.find_first_not_of("0123456789,+- \t") == std::string::npos;
    if (first && !looks_numeric) {
      try {
        from_file = parse_lattice(body);
      } catch (const ParseError& e) {
        throw ParseError(std::string("lattice spec: ") + e.what(), line_offset + a + e.position());
      }
      first = false;
      continue;
    }
    first = false;
    try {
      rows.push_back(parse_int_vector(body));
    } catch (const ParseError& e) {
      throw ParseError("cycle vector", line_offset + a + e.position());
    }
  }
  if (lattice && from_file && *lattice != *from_file)
    throw PreconditionError("cycle file lattice differs from the requested lattice");
  if (!lattice && !from_file) throw PreconditionError("no lattice given for the cycle configuration");
  const Lattice l = lattice ? *lattice : *from_file;
  std::vector<LatticeVector> cycles;
  for (auto& r : rows) {
    if (r.size() != l.rank())
      throw PreconditionError("cycle has " + std::to_string(r.size()) + " coordinates, lattice rank is " +
                              std::to_string(l.rank()));
    cycles.emplace_back(l, std::move(r));
  }
  return CycleConfiguration(l, std::move(cycles));
}

bool is_unipotent(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("unipotency of a non-square matrix");
  RatMatrix d = m - RatMatrix::identity(m.rows());
  return d.pow(static_cast<unsigned>(m.rows())).is_zero();
}

bool is_unipotent(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("unipotency of a non-square matrix");
  IntMatrix d = m - IntMatrix::identity(m.rows());
  return d.pow(static_cast<unsigned>(m.rows())).is_zero();
}

std::optional<unsigned> nilpotency_index(const RatMatrix& n) {
  if (!n.is_square()) throw DimensionError("nilpotency of a non-square matrix");
  RatMatrix p = n;
  for (unsigned k = 0; k <= n.rows(); ++k) {
    if (p.is_zero()) return k;  // N^{k+1} == 0
    p = p * n;
  }
  return std::nullopt;
}

IsometryAnalysis quasi_unipotency(const IntMatrix& t, const Lattice& lattice, unsigned bound) {
  if (!t.is_square() || t.rows() != lattice.rank()) throw DimensionError("operator does not act on the lattice");
  if (bound < 1) throw PreconditionError("base-change bound must be at least 1");
  IsometryAnalysis a;
  a.bound = bound;
  a.is_isometry = t.transpose() * lattice.gram() * t == lattice.gram();
  a.unipotent = is_unipotent(t);
  const IntMatrix id = IntMatrix::identity(t.rows());
  IntMatrix p = t;
  for (unsigned n = 1; n <= bound; ++n) {
    if (!a.finite_order && p == id) a.finite_order = n;
    if (!a.base_change_order && is_unipotent(p)) a.base_change_order = n;
    if (a.finite_order && a.base_change_order) break;
    p = p * t;
  }
  a.is_quasi_unipotent = a.base_change_order.has_value();
  return a;
}

IsometryCandidate::IsometryCandidate(IntMatrix matrix, Lattice lattice, unsigned base_change_bound)
    : matrix_(std::move(matrix)), lattice_(std::move(lattice)) {
  analysis_ = quasi_unipotency(matrix_, lattice_, base_change_bound);
}

NilpotentOperator::NilpotentOperator(RatMatrix m) : matrix_(std::move(m)) {
  auto idx = lmhslab::nilpotency_index(matrix_);
  if (!idx) throw ArithmeticError("operator is not nilpotent");
  index_ = *idx;
}

IsometryCandidate picard_lefschetz(const CycleConfiguration& config, unsigned base_change_bound) {
  if (config.size() == 0) throw PreconditionError("empty cycle configuration");
  const Lattice& l = config.lattice();
  const std::size_t n = l.rank();
  IntMatrix t = IntMatrix::identity(n);
  for (const auto& g : config.cycles()) {
    const IntVector gv = g.to_integer();
    const IntVector pairing = gram_times(l, g);  // pairing[j] = <e_j, g>
    for (std::size_t r = 0; r < n; ++r) {
      if (gv[r] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) t(r, j) += gv[r] * pairing[j];
    }
  }
  return IsometryCandidate(std::move(t), l, base_change_bound);
}

IsometryCandidate compose(const IsometryCandidate& a, const IsometryCandidate& b) {
  if (a.lattice() != b.lattice()) throw PreconditionError("operators act on different lattices");
  return IsometryCandidate(a.matrix() * b.matrix(), a.lattice(), a.analysis().bound);
}

IsometryCandidate base_change(const IsometryCandidate& t, unsigned n) {
  if (n < 1) throw PreconditionError("base-change order must be at least 1");
  return IsometryCandidate(t.matrix().pow(n), t.lattice(), t.analysis().bound);
}

RatMatrix exp_nilpotent(const NilpotentOperator& n) {
  const std::size_t d = n.dim();
  RatMatrix sum = RatMatrix::identity(d);
  RatMatrix term = RatMatrix::identity(d);
  for (unsigned j = 1; j <= n.nilpotency_index(); ++j) {
    term = term * n.matrix();
    term *= Rational(1, j);
    sum += term;
  }
  return sum;
}

NilpotentOperator log_unipotent(const IsometryCandidate& t) {
  if (!t.analysis().unipotent) throw PreconditionError("log_unipotent needs a unipotent operator; base-change first");
  const RatMatrix tm = to_rational(t.matrix());
  const std::size_t d = tm.rows();
  const RatMatrix m = tm - RatMatrix::identity(d);
  RatMatrix sum(d, d);
  RatMatrix power = m;
  for (unsigned j = 1; !power.is_zero(); ++j) {
    Rational c(j % 2 == 1 ? 1 : -1, j);
    sum += power * c;
    power = power * m;
  }
  NilpotentOperator n(std::move(sum));
  if (exp_nilpotent(n) != tm) throw ArithmeticError("exp(log T) != T");
  return n;
}

LiteralLog paper_log(const IsometryCandidate& t) {
  LiteralLog out;
  const RatMatrix tm = to_rational(t.matrix());
  out.n = tm - RatMatrix::identity(tm.rows());
  out.rank = rank(out.n);
  out.nilpotency_index = nilpotency_index(out.n);
  out.nilpotent = out.nilpotency_index.has_value();
  const RatMatrix sq = out.n * out.n;
  if (out.n.is_zero()) {
    out.square_factor = Rational(0);
  } else {
    for (std::size_t i = 0; i < out.n.rows() && !out.square_factor; ++i)
      for (std::size_t j = 0; j < out.n.cols(); ++j)
        if (out.n(i, j) != 0) {
          Rational c = sq(i, j) / out.n(i, j);
          if (sq == out.n * c) out.square_factor = c;
          break;
        }
  }
  return out;
}

IsometryCandidate eichler_unipotent(const Lattice& l, const LatticeVector& e, const LatticeVector& a) {
  if (e.parent() != l || a.parent() != l) throw PreconditionError("vectors do not belong to the lattice");
  if (!l.is_even()) throw PreconditionError("Eichler transvection needs an even lattice");
  if (inner(e, e) != 0) throw PreconditionError("e must be isotropic");
  if (inner(e, a) != 0) throw PreconditionError("a must be orthogonal to e");
  const Integer half_aa = inner(a, a) / 2;
  const std::size_t n = l.rank();
  const IntVector ev = e.to_integer();
  const IntVector av = a.to_integer();
  const IntVector ge = gram_times(l, e);  // ge[j] = <e, e_j>
  const IntVector ga = gram_times(l, a);
  IntMatrix t = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r) t(r, j) += -ga[j] * ev[r] + ge[j] * av[r] - half_aa * ge[j] * ev[r];
  IsometryCandidate out(std::move(t), l);
  if (!out.analysis().is_isometry || !out.analysis().unipotent)
    throw ArithmeticError("Eichler transvection failed its isometry/unipotency check");
  return out;
}

}  // namespace lmhslab
