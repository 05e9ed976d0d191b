#include "lmhslab/exactlin.hpp"

#include <algorithm>
#include <utility>

namespace lmhslab {

namespace {

RatMatrix stack_rows(std::size_t cols, const std::vector<RatVector>& vectors) {
  RatMatrix m(vectors.size(), cols);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != cols) throw DimensionError("vector length does not match ambient dimension");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = vectors[i][j];
  }
  return m;
}

RatMatrix nonzero_rows(const RatMatrix& r, std::size_t count) {
  RatMatrix out(count, r.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) out(i, j) = r(i, j);
  return out;
}

// Kernel vectors read off a reduced row echelon form.
std::vector<RatVector> kernel_vectors(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  RatMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<RatVector>& vectors) {
  SubspaceBasis s(ambient_dim);
  if (vectors.empty()) return s;
  std::vector<std::size_t> pivots;
  RatMatrix r = rref(stack_rows(ambient_dim, vectors), &pivots);
  s.basis_ = nonzero_rows(r, pivots.size());
  return s;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
  SubspaceBasis s(ambient_dim);
  s.basis_ = RatMatrix::identity(ambient_dim);
  return s;
}

std::vector<RatVector> SubspaceBasis::vectors() const {
  std::vector<RatVector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool SubspaceBasis::contains(const RatVector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  // Reduce v against the RREF rows; v is inside iff it reduces to zero.
  RatVector w = v;
  std::size_t row = 0;
  for (std::size_t j = 0; j < ambient_ && row < dim(); ++j) {
    if (basis_(row, j) == 0) continue;
    if (w[j] != 0) {
      Rational f = w[j];
      for (std::size_t k = j; k < ambient_; ++k) w[k] -= f * basis_(row, k);
    }
    ++row;
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  auto vs = a.vectors();
  auto wb = b.vectors();
  vs.insert(vs.end(), wb.begin(), wb.end());
  return SubspaceBasis::span(a.ambient_dim(), vs);
}

SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return SubspaceBasis(n);
  // x in a with x = A^T s = B^T t  <=>  [A^T | -B^T] (s, t) = 0.
  RatMatrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.rows()(j, i);
    for (std::size_t j = 0; j < b.dim(); ++j) m(i, a.dim() + j) = -b.rows()(j, i);
  }
  std::vector<RatVector> out;
  for (const auto& k : kernel_vectors(m)) {
    RatVector x(n, Rational(0));
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t i = 0; i < n; ++i) x[i] += k[j] * a.rows()(j, i);
    out.push_back(std::move(x));
  }
  return SubspaceBasis::span(n, out);
}

SubspaceBasis apply(const RatMatrix& m, const SubspaceBasis& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionError("operator does not act on this space");
  std::vector<RatVector> out;
  for (const auto& v : s.vectors()) out.push_back(m.apply(v));
  return SubspaceBasis::span(m.rows(), out);
}

SubspaceBasis preimage(const RatMatrix& m, const SubspaceBasis& target, const SubspaceBasis& within) {
  if (m.cols() != within.ambient_dim() || m.rows() != target.ambient_dim())
    throw DimensionError("operator does not fit the given subspaces");
  const std::size_t n = within.ambient_dim();
  if (within.is_zero()) return SubspaceBasis(n);
  // v = W y with m W y = T z  <=>  [m W | -T] (y, z) = 0.
  RatMatrix mw = m * within.columns();
  RatMatrix sys(m.rows(), within.dim() + target.dim());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < within.dim(); ++j) sys(i, j) = mw(i, j);
    for (std::size_t j = 0; j < target.dim(); ++j) sys(i, within.dim() + j) = -target.rows()(j, i);
  }
  std::vector<RatVector> out;
  for (const auto& k : kernel_vectors(sys)) {
    RatVector v(n, Rational(0));
    for (std::size_t j = 0; j < within.dim(); ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] += k[j] * within.rows()(j, i);
    out.push_back(std::move(v));
  }
  return SubspaceBasis::span(n, out);
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots) {
  RatMatrix r = m;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  Rational f;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && r(p, col) == 0) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (std::size_t k = 0; k < r.cols(); ++k) std::swap(r(p, k), r(row, k));
    Rational inv = 1 / r(row, col);
    for (std::size_t k = col; k < r.cols(); ++k) r(row, k) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      f = r(i, col);
      for (std::size_t k = col; k < r.cols(); ++k) r(i, k) -= f * r(row, k);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return r;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

SubspaceBasis kernel(const RatMatrix& m) { return SubspaceBasis::span(m.cols(), kernel_vectors(m)); }

SubspaceBasis image(const RatMatrix& m) {
  std::vector<RatVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return SubspaceBasis::span(m.rows(), cols);
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match row count");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  RatMatrix r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.cols());
  if (m.apply(x) != b) throw ArithmeticError("solve: residual check failed");
  return x;
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  Rational f;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      f = a(i, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(i, k) -= f * a(c, k);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Integer(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j));
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  RatMatrix r = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

Signature signature(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw PreconditionError("signature requires a symmetric matrix");
  RatMatrix a = symmetric;
  const std::size_t n = a.rows();
  Signature sig;
  Rational f;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++sig.zero;
          continue;
        }
        // e_k <- e_k + e_j makes the diagonal entry 2 a(k, j) != 0.
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      f = a(i, k) / a(k, k);
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    if (a(k, k) > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  Integer q;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < rows; ++k) std::swap(u(i, k), u(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < cols; ++k) std::swap(v(k, i), v(k, j));
  };
  // row_i -= f * row_j
  auto row_axpy = [&](std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t k = 0; k < cols; ++k) a(i, k) -= f * a(j, k);
    for (std::size_t k = 0; k < rows; ++k) u(i, k) -= f * u(j, k);
  };
  // col_i -= f * col_j
  auto col_axpy = [&](std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t k = 0; k < rows; ++k) a(k, i) -= f * a(k, j);
    for (std::size_t k = 0; k < cols; ++k) v(k, i) -= f * v(k, j);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero |entry| of the trailing block, first in row-major order.
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Integer av = abs(a(i, j));
          if (!found || av < best) {
            found = true;
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (!found) break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_axpy(i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_axpy(j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go around again.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            row_axpy(t, i, Integer(-1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t k = 0; k < cols; ++k) a(t, k) = -a(t, k);
      for (std::size_t k = 0; k < rows; ++k) u(t, k) = -u(t, k);
    }
  }
  return SmithForm{std::move(u), std::move(a), std::move(v)};
}

}  // namespace lmhslab
