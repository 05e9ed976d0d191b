#include "lattice_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>

#include "lmhslab/exactlin.hpp"

namespace lmhslab::detail {

namespace {

using i128 = __int128;

std::int64_t floor_div(i128 num, i128 den) {
  i128 q = num / den;
  if (num % den != 0 && num < 0) --q;
  return static_cast<std::int64_t>(q);
}

std::int64_t ceil_div(i128 num, i128 den) {
  i128 q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return static_cast<std::int64_t>(q);
}

std::int64_t labs64(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t to_i64(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw ArithmeticError(std::string(what) + " does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

struct NormSearch::Walk {
  std::int64_t target = 0;
  const std::vector<Vec>* forms = nullptr;
  std::vector<Vec> suffix_abs;  // per form, sum_{k >= i} |form_k|
  std::vector<Vec> suffix_max;  // per form, max_{k >= i} |form_k|
  const Vec* after = nullptr;
  bool tied = false;
  const Visitor* visitor = nullptr;

  Vec x;
  std::int64_t level = 0;
  std::int64_t used = 0;
  std::int64_t done = 0;
  std::int64_t base = 0;
  Vec cross;
  Vec dots;
};

NormSearch::NormSearch(const Lattice& lattice, std::int64_t bound) : n_(lattice.rank()), bound_(bound) {
  if (bound < 1) throw PreconditionError("height bound must be at least 1");
  if (bound > 100000) throw PreconditionError("height bound too large for the bounded search");
  gram_.resize(n_ * n_);
  std::int64_t abs_sum = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      gram_[i * n_ + j] = to_i64(lattice.gram()(i, j), "Gram entry");
      abs_sum += labs64(gram_[i * n_ + j]);
      if (abs_sum > (std::int64_t{1} << 40)) throw ArithmeticError("Gram matrix entries too large for the search");
    }
  if (static_cast<i128>(abs_sum) * bound * bound > (static_cast<i128>(1) << 60))
    throw ArithmeticError("height bound too large for this lattice");

  block_of_.resize(n_);
  tail_lo_.assign(n_ + 1, 0);
  tail_hi_.assign(n_ + 1, 0);
  const std::int64_t b2 = bound * bound;
  std::size_t start = 0;
  for (std::size_t size : lattice.block_sizes()) {
    Block blk;
    blk.start = start;
    blk.end = start + size;
    for (std::size_t i = blk.start; i < blk.end; ++i) block_of_[i] = blocks_.size();

    for (std::size_t i = blk.start; i < blk.end; ++i) {
      std::int64_t lo = 0, hi = 0;
      for (std::size_t a = i; a < blk.end; ++a) {
        const std::int64_t d = gram(a, a) * b2;
        (d >= 0 ? hi : lo) += d;
        for (std::size_t c = a + 1; c < blk.end; ++c) {
          const std::int64_t off = 2 * labs64(gram(a, c)) * b2;
          lo -= off;
          hi += off;
        }
      }
      tail_lo_[i] = lo;
      tail_hi_[i] = hi;
    }

    IntMatrix sub(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) sub(i, j) = lattice.gram()(blk.start + i, blk.start + j);
    Signature sig = lmhslab::signature(to_rational(sub));
    if (sig.negative == size) blk.definite = -1;
    if (sig.positive == size) blk.definite = 1;

    blk.lo = tail_lo_[blk.start];
    blk.hi = tail_hi_[blk.start];
    if (blk.definite < 0) blk.hi = 0;
    if (blk.definite > 0) blk.lo = 0;

    if (blk.definite != 0) {
      blk.schur.resize(size);
      blk.schur_den.resize(size, 1);
      RatMatrix a = to_rational(sub);
      for (std::size_t p = 1; p < size; ++p) {
        const std::size_t r = size - p;
        RatMatrix app(p, p), apr(p, r), arr(r, r);
        for (std::size_t i = 0; i < p; ++i)
          for (std::size_t j = 0; j < p; ++j) app(i, j) = a(i, j);
        for (std::size_t i = 0; i < p; ++i)
          for (std::size_t j = 0; j < r; ++j) apr(i, j) = a(i, p + j);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) arr(i, j) = a(p + i, p + j);
        RatMatrix s = app - apr * (*inverse(arr)) * apr.transpose();
        Integer den = 1;
        for (std::size_t i = 0; i < p; ++i)
          for (std::size_t j = 0; j < p; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s(i, j).get_den_mpz_t());
        std::vector<std::int64_t> scaled(p * p);
        for (std::size_t i = 0; i < p; ++i)
          for (std::size_t j = 0; j < p; ++j) {
            Rational v = s(i, j) * den;
            scaled[i * p + j] = to_i64(v.get_num(), "Schur complement entry");
          }
        blk.schur[p] = std::move(scaled);
        blk.schur_den[p] = to_i64(den, "Schur complement denominator");
      }
    }
    blocks_.push_back(std::move(blk));
    start += size;
  }

  future_lo_.assign(blocks_.size() + 1, 0);
  future_hi_.assign(blocks_.size() + 1, 0);
  for (std::size_t b = blocks_.size(); b-- > 0;) {
    future_lo_[b] = b + 1 < blocks_.size() ? future_lo_[b + 1] + blocks_[b + 1].lo : 0;
    future_hi_[b] = b + 1 < blocks_.size() ? future_hi_[b + 1] + blocks_[b + 1].hi : 0;
  }
}

bool NormSearch::visit(std::int64_t norm, const std::vector<Vec>& forms, const Vec* after,
                       const Visitor& visitor) const {
  Walk w;
  w.target = norm;
  w.forms = &forms;
  w.after = after;
  w.visitor = &visitor;
  w.x.assign(n_, 0);
  w.cross.assign(n_, 0);
  w.dots.assign(forms.size(), 0);
  for (const auto& f : forms) {
    if (f.size() != n_) throw DimensionError("linear form length does not match lattice rank");
    Vec sa(n_ + 1, 0), sm(n_ + 1, 0);
    for (std::size_t i = n_; i-- > 0;) {
      sa[i] = sa[i + 1] + labs64(f[i]);
      sm[i] = std::max(sm[i + 1], labs64(f[i]));
    }
    w.suffix_abs.push_back(std::move(sa));
    w.suffix_max.push_back(std::move(sm));
  }

  std::int64_t first_level = 1;
  std::int64_t after_level = -1;
  if (after) {
    if (after->size() != n_) throw DimensionError("start vector length does not match lattice rank");
    after_level = 0;
    for (auto c : *after) after_level += labs64(c);
    first_level = std::max<std::int64_t>(1, after_level);
  }
  const std::int64_t last_level = static_cast<std::int64_t>(n_) * bound_;
  for (std::int64_t s = first_level; s <= last_level; ++s) {
    w.level = s;
    w.tied = (s == after_level);
    if (!descend(w, 0)) return false;
  }
  return true;
}

bool NormSearch::descend(Walk& w, std::size_t i) const {
  const std::int64_t rem = w.level - w.used;
  if (i == n_) {
    if (rem != 0 || w.tied || w.done != w.target) return true;
    for (auto d : w.dots)
      if (d != 0) return true;
    return (*w.visitor)(w.x);
  }
  if (rem > bound_ * static_cast<std::int64_t>(n_ - i)) return true;
  for (std::size_t j = 0; j < w.dots.size(); ++j) {
    const std::int64_t reach = std::min(bound_ * w.suffix_abs[j][i], rem * w.suffix_max[j][i]);
    if (labs64(w.dots[j]) > reach) return true;
  }

  const std::size_t b = block_of_[i];
  const Block& blk = blocks_[b];
  std::int64_t lo, hi;
  if (i == blk.start) {
    lo = blk.lo;
    hi = blk.hi;
  } else {
    std::int64_t cross_abs = 0;
    for (std::size_t k = i; k < blk.end; ++k) cross_abs += labs64(w.cross[k]);
    const std::int64_t spread = 2 * bound_ * cross_abs;
    lo = w.base - spread + tail_lo_[i];
    hi = w.base + spread + tail_hi_[i];
    if (blk.definite != 0) {
      const std::size_t p = i - blk.start;
      const auto& s = blk.schur[p];
      i128 q = 0;
      for (std::size_t r = 0; r < p; ++r) {
        const std::int64_t xr = w.x[blk.start + r];
        if (xr == 0) continue;
        i128 row = 0;
        for (std::size_t c = 0; c < p; ++c) row += static_cast<i128>(s[r * p + c]) * w.x[blk.start + c];
        q += row * xr;
      }
      if (blk.definite < 0)
        hi = std::min(hi, floor_div(q, blk.schur_den[p]));
      else
        lo = std::max(lo, ceil_div(q, blk.schur_den[p]));
    }
  }
  if (w.target < w.done + lo + future_lo_[b] || w.target > w.done + hi + future_hi_[b]) return true;

  const std::int64_t m = std::min(bound_, rem);
  std::int64_t top = m;
  const bool tied = w.tied;
  if (tied) top = std::min(top, (*w.after)[i]);

  const std::int64_t aii = gram(i, i);
  const std::int64_t base0 = w.base;
  const std::int64_t done0 = w.done;
  const bool closes_block = (i + 1 == blk.end);
  for (std::int64_t v = top; v >= -m; --v) {
    w.tied = tied && v == (*w.after)[i];
    w.x[i] = v;
    w.used += labs64(v);
    const std::int64_t base = base0 + aii * v * v + 2 * v * w.cross[i];
    if (v != 0) {
      for (std::size_t k = i + 1; k < blk.end; ++k) w.cross[k] += gram(k, i) * v;
      for (std::size_t j = 0; j < w.dots.size(); ++j) w.dots[j] += (*w.forms)[j][i] * v;
    }
    if (closes_block) {
      w.done = done0 + base;
      w.base = 0;
    } else {
      w.base = base;
    }

    const bool keep_going = descend(w, i + 1);

    w.done = done0;
    w.base = base0;
    if (v != 0) {
      for (std::size_t k = i + 1; k < blk.end; ++k) w.cross[k] -= gram(k, i) * v;
      for (std::size_t j = 0; j < w.dots.size(); ++j) w.dots[j] -= (*w.forms)[j][i] * v;
    }
    w.used -= labs64(v);
    w.x[i] = 0;
    if (!keep_going) {
      w.tied = tied;
      return false;
    }
  }
  w.tied = tied;
  return true;
}

}  // namespace lmhslab::detail

namespace lmhslab {

std::vector<LatticeVector> enumerate_norm_vectors(const Lattice& l, std::int64_t norm, std::int64_t height_bound,
                                                  std::size_t limit) {
  detail::NormSearch search(l, height_bound);
  std::vector<LatticeVector> out;
  search.visit(norm, {}, nullptr, [&](const detail::NormSearch::Vec& v) {
    out.emplace_back(l, v);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

namespace {

using Vec = detail::NormSearch::Vec;

// Above this many (-2)-vectors in the box the search stays lazy.
constexpr std::size_t kMaterializeCap = 20000;

Vec negated(const Vec& v) {
  Vec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
  return w;
}

// Backtracking over an explicit root list, as bitsets. If extending by v
// failed, extending by -v later in the order fails too (same orthogonal
// complement, smaller window), so -v is skipped.
class CliqueSearch {
 public:
  CliqueSearch(const detail::NormSearch& search, const std::vector<Vec>& roots) : roots_(roots) {
    const std::size_t m = roots.size();
    words_ = (m + 63) / 64;
    orth_.assign(m, std::vector<std::uint64_t>(words_, 0));
    neg_.assign(m, m);
    std::map<Vec, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) index.emplace(roots[i], i);
    const std::size_t n = search.rank();
    for (std::size_t i = 0; i < m; ++i) {
      auto it = index.find(negated(roots[i]));
      if (it != index.end()) neg_[i] = it->second;
      Vec form(n, 0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) form[a] += search.gram(a, b) * roots[i][b];
      for (std::size_t j = 0; j < m; ++j) {
        std::int64_t d = 0;
        for (std::size_t a = 0; a < n; ++a) d += form[a] * roots[j][a];
        if (d == 0) orth_[i][j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }

  std::optional<std::vector<std::size_t>> run(std::size_t k) {
    k_ = k;
    chosen_.clear();
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t j = 0; j < roots_.size(); ++j) all[j / 64] |= std::uint64_t{1} << (j % 64);
    if (extend(all)) return chosen_;
    return std::nullopt;
  }

 private:
  static std::size_t popcount(const std::vector<std::uint64_t>& bits) {
    std::size_t c = 0;
    for (auto w : bits) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool extend(const std::vector<std::uint64_t>& cand) {
    if (chosen_.size() == k_) return true;
    if (popcount(cand) < k_ - chosen_.size()) return false;
    std::vector<bool> failed(roots_.size(), false);
    std::vector<std::uint64_t> next(words_);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        if (neg_[i] < roots_.size() && failed[neg_[i]]) {
          failed[i] = true;
          continue;
        }
        for (std::size_t u = 0; u < words_; ++u) next[u] = cand[u] & orth_[i][u];
        // keep only indices > i
        for (std::size_t u = 0; u < w; ++u) next[u] = 0;
        const std::size_t bit = i % 64;
        next[w] &= bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
        chosen_.push_back(i);
        if (extend(next)) return true;
        chosen_.pop_back();
        failed[i] = true;
      }
    }
    return false;
  }

  const std::vector<Vec>& roots_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> orth_;
  std::vector<std::size_t> neg_;
  std::size_t k_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<std::vector<LatticeVector>> orthogonal_root_configuration(const Lattice& l, std::size_t k,
                                                                        std::int64_t height_bound) {
  if (k == 0) throw PreconditionError("configuration size must be at least 1");
  detail::NormSearch search(l, height_bound);
  std::vector<Vec> chosen;
  chosen.reserve(k);

  std::vector<Vec> roots;
  const bool complete = search.visit(-2, {}, nullptr, [&](const Vec& v) {
    roots.push_back(v);
    return roots.size() <= kMaterializeCap;
  });

  if (complete) {
    CliqueSearch clique(search, roots);
    auto picked = clique.run(k);
    if (!picked) return std::nullopt;
    for (auto i : *picked) chosen.push_back(roots[i]);
  } else {
    std::vector<Vec> forms;
    auto form_of = [&](const Vec& c) {
      Vec f(l.rank(), 0);
      for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j) f[i] += search.gram(i, j) * c[j];
      return f;
    };
    // Same traversal as CliqueSearch, with candidates produced on demand.
    std::function<bool(const Vec*)> extend = [&](const Vec* after) -> bool {
      if (chosen.size() == k) return true;
      bool found = false;
      std::set<Vec> failed;
      const std::vector<Vec> constraints = forms;
      search.visit(-2, constraints, after, [&](const Vec& v) {
        if (failed.count(negated(v))) {
          failed.insert(v);
          return true;
        }
        chosen.push_back(v);
        forms.push_back(form_of(v));
        if (extend(&chosen.back())) {
          found = true;
          return false;
        }
        chosen.pop_back();
        forms.pop_back();
        failed.insert(v);
        return true;
      });
      return found;
    };
    if (!extend(nullptr)) return std::nullopt;
  }

  std::vector<LatticeVector> out;
  for (const auto& c : chosen) out.emplace_back(l, c);
  IntMatrix expected = IntMatrix::identity(k) * Integer(-2);
  if (gram_of(out) != expected) throw ArithmeticError("root configuration failed its Gram check");
  return out;
}

}  // namespace lmhslab
