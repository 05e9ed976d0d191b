#include "lmhslab/quartic.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "lmhslab/exactlin.hpp"

namespace lmhslab {

namespace {

std::atomic<unsigned> g_thread_limit{0};

struct Derivatives {
  ProjectivePolynomial f;
  std::array<ProjectivePolynomial, 4> grad;
  std::array<std::array<ProjectivePolynomial, 4>, 4> hess;

  explicit Derivatives(const ProjectivePolynomial& poly) : f(poly), grad(gradient(poly)) {
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) hess[a][b] = grad[a].derivative(b);
  }
};

ProjectivePoint canonical_integer(ProjectivePoint p) {
  Integer g = 0;
  for (const auto& c : p) g = gcd(g, c);
  if (g == 0) throw PreconditionError("the zero vector is not a projective point");
  for (auto& c : p) c /= g;
  for (const auto& c : p)
    if (c != 0) {
      if (c < 0)
        for (auto& d : p) d = -d;
      break;
    }
  return p;
}

SingularPointReport make_report(const Derivatives& d, const ProjectivePoint& point, std::optional<std::size_t> chart) {
  SingularPointReport r;
  r.point = point;
  if (chart) {
    if (*chart > 3) throw DimensionError("chart index out of range");
    if (point[*chart] == 0) throw PreconditionError("point lies outside the requested affine chart");
    r.chart = *chart;
  } else {
    r.chart = 3;
    while (point[r.chart] == 0) --r.chart;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    r.affine[i] = Rational(point[i], point[r.chart]);
    r.affine[i].canonicalize();
  }
  r.value = d.f.evaluate(r.affine);
  r.is_on_surface = r.value == 0;
  bool grad_zero = true;
  for (std::size_t i = 0; i < 4; ++i) {
    r.gradient[i] = d.grad[i].evaluate(r.affine);
    if (r.gradient[i] != 0) grad_zero = false;
  }
  r.is_singular = r.is_on_surface && grad_zero;
  std::array<std::size_t, 3> vars{};
  for (std::size_t i = 0, k = 0; i < 4; ++i)
    if (i != r.chart) vars[k++] = i;
  r.hessian = RatMatrix(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) r.hessian(a, b) = d.hess[vars[a]][vars[b]].evaluate(r.affine);
  r.hessian_rank = rank(r.hessian);
  if (!r.is_singular)
    r.classification = PointClass::SMOOTH_POINT;
  else
    r.classification = r.hessian_rank == 3 ? PointClass::A1_NODE : PointClass::DEGENERATE_SINGULARITY;
  return r;
}

// F scaled to integer coefficients, for a cheap membership test.
struct IntegerForm {
  std::vector<std::pair<Exponent, Integer>> terms;
  unsigned degree = 0;

  explicit IntegerForm(const ProjectivePolynomial& f) : degree(f.degree()) {
    Integer den = 1;
    for (const auto& [e, c] : f.terms()) den = lcm(den, Integer(c.get_den()));
    for (const auto& [e, c] : f.terms()) terms.emplace_back(e, Integer(c.get_num() * (den / c.get_den())));
  }

  bool vanishes(const std::array<std::int64_t, 4>& p, std::vector<std::array<Integer, 4>>& pw, Integer& acc,
                Integer& m) const {
    for (std::size_t i = 0; i < 4; ++i) {
      pw[0][i] = 1;
      for (unsigned k = 1; k <= degree; ++k) pw[k][i] = pw[k - 1][i] * static_cast<long>(p[i]);
    }
    acc = 0;
    for (const auto& [e, c] : terms) {
      m = c * pw[e[0]][0];
      m *= pw[e[1]][1];
      m *= pw[e[2]][2];
      m *= pw[e[3]][3];
      acc += m;
    }
    return acc == 0;
  }
};

void require_quartic(const ProjectivePolynomial& p, const char* what) {
  if (!p.is_zero() && p.degree() != 4) throw PreconditionError(std::string(what) + " is not a quartic");
}

}  // namespace

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::SMOOTH_POINT: return "SMOOTH_POINT";
    case PointClass::A1_NODE: return "A1_NODE";
    case PointClass::DEGENERATE_SINGULARITY: return "DEGENERATE_SINGULARITY";
  }
  return "?";
}

ProjectivePoint canonical_point(const Point4& p) {
  Integer den = 1;
  for (const auto& c : p) den = lcm(den, Integer(c.get_den()));
  ProjectivePoint out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = p[i].get_num() * (den / p[i].get_den());
  return canonical_integer(out);
}

std::string point_to_string(const ProjectivePoint& p) {
  return "[" + p[0].get_str() + ":" + p[1].get_str() + ":" + p[2].get_str() + ":" + p[3].get_str() + "]";
}

Point4 parse_point(std::string_view text) {
  std::string s(text);
  for (auto& c : s)
    if (c == ':' || c == '[' || c == ']') c = c == ':' ? ',' : ' ';
  std::vector<Rational> v = parse_rational_list(s);
  if (v.size() != 4) throw ParseError("a point needs 4 coordinates", 0);
  return {v[0], v[1], v[2], v[3]};
}

SingularPointReport verify_singular_point(const ProjectivePolynomial& f, const Point4& p,
                                          std::optional<std::size_t> chart) {
  return make_report(Derivatives(f), canonical_point(p), chart);
}

void set_thread_limit(unsigned n) { g_thread_limit = n; }

unsigned thread_limit() {
  const unsigned n = g_thread_limit.load();
  if (n != 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SingularPointReport> scan_points(const ProjectivePolynomial& f, std::int64_t height_bound) {
  if (height_bound < 1) throw PreconditionError("height bound must be at least 1");
  if (f.is_zero()) throw PreconditionError("cannot scan the zero polynomial");
  const Derivatives d(f);
  const IntegerForm form(f);
  const std::uint64_t side = static_cast<std::uint64_t>(2 * height_bound + 1);
  const std::uint64_t total = side * side * side * side;
  const std::uint64_t chunk = 4096;
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  std::vector<std::pair<std::uint64_t, SingularPointReport>> found;

  auto worker = [&] {
    std::vector<std::array<Integer, 4>> pw(form.degree + 1);
    Integer acc, m;
    std::vector<std::pair<std::uint64_t, SingularPointReport>> local;
    for (;;) {
      const std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= total) break;
      const std::uint64_t end = std::min(total, begin + chunk);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::array<std::int64_t, 4> p{};
        std::uint64_t rest = idx;
        for (int i = 3; i >= 0; --i) {
          p[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest % side) - height_bound;
          rest /= side;
        }
        std::int64_t first = 0;
        std::int64_t g = 0;
        for (auto c : p) {
          if (first == 0) first = c;
          g = std::gcd(g, c);
        }
        if (first <= 0 || g != 1) continue;
        if (!form.vanishes(p, pw, acc, m)) continue;
        ProjectivePoint pt{Integer(static_cast<long>(p[0])), Integer(static_cast<long>(p[1])),
                           Integer(static_cast<long>(p[2])), Integer(static_cast<long>(p[3]))};
        SingularPointReport r = make_report(d, pt, std::nullopt);
        if (r.is_singular) local.emplace_back(idx, std::move(r));
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    for (auto& x : local) found.push_back(std::move(x));
  };

  const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(thread_limit(), (total + chunk - 1) / chunk));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SingularPointReport> out;
  out.reserve(found.size());
  for (auto& x : found) out.push_back(std::move(x.second));
  return out;
}

PencilFamily parse_family(std::string_view text) {
  PencilFamily fam;
  bool have_f0 = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    const std::size_t line_start = start;
    start = end + 1;
    const std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string_view::npos || line[a] == '#') continue;
    const std::size_t colon = line.find(':', a);
    if (colon == std::string_view::npos) throw ParseError("expected 'f0:' or 'g:'", line_start + a);
    std::string tag(line.substr(a, colon - a));
    tag.erase(tag.find_last_not_of(" \t") + 1);
    std::string_view body = line.substr(colon + 1);
    const std::size_t body_offset = line_start + colon + 1;
    auto poly_at = [](std::string_view src, std::size_t offset) {
      try {
        return parse_poly(src);
      } catch (const ParseError& e) {
        throw ParseError("polynomial", offset + e.position());
      }
    };
    if (tag == "f0") {
      if (have_f0) throw ParseError("duplicate f0 line", line_start + a);
      fam.f0 = poly_at(body, body_offset);
      have_f0 = true;
    } else if (tag == "g") {
      Rational lambda = 1;
      const std::size_t semi = body.find(';');
      if (semi != std::string_view::npos) {
        std::string_view opt = body.substr(semi + 1);
        const std::size_t o = opt.find_first_not_of(" \t");
        if (o == std::string_view::npos || opt.substr(o, 7) != "lambda=")
          throw ParseError("expected 'lambda='", body_offset + semi + 1);
        try {
          lambda = parse_rational(opt.substr(o + 7));
        } catch (const ParseError& e) {
          throw ParseError("bad lambda", body_offset + semi + 1 + o + 7 + e.position());
        }
        body = body.substr(0, semi);
      }
      fam.perturbations.emplace_back(lambda, poly_at(body, body_offset));
    } else {
      throw ParseError("unknown role tag '" + tag + "'", line_start + a);
    }
  }
  if (!have_f0) throw PreconditionError("family has no f0 line");
  require_quartic(fam.f0, "f0");
  for (const auto& [l, g] : fam.perturbations) require_quartic(g, "g");
  return fam;
}

ProjectivePolynomial pencil_fiber(const PencilFamily& family, const Rational& t) {
  require_quartic(family.f0, "f0");
  ProjectivePolynomial out = family.f0;
  for (const auto& [lambda, g] : family.perturbations) {
    require_quartic(g, "g");
    out = out + Rational(t * lambda) * g;
  }
  return out;
}

FamilyReport family_report(const PencilFamily& family, const std::vector<Rational>& t_samples,
                           std::int64_t height_bound) {
  FamilyReport rep;
  rep.height_bound = height_bound;
  for (const auto& t : t_samples) {
    FiberSummary s;
    s.t = t;
    s.fiber = pencil_fiber(family, t);
    s.singular_points = scan_points(s.fiber, height_bound);
    for (const auto& r : s.singular_points) {
      if (r.classification == PointClass::A1_NODE) ++s.a1_nodes;
      if (r.classification == PointClass::DEGENERATE_SINGULARITY) ++s.degenerate;
    }
    s.has_a1 = s.a1_nodes > 0;
    rep.fibers.push_back(std::move(s));
  }
  return rep;
}

}  // namespace lmhslab
