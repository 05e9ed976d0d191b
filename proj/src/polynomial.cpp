#include "lmhslab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lmhslab {

namespace {

constexpr unsigned kMaxDegree = 64;
using Poly = std::map<Exponent, Rational, std::greater<>>;

unsigned total(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

void add_term(Poly& p, const Exponent& e, const Rational& c) {
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  } else if (c == 0) {
    p.erase(it);
  }
}

unsigned poly_degree(const Poly& p) {
  unsigned d = 0;
  for (const auto& [e, c] : p) d = std::max(d, total(e));
  return d;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      add_term(out, e, ca * cb);
    }
  return out;
}

Poly constant(const Rational& c) {
  Poly p;
  add_term(p, Exponent{0, 0, 0, 0}, c);
  return p;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = poly();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Poly poly() {
    Poly out;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = term();
      for (const auto& [e, c] : t) add_term(out, e, sign == 1 ? c : Rational(-c));
      first = false;
    }
    return out;
  }

  Poly term() {
    Poly out = factor();
    while (peek('*')) {
      ++pos_;
      const std::size_t at = pos_;
      out = multiply(out, factor());
      if (poly_degree(out) > kMaxDegree) throw ParseError("degree exceeds " + std::to_string(kMaxDegree), at);
    }
    return out;
  }

  Poly factor() {
    Poly base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    const std::size_t at = pos_;
    const Integer e = digits();
    if (e > kMaxDegree) throw ParseError("exponent exceeds " + std::to_string(kMaxDegree), at);
    const unsigned n = static_cast<unsigned>(e.get_ui());
    if (n > 0 && poly_degree(base) * n > kMaxDegree)
      throw ParseError("degree exceeds " + std::to_string(kMaxDegree), at);
    Poly out = constant(1);
    for (unsigned i = 0; i < n; ++i) out = multiply(out, base);
    return out;
  }

  Integer digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      if (peek('/')) {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        den = digits();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      Rational q(num, den);
      q.canonicalize();
      return constant(q);
    }
    const std::string vars = "xyzw";
    if (auto v = vars.find(c); v != std::string::npos) {
      ++pos_;
      Exponent e{0, 0, 0, 0};
      e[v] = 1;
      Poly p;
      add_term(p, e, Rational(1));
      return p;
    }
    if (c == '(') {
      ++pos_;
      Poly p = poly();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ProjectivePolynomial::ProjectivePolynomial(Terms terms, unsigned degree) : degree_(degree) {
  for (auto& [e, c] : terms) {
    if (c == 0) continue;
    if (total(e) != degree) throw PreconditionError("polynomial is not homogeneous of degree " + std::to_string(degree));
    terms_.emplace(e, c);
  }
}

Rational ProjectivePolynomial::evaluate(const Point4& p) const {
  Rational sum = 0;
  Rational m;
  for (const auto& [e, c] : terms_) {
    m = c;
    for (std::size_t i = 0; i < 4; ++i)
      for (unsigned k = 0; k < e[i]; ++k) m *= p[i];
    sum += m;
  }
  return sum;
}

ProjectivePolynomial ProjectivePolynomial::derivative(std::size_t var) const {
  if (var > 3) throw DimensionError("variable index out of range");
  ProjectivePolynomial out(degree_ == 0 ? 0 : degree_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.terms_.emplace(d, c * e[var]);
  }
  return out;
}

std::string ProjectivePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* names = "xyzw";
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any = false;
    if (a != 1 || total(e) == 0) {
      os << a.get_str();
      any = true;
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (any) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      any = true;
    }
  }
  return os.str();
}

ProjectivePolynomial operator+(const ProjectivePolynomial& a, const ProjectivePolynomial& b) {
  if (!a.is_zero() && !b.is_zero() && a.degree_ != b.degree_) throw PreconditionError("degree mismatch in sum");
  ProjectivePolynomial out(a.is_zero() ? b.degree_ : a.degree_);
  out.terms_ = a.terms_;
  for (const auto& [e, c] : b.terms_) add_term(out.terms_, e, c);
  return out;
}

ProjectivePolynomial operator-(const ProjectivePolynomial& a, const ProjectivePolynomial& b) {
  return a + Rational(-1) * b;
}

ProjectivePolynomial operator*(const Rational& c, const ProjectivePolynomial& a) {
  ProjectivePolynomial out(a.degree_);
  if (c == 0) return out;
  for (const auto& [e, v] : a.terms_) out.terms_.emplace(e, c * v);
  return out;
}

ProjectivePolynomial parse_poly(std::string_view text) {
  Poly p = Parser(text).parse();
  if (p.empty()) throw PreconditionError("zero polynomial");
  const unsigned d = total(p.begin()->first);
  for (const auto& [e, c] : p)
    if (total(e) != d) throw PreconditionError("polynomial is not homogeneous");
  return ProjectivePolynomial(std::move(p), d);
}

ProjectivePolynomial parse_poly_file(std::string_view text) {
  std::string joined;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    const std::size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string_view::npos && line[a] != '#') {
      joined += line;
      joined += ' ';
    }
    start = end + 1;
  }
  return parse_poly(joined);
}

Rational parse_rational(std::string_view text) {
  std::size_t a = text.find_first_not_of(" \t");
  std::size_t b = text.find_last_not_of(" \t");
  if (a == std::string_view::npos) throw ParseError("empty rational", 0);
  std::string_view s = text.substr(a, b - a + 1);
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') ++i;
  const std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_start) throw ParseError("expected digits", a + i);
  std::string den = "1";
  if (i < s.size()) {
    if (s[i] != '/') throw ParseError("unexpected character in rational", a + i);
    const std::size_t den_start = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start || i != s.size()) throw ParseError("bad denominator", a + i);
    den = std::string(s.substr(den_start));
  }
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator", a);
  std::string num_text(s.substr(0, s.find('/')));
  if (num_text[0] == '+') num_text.erase(0, 1);
  Rational q(Integer(num_text), d);
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError("bad rational list entry", start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::array<ProjectivePolynomial, 4> gradient(const ProjectivePolynomial& f) {
  return {f.derivative(0), f.derivative(1), f.derivative(2), f.derivative(3)};
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace lmhslab
