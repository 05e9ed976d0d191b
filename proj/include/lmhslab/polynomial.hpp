#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lmhslab/matrix.hpp"

namespace lmhslab {

/// Exponents of x, y, z, w.
using Exponent = std::array<unsigned, 4>;
using Point4 = std::array<Rational, 4>;

/// Sparse homogeneous polynomial in x, y, z, w with rational coefficients.
/// The zero polynomial is representable (it arises from derivatives) and
/// carries whatever degree it was constructed with.
class ProjectivePolynomial {
 public:
  using Terms = std::map<Exponent, Rational, std::greater<>>;

  ProjectivePolynomial(unsigned degree = 0) : degree_(degree) {}
  /// Drops zero coefficients; throws PreconditionError unless every
  /// monomial has total degree `degree`.
  ProjectivePolynomial(Terms terms, unsigned degree);

  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational evaluate(const Point4& p) const;
  /// Partial derivative in variable 0..3.
  ProjectivePolynomial derivative(std::size_t var) const;

  /// Canonical text: monomials in decreasing exponent order, e.g.
  /// "x^4 + y^4 - 4*x*y*z*w". The zero polynomial prints as "0".
  std::string to_string() const;

  friend ProjectivePolynomial operator+(const ProjectivePolynomial& a, const ProjectivePolynomial& b);
  friend ProjectivePolynomial operator-(const ProjectivePolynomial& a, const ProjectivePolynomial& b);
  friend ProjectivePolynomial operator*(const Rational& c, const ProjectivePolynomial& a);
  friend bool operator==(const ProjectivePolynomial& a, const ProjectivePolynomial& b) {
    return a.terms_ == b.terms_ && (a.degree_ == b.degree_ || a.terms_.empty());
  }

 private:
  Terms terms_;
  unsigned degree_;
};

/// Grammar (whitespace ignored):
///
///   poly    := [sign] term { sign term }
///   sign    := '+' | '-'
///   term    := factor { '*' factor }
///   factor  := primary [ '^' digits ]
///   primary := digits [ '/' digits ] | 'x' | 'y' | 'z' | 'w' | '(' poly ')'
///
/// Products and powers are expanded. The result must be nonzero and
/// homogeneous. Throws ParseError (with a byte offset) on bad syntax,
/// PreconditionError on a zero or non-homogeneous result.
ProjectivePolynomial parse_poly(std::string_view text);

/// Same as parse_poly after dropping '#' comment lines and joining the rest.
ProjectivePolynomial parse_poly_file(std::string_view text);

/// "p/q" or "p". Throws ParseError.
Rational parse_rational(std::string_view text);
/// Comma-separated rationals. Throws ParseError.
std::vector<Rational> parse_rational_list(std::string_view text);

/// (dF/dx, dF/dy, dF/dz, dF/dw).
std::array<ProjectivePolynomial, 4> gradient(const ProjectivePolynomial& f);

std::string rational_to_string(const Rational& q);

}  // namespace lmhslab
