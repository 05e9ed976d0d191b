#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lmhslab/polynomial.hpp"

namespace lmhslab {

enum class PointClass { SMOOTH_POINT, A1_NODE, DEGENERATE_SINGULARITY };
std::string to_string(PointClass c);

/// Primitive integer representative with first nonzero coordinate positive.
using ProjectivePoint = std::array<Integer, 4>;

/// Scales a nonzero rational point to its canonical integer representative.
/// Throws PreconditionError for the zero vector.
ProjectivePoint canonical_point(const Point4& p);
/// "[a:b:c:d]".
std::string point_to_string(const ProjectivePoint& p);
/// "a,b,c,d" with rational entries; throws ParseError.
Point4 parse_point(std::string_view text);

struct SingularPointReport {
  ProjectivePoint point;
  std::size_t chart = 3;  // coordinate set to 1
  Point4 affine;          // the point scaled so affine[chart] == 1
  Rational value;         // F at `affine`
  std::array<Rational, 4> gradient;
  RatMatrix hessian;  // 3x3, second partials in the non-chart variables
  bool is_on_surface = false;
  bool is_singular = false;
  std::size_t hessian_rank = 0;
  PointClass classification = PointClass::SMOOTH_POINT;
};

/// Exact singularity report. The affine chart defaults to the largest
/// index with a nonzero coordinate. Points off the surface are reported as
/// SMOOTH_POINT with is_on_surface false.
SingularPointReport verify_singular_point(const ProjectivePolynomial& f, const Point4& p,
                                          std::optional<std::size_t> chart = std::nullopt);

/// Every canonical integer point with coordinates in [-bound, bound] at which
/// F and its gradient vanish, in lexicographic order. Bounded search only.
std::vector<SingularPointReport> scan_points(const ProjectivePolynomial& f, std::int64_t height_bound);

/// Caps the worker threads used by scan_points (0 restores the default,
/// std::thread::hardware_concurrency()).
void set_thread_limit(unsigned n);
unsigned thread_limit();

struct PencilFamily {
  ProjectivePolynomial f0;
  std::vector<std::pair<Rational, ProjectivePolynomial>> perturbations;  // (lambda_i, g_i)
};

/// Tagged lines `f0: POLY` and `g: POLY [; lambda=Q]`, '#' comments.
PencilFamily parse_family(std::string_view text);

/// f0 + t * sum_i lambda_i g_i.
ProjectivePolynomial pencil_fiber(const PencilFamily& family, const Rational& t);

struct FiberSummary {
  Rational t;
  ProjectivePolynomial fiber;
  std::vector<SingularPointReport> singular_points;
  std::size_t a1_nodes = 0;
  std::size_t degenerate = 0;
  bool has_a1 = false;
};

struct FamilyReport {
  std::int64_t height_bound = 0;
  std::vector<FiberSummary> fibers;
};

FamilyReport family_report(const PencilFamily& family, const std::vector<Rational>& t_samples,
                           std::int64_t height_bound);

}  // namespace lmhslab
