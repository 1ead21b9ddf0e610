#pragma once

#include <string_view>
#include <vector>

#include "lambertx/lambert_w.hpp"

namespace lambertx {

// Base b of the exponential y = b^x: positive, finite, and not 1.
class Base {
 public:
  // Throws DomainError for b <= 0, b == 1 or non-finite b.
  explicit Base(double b);

  double value() const { return b_; }

 private:
  double b_;
};

// e^(1/e), the tangency base.
inline constexpr double kTangencyBase = 1.4446678610097661;

// Default relative tolerance for snapping b onto 1 (rejected) or e^(1/e).
inline constexpr double kDefaultClassTol = 1e-9;

enum class IntersectionClass {
  kUniqueDiagonal,  // 0 < b < 1
  kTwoPoints,       // 1 < b < e^(1/e)
  kTangent,         // b == e^(1/e)
  kNoIntersection,  // b > e^(1/e)
};

std::string_view to_string(IntersectionClass cls);

// Which solution of w e^w = -ln b a point came from.
enum class PointSource { kW0, kWm1, kTangency };

std::string_view to_string(PointSource source);

// A common point of y = b^x and y = log_b x on the diagonal y = x.
struct IntersectionPoint {
  double x = 0.0;
  double y = 0.0;
  PointSource source = PointSource::kW0;
  double residual = 0.0;  // |b^x - x|
};

struct IntersectionReport {
  Base b;
  double z;  // -ln b
  IntersectionClass cls;
  std::vector<IntersectionPoint> points;  // ascending in x
};

// -ln b: positive for b < 1, negative for b > 1.
double base_to_z(Base b);

// Throws DomainError when b lies within class_tol (relative) of 1.
IntersectionClass classify_base(Base b, double class_tol = kDefaultClassTol);

// Diagonal solutions of b^x = x, i.e. x = W(-ln b) / (-ln b) on the branch(es)
// admitted by the regime of b.
IntersectionReport diagonal_intersections(Base b, const EvalConfig& config = {},
                                          double class_tol = kDefaultClassTol);

// Slope (ln b) b^e of y = b^x at x = e. Equals 1 exactly when b = e^(1/e).
double tangency_slope(double b);

// tangency_slope for a base in the Tangent regime; StateError otherwise.
double tangency_certificate(Base b, double class_tol = kDefaultClassTol);

}  // namespace lambertx
