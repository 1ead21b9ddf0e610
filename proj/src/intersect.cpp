#include "lambertx/intersect.hpp"

#include <cmath>
#include <sstream>

#include "lambertx/errors.hpp"

namespace lambertx {

namespace {

std::string format_base(double b) {
  std::ostringstream os;
  os.precision(17);
  os << b;
  return os.str();
}

IntersectionPoint make_point(double b, double x, PointSource source) {
  return {x, x, source, std::abs(std::pow(b, x) - x)};
}

}  // namespace

Base::Base(double b) : b_(b) {
  if (!std::isfinite(b) || !(b > 0.0)) {
    throw DomainError("base must be positive and finite, got " + format_base(b));
  }
  if (b == 1.0) throw DomainError("base must differ from 1");
}

std::string_view to_string(IntersectionClass cls) {
  switch (cls) {
    case IntersectionClass::kUniqueDiagonal: return "UniqueDiagonal";
    case IntersectionClass::kTwoPoints: return "TwoPoints";
    case IntersectionClass::kTangent: return "Tangent";
    case IntersectionClass::kNoIntersection: return "NoIntersection";
  }
  return "?";
}

std::string_view to_string(PointSource source) {
  switch (source) {
    case PointSource::kW0: return "W0";
    case PointSource::kWm1: return "W-1";
    case PointSource::kTangency: return "tangency";
  }
  return "?";
}

double base_to_z(Base b) { return -std::log(b.value()); }

IntersectionClass classify_base(Base b, double class_tol) {
  const double v = b.value();
  if (std::abs(v - 1.0) <= class_tol * v) {
    throw DomainError("base " + format_base(v) + " is within tolerance of 1");
  }
  if (v < 1.0) return IntersectionClass::kUniqueDiagonal;
  if (std::abs(v - kTangencyBase) <= class_tol * v) return IntersectionClass::kTangent;
  return v < kTangencyBase ? IntersectionClass::kTwoPoints
                           : IntersectionClass::kNoIntersection;
}

IntersectionReport diagonal_intersections(Base b, const EvalConfig& config,
                                          double class_tol) {
  const IntersectionClass cls = classify_base(b, class_tol);
  const double z = base_to_z(b);
  const double v = b.value();
  IntersectionReport report{b, z, cls, {}};

  switch (cls) {
    case IntersectionClass::kUniqueDiagonal: {
      const double w = eval_w(z, BranchId::kW0, config).w;
      report.points.push_back(make_point(v, w / z, PointSource::kW0));
      break;
    }
    case IntersectionClass::kTwoPoints: {
      // W0 >= -1 >= W-1 and z < 0, so the W0 point has the smaller abscissa.
      const double w0 = eval_w(z, BranchId::kW0, config).w;
      const double wm1 = eval_w(z, BranchId::kWm1, config).w;
      report.points.push_back(make_point(v, w0 / z, PointSource::kW0));
      report.points.push_back(make_point(v, wm1 / z, PointSource::kWm1));
      break;
    }
    case IntersectionClass::kTangent:
      report.points.push_back(make_point(v, constants::kE, PointSource::kTangency));
      break;
    case IntersectionClass::kNoIntersection:
      break;
  }
  return report;
}

double tangency_slope(double b) { return std::log(b) * std::pow(b, constants::kE); }

double tangency_certificate(Base b, double class_tol) {
  if (classify_base(b, class_tol) != IntersectionClass::kTangent) {
    throw StateError("tangency certificate requested for non-tangent base " +
                     format_base(b.value()));
  }
  return tangency_slope(b.value());
}

}  // namespace lambertx
