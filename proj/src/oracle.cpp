#include "lambertx/oracle.hpp"

#include <cmath>
#include <limits>

#include "lambertx/errors.hpp"

namespace lambertx::oracle {

double ScalarFnSpec::operator()(double x) const {
  switch (kind) {
    case FnKind::kWResidual:
      return x * std::exp(x) - param;
    case FnKind::kDiagonalGap:
      return std::pow(param, x) - x;
    case FnKind::kFullGap:
      return std::pow(param, x) - std::log(x) / std::log(param);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

bool RootBracket::valid() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) return false;
  if (f_lo == 0.0 || f_hi == 0.0) return true;
  return lo < hi && ((f_lo < 0.0) != (f_hi < 0.0));
}

namespace {

void check_interval(const ScalarFnSpec& spec, double lo, double hi, std::size_t n) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("scan interval must satisfy lo < hi");
  }
  if (n < 2) throw DomainError("scan needs at least 2 panels");
  if (spec.kind == FnKind::kFullGap && !(lo > 0.0)) {
    throw DomainError("b^x - log_b x is only defined for x > 0");
  }
  if (spec.kind != FnKind::kWResidual && (!(spec.param > 0.0) || spec.param == 1.0)) {
    throw DomainError("base must be positive and differ from 1");
  }
}

double node(double lo, double hi, std::size_t i, std::size_t n) {
  if (i == n) return hi;
  return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n));
}

}  // namespace

ScanResult scan_sign_changes(const ScalarFnSpec& spec, double lo, double hi, std::size_t n) {
  check_interval(spec, lo, hi, n);
  ScanResult out;
  double x_prev = node(lo, hi, 0, n);
  double f_prev = spec(x_prev);
  if (f_prev == 0.0) out.brackets.push_back({x_prev, x_prev, 0.0, 0.0});
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = node(lo, hi, i, n);
    const double f = spec(x);
    if (!std::isfinite(f) || !std::isfinite(f_prev)) {
      ++out.skipped_panels;
    } else if (f == 0.0) {
      out.brackets.push_back({x, x, 0.0, 0.0});
    } else if (f_prev != 0.0 && ((f < 0.0) != (f_prev < 0.0))) {
      out.brackets.push_back({x_prev, x, f_prev, f});
    }
    x_prev = x;
    f_prev = f;
  }
  return out;
}

double bisect(const ScalarFnSpec& spec, const RootBracket& bracket, double abs_tol) {
  if (!bracket.valid()) throw DomainError("bisect: bracket does not straddle a sign change");
  if (!(abs_tol > 0.0)) throw DomainError("bisect: abs_tol must be > 0");
  if (bracket.f_lo == 0.0) return bracket.lo;
  if (bracket.f_hi == 0.0) return bracket.hi;

  double lo = bracket.lo, hi = bracket.hi;
  double f_lo = bracket.f_lo, f_hi = bracket.f_hi;
  const bool lo_negative = f_lo < 0.0;
  while (hi - lo >= abs_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = spec(mid);
    if (f == 0.0) return mid;
    if ((f < 0.0) == lo_negative) {
      lo = mid;
      f_lo = f;
    } else {
      hi = mid;
      f_hi = f;
    }
  }
  const double mid = 0.5 * (lo + hi);
  double best = mid;
  double best_abs = std::abs(spec(mid));
  if (!(best_abs <= std::abs(f_lo))) {
    best = lo;
    best_abs = std::abs(f_lo);
  }
  if (std::abs(f_hi) < best_abs) best = hi;
  return best;
}

GridMinimum min_abs_on_grid(const ScalarFnSpec& spec, double lo, double hi, std::size_t n) {
  check_interval(spec, lo, hi, n);
  GridMinimum best{lo, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = node(lo, hi, i, n);
    const double a = std::abs(spec(x));
    if (a < best.abs_value) best = {x, a};
  }
  return best;
}

std::vector<double> all_intersections_numeric(double b, double x_max, std::size_t n,
                                              double abs_tol) {
  if (!(x_max > kFullGapXMin)) throw DomainError("x_max must exceed the scan floor");
  const ScalarFnSpec spec = ScalarFnSpec::full_gap(b);
  const ScanResult scan = scan_sign_changes(spec, kFullGapXMin, x_max, n);
  std::vector<double> roots;
  for (const RootBracket& br : scan.brackets) {
    const double r = bisect(spec, br, abs_tol);
    if (!roots.empty() && r - roots.back() < 10.0 * abs_tol) continue;
    roots.push_back(r);
  }
  return roots;
}

}  // namespace lambertx::oracle
