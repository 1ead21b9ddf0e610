#pragma once

// Brute-force root finding used to cross-check the closed-form results.
// Nothing here depends on the Lambert W evaluation; the only primitives are
// exp, log, pow and arithmetic.

#include <cstddef>
#include <vector>

namespace lambertx::oracle {

enum class FnKind {
  kWResidual,    // f(w) = w e^w - z
  kDiagonalGap,  // g(x) = b^x - x
  kFullGap,      // h(x) = b^x - log_b x, x > 0
};

struct ScalarFnSpec {
  FnKind kind;
  double param;  // z for kWResidual, b otherwise

  static ScalarFnSpec w_residual(double z) { return {FnKind::kWResidual, z}; }
  static ScalarFnSpec diagonal_gap(double b) { return {FnKind::kDiagonalGap, b}; }
  static ScalarFnSpec full_gap(double b) { return {FnKind::kFullGap, b}; }

  double operator()(double x) const;
};

struct RootBracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;

  bool valid() const;
};

struct ScanResult {
  std::vector<RootBracket> brackets;  // ascending
  std::size_t skipped_panels = 0;     // panels touching a non-finite value
};

// Evaluates spec on n + 1 uniform nodes over [lo, hi] and returns one bracket
// per sign change between adjacent nodes. A node where the function is
// exactly zero yields the degenerate bracket [x, x].
ScanResult scan_sign_changes(const ScalarFnSpec& spec, double lo, double hi, std::size_t n);

// Interval halving until the bracket is narrower than abs_tol (or cannot be
// split further). Returns whichever of the final midpoint and endpoints has
// the smallest |f|.
double bisect(const ScalarFnSpec& spec, const RootBracket& bracket, double abs_tol);

struct GridMinimum {
  double x;
  double abs_value;
};

// Node of the uniform (n + 1)-point grid where |f| is smallest. Used where a
// double root leaves no sign change to bracket.
GridMinimum min_abs_on_grid(const ScalarFnSpec& spec, double lo, double hi, std::size_t n);

// Lower end of the scan window for b^x = log_b x.
inline constexpr double kFullGapXMin = 1e-9;

// All roots of b^x = log_b x on [kFullGapXMin, x_max] visible at scan
// resolution n, ascending, with roots closer than 10 * abs_tol merged.
std::vector<double> all_intersections_numeric(double b, double x_max, std::size_t n,
                                              double abs_tol);

}  // namespace lambertx::oracle
