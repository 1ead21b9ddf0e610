#pragma once

#include <string_view>

namespace lambertx {

// The two real branches of W, the inverse of w -> w*exp(w).
enum class BranchId {
  kW0,   // principal branch: w >= -1, z >= -1/e
  kWm1,  // lower branch:     w <= -1, -1/e <= z < 0
};

std::string_view to_string(BranchId branch);

namespace constants {
inline constexpr double kE = 2.718281828459045235360287471352662498;
inline constexpr double kInvE = 0.367879441171442321595523770161460867;
// 1/e = kInvEHi + kInvELo with kInvEHi == kInvE.
inline constexpr double kInvEHi = 0.36787944117144233;
inline constexpr double kInvELo = -1.2428753672788363e-17;
// Branch point of W: z = -1/e.
inline constexpr double kBranchPoint = -kInvE;
}  // namespace constants

struct EvalConfig {
  double rel_tol = 1e-14;
  int max_iter = 50;
  // Arguments up to this far below -1/e are treated as -1/e.
  double branch_point_window = 1e-10;

  // Throws std::invalid_argument if any field is out of range.
  void validate() const;
};

struct EvalResult {
  double z = 0.0;  // the argument actually solved for (after clamping)
  BranchId branch = BranchId::kW0;
  double w = 0.0;
  double residual = 0.0;  // |w*exp(w) - z|
  int iterations = 0;
};

// Within this distance of -1/e the inversion is square-root ill-conditioned
// and the result is validated against the branch-point series instead of
// the residual.
inline constexpr double kBranchPointConcession = 1e-6;

// w*exp(w). Throws DomainError for non-finite w and OverflowError when the
// product is not representable.
double wexp(double w);

// Starting point for the iterative inversion of w*exp(w) = z.
double initial_guess(double z, BranchId branch, const EvalConfig& config = {});

// e*z + 1 evaluated without cancellation near the branch point.
double branch_point_distance(double z);

// Truncated expansion of W around z = -1/e in p = +-sqrt(2(e z + 1)), with
// `terms` coefficients (1..10). The sign of p selects the branch.
double branch_point_series(double z, BranchId branch, int terms = 4);

// Evaluates W on the given real branch.
//
// Throws DomainError when z lies outside the branch's real domain (more than
// config.branch_point_window below -1/e, or z >= 0 for kWm1) and
// ConvergenceError when the refinement does not reach the residual bound
// within config.max_iter iterations.
EvalResult eval_w(double z, BranchId branch, const EvalConfig& config = {});

inline double lambert_w0(double z) { return eval_w(z, BranchId::kW0).w; }
inline double lambert_wm1(double z) { return eval_w(z, BranchId::kWm1).w; }

}  // namespace lambertx
