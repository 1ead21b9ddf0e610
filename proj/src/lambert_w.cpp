#include "lambertx/lambert_w.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "lambertx/errors.hpp"

namespace lambertx {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Seed regions, in terms of d = e*z + 1 and z.
constexpr double kSeriesSeedRegion = 0.02;
constexpr double kW0AsymptoticFrom = 3.0;
constexpr double kW0LinearBelow = 0.25;
constexpr double kWm1AsymptoticFrom = -0.02;

// Coefficients of W around the branch point as a power series in
// p = +-sqrt(2(e z + 1)).
constexpr std::array<double, 10> kBranchSeries = {
    -1.0,
    1.0,
    -1.0 / 3.0,
    11.0 / 72.0,
    -43.0 / 540.0,
    769.0 / 17280.0,
    -221.0 / 8505.0,
    680863.0 / 43545600.0,
    -1963.0 / 204120.0,
    226287557.0 / 37623398400.0,
};

std::string describe(double z, BranchId branch) {
  std::ostringstream os;
  os.precision(17);
  os << "z = " << z << " on branch " << to_string(branch);
  return os.str();
}

bool in_range(double w, BranchId branch) {
  return branch == BranchId::kW0 ? w >= -1.0 : w <= -1.0;
}

// Residual bound: the requested relative tolerance, floored at what a
// couple of ulps of perturbation in w produce in w*exp(w). The floor only
// binds for very large |z|.
double residual_bound(double z, double w, const EvalConfig& config) {
  const double requested = config.rel_tol * std::max(1.0, std::abs(z));
  const double attainable = 2.0 * kEps * std::abs(z) * (2.0 + std::abs(w));
  return std::max(requested, attainable);
}

double residual_at(double w, double z) {
  return std::abs(w * std::exp(w) - z);
}

struct Refined {
  double w;
  int steps;
};

// Interval halving on f(w) = w*exp(w) - z over a bracket known to contain
// the branch's root. f is increasing on [-1, inf) and decreasing on
// (-inf, -1].
Refined bisect_branch(double z, BranchId branch) {
  double lo, hi;
  if (branch == BranchId::kW0) {
    lo = -1.0;
    hi = z <= 0.0 ? 0.0 : std::max(1.0, std::log1p(z) + 1.0);
  } else {
    // |lo| exp(lo) < |z| holds for lo = 2 ln(-z) - 1 whenever -1/e <= z < 0.
    lo = 2.0 * std::log(-z) - 1.0;
    hi = -1.0;
  }
  const double sign = branch == BranchId::kW0 ? 1.0 : -1.0;
  int steps = 0;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++steps;
    const double f = sign * (mid * std::exp(mid) - z);
    if (f == 0.0) return {mid, steps};
    if (f < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double w = residual_at(lo, z) <= residual_at(hi, z) ? lo : hi;
  return {w, steps};
}

}  // namespace

std::string_view to_string(BranchId branch) {
  return branch == BranchId::kW0 ? "W0" : "W-1";
}

void EvalConfig::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be > 0");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!(branch_point_window >= 0.0)) {
    throw std::invalid_argument("branch_point_window must be >= 0");
  }
}

double wexp(double w) {
  if (!std::isfinite(w)) throw DomainError("wexp: argument must be finite");
  const double value = w * std::exp(w);
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os.precision(17);
    os << "wexp: overflow at w = " << w;
    throw OverflowError(os.str());
  }
  return value;
}

double branch_point_distance(double z) {
  // z + 1/e is exact in the hi part near the branch point (Sterbenz).
  return constants::kE * ((z + constants::kInvEHi) + constants::kInvELo);
}

double branch_point_series(double z, BranchId branch, int terms) {
  if (terms < 1 || terms > static_cast<int>(kBranchSeries.size())) {
    throw std::invalid_argument("branch_point_series: terms must be in 1..10");
  }
  const double d = std::max(0.0, branch_point_distance(z));
  double p = std::sqrt(2.0 * d);
  if (branch == BranchId::kWm1) p = -p;
  double acc = 0.0;
  for (int i = terms - 1; i >= 0; --i) acc = acc * p + kBranchSeries[i];
  return acc;
}

namespace {

// Checks the branch domain and returns z, clamped onto -1/e when it sits
// inside the tolerated window below the branch point.
double admit(double z, BranchId branch, const EvalConfig& config) {
  if (!std::isfinite(z)) {
    throw DomainError("W: argument must be finite, got " + describe(z, branch));
  }
  if (z < constants::kBranchPoint - config.branch_point_window) {
    throw DomainError("W: argument below -1/e, " + describe(z, branch));
  }
  if (branch == BranchId::kWm1 && z >= 0.0) {
    throw DomainError("W-1 requires z < 0, " + describe(z, branch));
  }
  return std::max(z, constants::kBranchPoint);
}

double seed(double z, BranchId branch) {
  if (branch_point_distance(z) < kSeriesSeedRegion) {
    return branch_point_series(z, branch, 4);
  }
  if (branch == BranchId::kW0) {
    if (z > kW0AsymptoticFrom) {
      const double l1 = std::log(z);
      return l1 - std::log(l1);
    }
    if (std::abs(z) <= kW0LinearBelow) return z;
    const double l = std::log1p(z);
    return std::max(-1.0, l * (1.0 - std::log1p(l) / (2.0 + l)));
  }
  if (z > kWm1AsymptoticFrom) {
    const double l1 = std::log(-z);
    return std::min(-1.0, l1 - std::log(-l1));
  }
  // Between the two W-1 asymptotic regimes the branch-point expansion is
  // still within a few tenths of the root.
  return std::min(-1.0, branch_point_series(z, branch, 4));
}

}  // namespace

double initial_guess(double z, BranchId branch, const EvalConfig& config) {
  return seed(admit(z, branch, config), branch);
}

EvalResult eval_w(double z_in, BranchId branch, const EvalConfig& config) {
  config.validate();
  const double z = admit(z_in, branch, config);

  EvalResult result;
  result.z = z;
  result.branch = branch;

  if (branch == BranchId::kW0 && z == 0.0) {
    result.w = 0.0;
    return result;
  }

  if (branch_point_distance(z) <= constants::kE * kBranchPointConcession) {
    // Ten terms are exact to well below an ulp here.
    result.w = branch_point_series(z, branch, 10);
    result.residual = residual_at(result.w, z);
    return result;
  }

  auto finish = [&](double w, int iterations) {
    result.w = w;
    result.residual = residual_at(w, z);
    result.iterations = iterations;
    if (result.residual > residual_bound(z, w, config)) {
      throw ConvergenceError("W: residual bound not met for " + describe(z, branch));
    }
    return result;
  };
  auto fall_back = [&](int iterations) {
    const Refined r = bisect_branch(z, branch);
    return finish(r.w, iterations + r.steps);
  };

  // Halley's iteration on f(w) = w e^w - z.
  double w = seed(z, branch);
  double prev_residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < config.max_iter; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double residual = std::abs(f);
    const bool converged = residual <= residual_bound(z, w, config);
    if (!converged && residual >= prev_residual) return fall_back(it);
    if (f == 0.0) return finish(w, it);

    const double wp1 = w + 1.0;
    double step;
    if (w > 1.0) {
      // Same step scaled by e^-w; e^w (w + 1) overflows long before z does.
      const double g = w - z * std::exp(-w);
      step = g / (wp1 - (w + 2.0) * g / (2.0 * wp1));
    } else {
      step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    }
    const double next = w - step;
    if (!std::isfinite(next) || !in_range(next, branch)) {
      if (converged) return finish(w, it);
      return fall_back(it + 1);
    }
    if (converged) {
      // One polishing step past the residual test: the bound is absolute for
      // |z| < 1 and alone does not pin w to full precision there.
      if (residual_at(next, z) <= residual) return finish(next, it + 1);
      return finish(w, it);
    }
    prev_residual = residual;
    w = next;
  }
  return finish(w, config.max_iter);
}

}  // namespace lambertx
