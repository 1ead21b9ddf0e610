#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lambertx/intersect.hpp"

namespace lambertx::oracle {

inline constexpr std::size_t kDefaultSamples = 20000;
inline constexpr double kCompareAbsTol = 1e-12;

struct MatchedPair {
  double oracle_x;
  double closed_form_x;
  double delta;  // |oracle_x - closed_form_x|
};

// Outcome of checking the closed-form diagonal solutions against a
// brute-force scan of b^x = log_b x. Disagreement is data, not an error.
struct ComparisonVerdict {
  double b;
  double x_max;
  std::size_t samples;
  IntersectionClass cls;
  std::vector<double> oracle_roots;
  std::vector<double> closed_form_roots;
  std::vector<MatchedPair> pairs;
  std::vector<double> unmatched_oracle;  // e.g. off-diagonal roots
  std::vector<double> unmatched_closed_form;
  double max_delta = 0.0;
  bool count_mismatch = false;
};

// max(50, 4 * largest closed-form root).
double default_x_max(const IntersectionReport& report);

// Runs both paths for b. x_max defaults to default_x_max of the closed-form
// report. Closed-form roots are matched greedily, in ascending order, to the
// nearest unmatched oracle root.
ComparisonVerdict compare_with_closed_form(Base b, std::optional<double> x_max = std::nullopt,
                                           std::size_t n = kDefaultSamples);

}  // namespace lambertx::oracle
