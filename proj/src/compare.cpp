#include "lambertx/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lambertx/oracle.hpp"

namespace lambertx::oracle {

double default_x_max(const IntersectionReport& report) {
  double x_max = 50.0;
  for (const IntersectionPoint& p : report.points) x_max = std::max(x_max, 4.0 * p.x);
  return x_max;
}

ComparisonVerdict compare_with_closed_form(Base b, std::optional<double> x_max, std::size_t n) {
  const IntersectionReport report = diagonal_intersections(b);

  ComparisonVerdict v;
  v.b = b.value();
  v.x_max = x_max.value_or(default_x_max(report));
  v.samples = n;
  v.cls = report.cls;
  v.oracle_roots = all_intersections_numeric(b.value(), v.x_max, n, kCompareAbsTol);
  for (const IntersectionPoint& p : report.points) v.closed_form_roots.push_back(p.x);

  std::vector<bool> taken(v.oracle_roots.size(), false);
  for (double cf : v.closed_form_roots) {
    std::size_t best = taken.size();
    double best_delta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.oracle_roots.size(); ++i) {
      if (taken[i]) continue;
      const double d = std::abs(v.oracle_roots[i] - cf);
      if (d < best_delta) {
        best = i;
        best_delta = d;
      }
    }
    if (best == taken.size()) {
      v.unmatched_closed_form.push_back(cf);
      continue;
    }
    taken[best] = true;
    v.pairs.push_back({v.oracle_roots[best], cf, best_delta});
    v.max_delta = std::max(v.max_delta, best_delta);
  }
  for (std::size_t i = 0; i < taken.size(); ++i) {
    if (!taken[i]) v.unmatched_oracle.push_back(v.oracle_roots[i]);
  }
  v.count_mismatch = v.oracle_roots.size() != v.closed_form_roots.size();
  return v;
}

}  // namespace lambertx::oracle
