#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lambertx::cli {

struct CurveSample {
  double x;
  double y;
  std::string series_label;  // "exp", "log", "bisectrix", "curve", "root", "point"
};

struct Range {
  double lo;
  double hi;
};

// Plot layout for y = b^x, y = log_b x and the bisectrix.
struct CurveFigure {
  double b;
  Range exp_range;
  Range log_range;  // lo > 0
  Range bisectrix_range;
};

// Named figures: fig1 (b = e), fig3 (b = 0.8), fig4 (b = 1.3),
// fig5 (b = e^(1/e)). fig2 is the z = w e^w curve and has no CurveFigure.
std::optional<CurveFigure> named_curve_figure(const std::string& name);

bool is_known_figure(const std::string& name);

// Samples for one figure; `samples` points per continuous series.
std::vector<CurveSample> curve_figure_samples(const CurveFigure& fig, int samples);
std::vector<CurveSample> wexp_figure_samples(int samples);
std::vector<CurveSample> figure_samples(const std::string& name, int samples);

// CSV with header x,y,series_label and '\n' line endings.
std::string samples_to_csv(const std::vector<CurveSample>& samples);

}  // namespace lambertx::cli
