#include "lambertx/plot.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lambertx/format.hpp"
#include "lambertx/intersect.hpp"
#include "lambertx/lambert_w.hpp"

namespace lambertx::cli {

namespace {

// Plot windows follow the axes of the original figures.
const CurveFigure kFig1{constants::kE, {-6.0, 1.5}, {0.05, 8.0}, {-3.0, 4.0}};
const CurveFigure kFig3{0.8, {-2.0, 6.2}, {0.2, 7.0}, {-2.0, 4.0}};
const CurveFigure kFig4{1.3, {-3.0, 14.0}, {0.6, 11.0}, {-2.0, 12.0}};
const CurveFigure kFig5{kTangencyBase, {-6.0, 6.0}, {0.5, 5.0}, {-2.0, 5.0}};

constexpr Range kWexpRange{-6.0, 1.5};

template <typename Fn>
void append_series(std::vector<CurveSample>& out, Range r, int samples, const char* label,
                   Fn&& fn) {
  for (int i = 0; i < samples; ++i) {
    const double t = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
    const double x = i == samples - 1 ? r.hi : r.lo + (r.hi - r.lo) * t;
    const double y = fn(x);
    if (std::isfinite(x) && std::isfinite(y)) out.push_back({x, y, label});
  }
}

}  // namespace

bool is_known_figure(const std::string& name) {
  return name == "fig1" || name == "fig2" || name == "fig3" || name == "fig4" ||
         name == "fig5";
}

std::optional<CurveFigure> named_curve_figure(const std::string& name) {
  if (name == "fig1") return kFig1;
  if (name == "fig3") return kFig3;
  if (name == "fig4") return kFig4;
  if (name == "fig5") return kFig5;
  return std::nullopt;
}

std::vector<CurveSample> curve_figure_samples(const CurveFigure& fig, int samples) {
  if (samples < 2) throw std::invalid_argument("samples must be >= 2");
  if (!(fig.log_range.lo > 0.0)) throw std::invalid_argument("log range must start above 0");
  const Base base(fig.b);
  const double ln_b = std::log(fig.b);

  std::vector<CurveSample> out;
  append_series(out, fig.exp_range, samples, "exp",
                [&](double x) { return std::pow(fig.b, x); });
  append_series(out, fig.log_range, samples, "log",
                [&](double x) { return std::log(x) / ln_b; });
  append_series(out, fig.bisectrix_range, samples, "bisectrix", [](double x) { return x; });
  for (const IntersectionPoint& p : diagonal_intersections(base).points) {
    out.push_back({p.x, p.y, "point"});
  }
  return out;
}

std::vector<CurveSample> wexp_figure_samples(int samples) {
  if (samples < 2) throw std::invalid_argument("samples must be >= 2");
  std::vector<CurveSample> out;
  append_series(out, kWexpRange, samples, "curve", [](double w) { return wexp(w); });
  // Roots of w e^w = z on the two level lines of the figure, ascending in w.
  const double wm1 = lambert_wm1(-0.25);
  const double w0_neg = lambert_w0(-0.25);
  const double w0_pos = lambert_w0(2.5);
  out.push_back({wm1, -0.25, "root"});
  out.push_back({w0_neg, -0.25, "root"});
  out.push_back({w0_pos, 2.5, "root"});
  out.push_back({-1.0, constants::kBranchPoint, "point"});
  return out;
}

std::vector<CurveSample> figure_samples(const std::string& name, int samples) {
  if (name == "fig2") return wexp_figure_samples(samples);
  const auto fig = named_curve_figure(name);
  if (!fig) throw std::invalid_argument("unknown figure: " + name);
  return curve_figure_samples(*fig, samples);
}

std::string samples_to_csv(const std::vector<CurveSample>& samples) {
  std::string out = "x,y,series_label\n";
  for (const CurveSample& s : samples) {
    out += format_number(s.x);
    out += ',';
    out += format_number(s.y);
    out += ',';
    out += csv_field(s.series_label);
    out += '\n';
  }
  return out;
}

}  // namespace lambertx::cli
