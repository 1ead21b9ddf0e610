#include "lambertx/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "lambertx/compare.hpp"
#include "lambertx/errors.hpp"
#include "lambertx/format.hpp"
#include "lambertx/intersect.hpp"
#include "lambertx/lambert_w.hpp"
#include "lambertx/oracle.hpp"
#include "lambertx/plot.hpp"

namespace lambertx::cli {

namespace {

using nlohmann::ordered_json;

// Parsed into a string first so --help lists the plain names.
void add_format_option(CLI::App* cmd, OutputFormat& format) {
  cmd->add_option_function<std::string>(
         "--format",
         [&format](const std::string& name) {
           format = name == "json" ? OutputFormat::kJson
                    : name == "csv" ? OutputFormat::kCsv
                                    : OutputFormat::kPlain;
         },
         "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->default_str("plain");
}

ordered_json eval_config_json(const EvalConfig& config) {
  return {{"rel_tol", config.rel_tol},
          {"max_iter", config.max_iter},
          {"branch_point_window", config.branch_point_window}};
}

std::string json_line(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
  double z = 0.0;
  std::string branch;
  EvalConfig config;
  OutputFormat format = OutputFormat::kPlain;
};

void emit_eval(const EvalArgs& a, std::ostream& out) {
  const BranchId branch = a.branch == "0" ? BranchId::kW0 : BranchId::kWm1;
  const EvalResult r = eval_w(a.z, branch, a.config);
  switch (a.format) {
    case OutputFormat::kJson:
      out << json_line({{"command", "eval"},
                        {"z", r.z},
                        {"branch", to_string(r.branch)},
                        {"w", r.w},
                        {"residual", r.residual},
                        {"iterations", r.iterations},
                        {"config", eval_config_json(a.config)}});
      break;
    case OutputFormat::kCsv:
      out << "z,branch,w,residual,iterations\n"
          << format_number(r.z) << ',' << to_string(r.branch) << ',' << format_number(r.w)
          << ',' << format_number(r.residual) << ',' << r.iterations << '\n';
      break;
    case OutputFormat::kPlain:
      out << plain_table({{"z", format_number(r.z)},
                          {"branch", std::string(to_string(r.branch))},
                          {"w", format_number(r.w)},
                          {"residual", format_number(r.residual)},
                          {"iterations", std::to_string(r.iterations)}});
      break;
  }
}

// ---- intersect ------------------------------------------------------------

struct IntersectArgs {
  double b = 0.0;
  double class_tol = kDefaultClassTol;
  EvalConfig config;
  OutputFormat format = OutputFormat::kPlain;
};

void emit_intersect(const IntersectArgs& a, std::ostream& out) {
  const IntersectionReport rep = diagonal_intersections(Base(a.b), a.config, a.class_tol);
  switch (a.format) {
    case OutputFormat::kJson: {
      ordered_json points = ordered_json::array();
      for (const IntersectionPoint& p : rep.points) {
        points.push_back({{"x", p.x},
                          {"y", p.y},
                          {"source_branch", to_string(p.source)},
                          {"residual", p.residual}});
      }
      ordered_json config = eval_config_json(a.config);
      config["class_tol"] = a.class_tol;
      out << json_line({{"command", "intersect"},
                        {"b", rep.b.value()},
                        {"z", rep.z},
                        {"class", to_string(rep.cls)},
                        {"points", points},
                        {"config", config}});
      break;
    }
    case OutputFormat::kCsv:
      out << "b,z,class,x,y,source_branch,residual\n";
      for (const IntersectionPoint& p : rep.points) {
        out << format_number(rep.b.value()) << ',' << format_number(rep.z) << ','
            << to_string(rep.cls) << ',' << format_number(p.x) << ',' << format_number(p.y)
            << ',' << to_string(p.source) << ',' << format_number(p.residual) << '\n';
      }
      break;
    case OutputFormat::kPlain: {
      std::vector<std::pair<std::string, std::string>> rows{
          {"b", format_number(rep.b.value())},
          {"z", format_number(rep.z)},
          {"class", std::string(to_string(rep.cls))},
          {"points", std::to_string(rep.points.size())}};
      for (std::size_t i = 0; i < rep.points.size(); ++i) {
        const IntersectionPoint& p = rep.points[i];
        rows.emplace_back("x[" + std::to_string(i) + "]",
                          format_number(p.x) + "  (" + std::string(to_string(p.source)) +
                              ", residual " + format_number(p.residual) + ")");
      }
      out << plain_table(rows);
      break;
    }
  }
}

// ---- oracle ---------------------------------------------------------------

struct OracleArgs {
  double b = 0.0;
  std::optional<double> x_max;
  std::size_t samples = oracle::kDefaultSamples;
  OutputFormat format = OutputFormat::kPlain;
};

std::string join_numbers(const std::vector<double>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += format_number(xs[i]);
  }
  return s + "]";
}

void emit_oracle(const OracleArgs& a, std::ostream& out) {
  if (a.x_max && !(*a.x_max > oracle::kFullGapXMin)) {
    throw DomainError("--x-max must be positive");
  }
  const oracle::ComparisonVerdict v =
      oracle::compare_with_closed_form(Base(a.b), a.x_max, a.samples);
  switch (a.format) {
    case OutputFormat::kJson: {
      ordered_json config;
      config["x_max"] = v.x_max;
      config["samples"] = v.samples;
      config["abs_tol"] = oracle::kCompareAbsTol;
      config["x_min"] = oracle::kFullGapXMin;
      ordered_json pairs = ordered_json::array();
      for (const auto& p : v.pairs) {
        pairs.push_back(
            {{"oracle_x", p.oracle_x}, {"closed_form_x", p.closed_form_x}, {"delta", p.delta}});
      }
      out << json_line({{"command", "oracle"},
                        {"b", v.b},
                        {"class", to_string(v.cls)},
                        {"oracle_roots", v.oracle_roots},
                        {"closed_form_roots", v.closed_form_roots},
                        {"pairs", pairs},
                        {"unmatched_oracle", v.unmatched_oracle},
                        {"unmatched_closed_form", v.unmatched_closed_form},
                        {"max_delta", v.max_delta},
                        {"count_mismatch", v.count_mismatch},
                        {"config", config}});
      break;
    }
    case OutputFormat::kCsv:
      out << "kind,oracle_x,closed_form_x,delta\n";
      for (const auto& p : v.pairs) {
        out << "pair," << format_number(p.oracle_x) << ',' << format_number(p.closed_form_x)
            << ',' << format_number(p.delta) << '\n';
      }
      for (double x : v.unmatched_oracle) out << "oracle_only," << format_number(x) << ",,\n";
      for (double x : v.unmatched_closed_form) {
        out << "closed_form_only,," << format_number(x) << ",\n";
      }
      break;
    case OutputFormat::kPlain:
      out << plain_table({{"b", format_number(v.b)},
                          {"class", std::string(to_string(v.cls))},
                          {"x_max", format_number(v.x_max)},
                          {"samples", std::to_string(v.samples)},
                          {"oracle roots", join_numbers(v.oracle_roots)},
                          {"closed-form roots", join_numbers(v.closed_form_roots)},
                          {"unmatched oracle", join_numbers(v.unmatched_oracle)},
                          {"max delta", format_number(v.max_delta)},
                          {"count mismatch", v.count_mismatch ? "yes" : "no"}});
      break;
  }
}

// ---- plot -----------------------------------------------------------------

struct PlotArgs {
  std::string figure;
  int samples = 400;
  std::string out_path;
  std::optional<double> b;
  double x_min = -2.0;
  double x_max = 8.0;
  OutputFormat format = OutputFormat::kPlain;
};

void emit_plot(const PlotArgs& a, std::ostream& out) {
  std::vector<CurveSample> samples;
  if (a.figure == "custom") {
    if (!a.b) throw std::invalid_argument("plot --figure custom requires --base");
    if (!(a.x_min < a.x_max) || !(a.x_max > 0.0)) {
      throw std::invalid_argument("custom range needs x-min < x-max and x-max > 0");
    }
    const double log_lo = a.x_min > 0.0 ? a.x_min : a.x_max * 1e-3;
    samples = curve_figure_samples(
        {*a.b, {a.x_min, a.x_max}, {log_lo, a.x_max}, {a.x_min, a.x_max}}, a.samples);
  } else {
    samples = figure_samples(a.figure, a.samples);
  }

  std::ofstream file(a.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("cannot open " + a.out_path + " for writing");
  file << samples_to_csv(samples);
  file.close();
  if (!file) throw DomainError("failed writing " + a.out_path);

  switch (a.format) {
    case OutputFormat::kJson:
      out << json_line({{"command", "plot"},
                        {"figure", a.figure},
                        {"rows", samples.size()},
                        {"out", a.out_path},
                        {"config", {{"samples", a.samples}}}});
      break;
    case OutputFormat::kCsv:
      out << "figure,rows,out\n"
          << csv_field(a.figure) << ',' << samples.size() << ',' << csv_field(a.out_path)
          << '\n';
      break;
    case OutputFormat::kPlain:
      out << plain_table({{"figure", a.figure},
                          {"rows", std::to_string(samples.size())},
                          {"out", a.out_path}});
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real branches of the Lambert W function and the intersections of "
               "y = b^x with y = log_b x.\nExit codes: 0 success, 2 domain error, "
               "3 convergence failure, 64 usage error."};
  app.name("lambertx");
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate W on one real branch");
  eval_cmd->add_option("--z", ea.z, "Argument z")->required();
  eval_cmd->add_option("--branch", ea.branch, "Branch: 0 (principal) or -1")
      ->required()
      ->check(CLI::IsMember({"0", "-1"}));
  eval_cmd->add_option("--tol", ea.config.rel_tol, "Relative residual tolerance")
      ->capture_default_str();
  eval_cmd->add_option("--max-iter", ea.config.max_iter, "Halley iteration budget")
      ->capture_default_str();
  add_format_option(eval_cmd, ea.format);

  IntersectArgs ia;
  auto* intersect_cmd =
      app.add_subcommand("intersect", "Classify b and solve b^x = log_b x in closed form");
  intersect_cmd->add_option("--base", ia.b, "Base b > 0, b != 1")->required();
  intersect_cmd->add_option("--class-tol", ia.class_tol, "Relative regime snapping tolerance")
      ->capture_default_str();
  intersect_cmd->add_option("--tol", ia.config.rel_tol, "Relative residual tolerance for W")
      ->capture_default_str();
  add_format_option(intersect_cmd, ia.format);

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Compare the closed form against a brute-force scan of b^x - log_b x");
  oracle_cmd->add_option("--base", oa.b, "Base b > 0, b != 1")->required();
  oracle_cmd->add_option("--x-max", oa.x_max,
                         "Upper end of the scan (default max(50, 4 * largest closed-form root))");
  oracle_cmd->add_option("--samples", oa.samples, "Scan panels")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  add_format_option(oracle_cmd, oa.format);

  PlotArgs pa;
  auto* plot_cmd = app.add_subcommand("plot", "Write figure data as CSV (x,y,series_label)");
  plot_cmd->add_option("--figure", pa.figure, "fig1, fig2, fig3, fig4, fig5 or custom")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5", "custom"}));
  plot_cmd->add_option("--samples", pa.samples, "Points per curve")
      ->capture_default_str()
      ->check(CLI::Range(2, 10000000));
  plot_cmd->add_option("--out", pa.out_path, "Output CSV path")->required();
  plot_cmd->add_option("--base", pa.b, "Base for --figure custom");
  plot_cmd->add_option("--x-min", pa.x_min, "Left end for --figure custom")
      ->capture_default_str();
  plot_cmd->add_option("--x-max", pa.x_max, "Right end for --figure custom")
      ->capture_default_str();
  add_format_option(plot_cmd, pa.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Prints help (for --help on any subcommand) to out, diagnostics to err.
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_cmd) emit_eval(ea, out);
    if (*intersect_cmd) emit_intersect(ia, out);
    if (*oracle_cmd) emit_oracle(oa, out);
    if (*plot_cmd) emit_plot(pa, out);
  } catch (const DomainError& e) {
    err << "lambertx: domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const OverflowError& e) {
    err << "lambertx: domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const StateError& e) {
    err << "lambertx: domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "lambertx: convergence failure: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const std::invalid_argument& e) {
    err << "lambertx: usage: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace lambertx::cli
