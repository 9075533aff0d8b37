#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "qtraj/density_io.hpp"
#include "qtraj/experiments.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitThreshold = 1;   // comparison exceeded the configured threshold
constexpr int kExitValidation = 2;  // bad config, bad input file, degenerate run

std::string format_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct SimulateOptions {
  std::string target;
  std::string model_name;
  std::optional<double> omega, gauss_width, slit_offset, slit_width, well_width;
  std::optional<double> dx, dt, t_max, x_min, x_max, threshold;
  std::vector<double> quantiles;
  std::vector<std::string> x0;
  std::string output = "qtraj-out";
  std::string format = "per-trajectory";
  bool linear_interpolation = false;
  double boundary_tolerance = -1.0;
  double mass_tolerance = -1.0;
};

qtraj::WavefunctionModel make_model(const SimulateOptions& opt) {
  if (opt.model_name == "harmonic") {
    qtraj::HarmonicSuperposition m;
    if (opt.omega) m.omega = *opt.omega;
    return m;
  }
  if (opt.model_name == "free") {
    qtraj::FreeGaussian m;
    if (opt.gauss_width) m.a = *opt.gauss_width;
    return m;
  }
  if (opt.model_name == "two-slit") {
    qtraj::TwoSlit m;
    if (opt.slit_offset) m.slit_offset = *opt.slit_offset;
    if (opt.slit_width) m.slit_width = *opt.slit_width;
    return m;
  }
  if (opt.model_name == "square-well") {
    qtraj::SquareWellSuperposition m;
    if (opt.well_width) m.well_width = *opt.well_width;
    return m;
  }
  throw qtraj::ConfigurationError("unknown model '" + opt.model_name + "'");
}

qtraj::ExperimentConfig build_config(const SimulateOptions& opt) {
  qtraj::ExperimentConfig cfg;
  if (opt.target == "custom") {
    if (opt.model_name.empty())
      throw qtraj::ConfigurationError("simulate custom requires --model");
    cfg.name = "custom-" + opt.model_name;
    cfg.model = make_model(opt);
    const auto defaults = qtraj::model_defaults(cfg.model);
    const double x_min = opt.x_min.value_or(defaults.x_min);
    const double x_max = opt.x_max.value_or(defaults.x_max);
    const double dx = opt.dx.value_or(defaults.dx);
    cfg.grid = qtraj::Grid1D(
        x_min, x_max,
        static_cast<Eigen::Index>(std::lround((x_max - x_min) / dx)) + 1);
    cfg.dt = opt.dt.value_or(defaults.dt);
    cfg.t_end = opt.t_max.value_or(defaults.t_end);
  } else {
    cfg = qtraj::preset(opt.target);
    // Apply overrides on top of the preset.
    if (opt.model_name.size() || opt.omega || opt.gauss_width || opt.slit_offset ||
        opt.slit_width || opt.well_width) {
      SimulateOptions model_opt = opt;
      if (model_opt.model_name.empty()) model_opt.model_name = qtraj::model_name(cfg.model);
      cfg.model = make_model(model_opt);
    }
    const double x_min = opt.x_min.value_or(cfg.grid.x_min);
    const double x_max = opt.x_max.value_or(cfg.grid.x_max);
    const double dx = opt.dx.value_or(cfg.grid.dx());
    cfg.grid = qtraj::Grid1D(
        x_min, x_max,
        static_cast<Eigen::Index>(std::lround((x_max - x_min) / dx)) + 1);
    if (opt.dt) cfg.dt = *opt.dt;
    if (opt.t_max) cfg.t_end = *opt.t_max;
  }
  if (!opt.quantiles.empty()) {
    cfg.quantiles = opt.quantiles;
    cfg.starts.clear();
  }
  if (!opt.x0.empty()) {
    cfg.quantiles.clear();
    cfg.starts.clear();
    for (const auto& entry : opt.x0) {
      std::vector<double> point;
      std::stringstream ss(entry);
      std::string field;
      while (std::getline(ss, field, ',')) point.push_back(std::stod(field));
      cfg.starts.push_back(std::move(point));
    }
  }
  if (opt.threshold) cfg.threshold = *opt.threshold;
  if (opt.boundary_tolerance >= 0.0) cfg.tolerances.boundary = opt.boundary_tolerance;
  if (opt.mass_tolerance >= 0.0) cfg.tolerances.mass = opt.mass_tolerance;
  if (opt.linear_interpolation)
    cfg.cpf.interpolation = qtraj::CpfInterpolation::Linear;
  return cfg;
}

json config_json(const qtraj::ExperimentConfig& cfg) {
  return json{{"experiment", cfg.name},
              {"model", qtraj::model_name(cfg.model)},
              {"x_min", cfg.grid.x_min},
              {"x_max", cfg.grid.x_max},
              {"dx", cfg.grid.dx()},
              {"dt", cfg.dt},
              {"t_end", cfg.t_end},
              {"n_nodes", cfg.grid.n_nodes},
              {"threshold", cfg.threshold}};
}

std::string pair_label(const qtraj::TrajectoryPair& pair) {
  std::string label;
  for (size_t d = 0; d < pair.quantile.quantiles.size(); ++d) {
    if (d) label += "_";
    label += format_label(pair.quantile.quantiles[d]);
  }
  return label;
}

int write_result(const qtraj::ExperimentResult& result, const std::string& output,
                 const std::string& format, bool has_bohm) {
  fs::create_directories(output);
  json report;
  report["parameters"] = config_json(result.config);
  if (!has_bohm) report["parameters"]["model"] = "density-file";
  report["max_deviation"] = result.max_deviation;
  report["max_p_drift"] = result.max_p_drift;
  report["trajectories"] = json::array();

  std::ofstream long_q, long_b;
  if (format == "long") {
    long_q.open(fs::path(output) / "quantile_trajectories.csv");
    long_q << "P,t";
    for (Eigen::Index d = 0; d < result.pairs.front().quantile.n_dims(); ++d)
      long_q << ',' << (d == 0 ? "x" : "y");
    long_q << "\n";
    if (has_bohm) {
      long_b.open(fs::path(output) / "bohm_trajectories.csv");
      long_b << "P,t";
      for (Eigen::Index d = 0; d < result.pairs.front().quantile.n_dims(); ++d)
        long_b << ',' << (d == 0 ? "x" : "y");
      long_b << "\n";
    }
  }

  for (const auto& pair : result.pairs) {
    const std::string label = pair_label(pair);
    json entry;
    entry["P"] = pair.quantile.quantiles;
    entry["max_deviation"] = pair.report.max_deviation;
    entry["max_p_drift"] = pair.report.max_p_drift;
    entry["deviations"] = pair.report.deviations;
    report["trajectories"].push_back(entry);

    if (format == "long") {
      auto dump = [&](std::ofstream& out, const qtraj::Trajectory& traj) {
        for (Eigen::Index k = 0; k < traj.n_samples(); ++k) {
          out << label << ',' << traj.times[static_cast<size_t>(k)];
          for (Eigen::Index d = 0; d < traj.n_dims(); ++d) out << ',' << traj.positions(k, d);
          out << "\n";
        }
      };
      dump(long_q, pair.quantile);
      if (has_bohm && pair.bohm) dump(long_b, *pair.bohm);
    } else {
      qtraj::write_trajectory_csv_file(pair.quantile,
                                       (fs::path(output) / ("quantile_" + label + ".csv")).string());
      if (pair.bohm)
        qtraj::write_trajectory_csv_file(*pair.bohm,
                                         (fs::path(output) / ("bohm_" + label + ".csv")).string());
    }
  }

  const bool passed = !has_bohm || result.max_deviation <= result.config.threshold;
  report["passed"] = passed;
  std::ofstream json_out(fs::path(output) / "report.json");
  json_out << report.dump(2) << "\n";

  std::cout << result.config.name << ": " << result.pairs.size() << " trajectories";
  if (has_bohm)
    std::cout << ", max deviation " << result.max_deviation << " (threshold "
              << result.config.threshold << ")";
  std::cout << ", max P-drift " << result.max_p_drift << "\n";
  if (!passed) {
    std::cerr << "threshold exceeded\n";
    return kExitThreshold;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantile and Bohmian trajectory toolkit"};
  app.require_subcommand(1);

  // presets list
  auto* presets = app.add_subcommand("presets", "Preset management");
  presets->require_subcommand(1);
  presets->add_subcommand("list", "List available experiment presets");

  // simulate
  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Run an experiment preset or a custom model");
  simulate->add_option("target", sim.target, "Preset name or 'custom'")->required();
  simulate->add_option("--model", sim.model_name, "Model for custom runs: harmonic|free|two-slit|square-well");
  simulate->add_option("--omega", sim.omega, "Harmonic frequency");
  simulate->add_option("--gauss-width", sim.gauss_width, "Free-Gaussian width parameter a");
  simulate->add_option("--slit-offset", sim.slit_offset, "Two-slit half separation");
  simulate->add_option("--slit-width", sim.slit_width, "Two-slit initial packet width");
  simulate->add_option("--well-width", sim.well_width, "Square-well width L");
  simulate->add_option("--dx", sim.dx, "Grid spacing");
  simulate->add_option("--dt", sim.dt, "Time step");
  simulate->add_option("--t-max", sim.t_max, "Final time");
  simulate->add_option("--x-min", sim.x_min, "Grid lower bound");
  simulate->add_option("--x-max", sim.x_max, "Grid upper bound");
  simulate->add_option("--quantiles", sim.quantiles, "Quantile values in (0,1)")->delimiter(',');
  simulate->add_option("--x0", sim.x0, "Initial position (repeatable; 'x,y' for 2D)");
  simulate->add_option("--output", sim.output, "Output directory");
  simulate->add_option("--format", sim.format, "per-trajectory | long")
      ->check(CLI::IsMember({"per-trajectory", "long"}));
  simulate->add_option("--threshold", sim.threshold, "Max allowed quantile-vs-Bohm deviation");
  simulate->add_flag("--linear", sim.linear_interpolation,
                     "Linear CPF interpolation instead of the trapezoid-top quadratic");
  simulate->add_option("--boundary-tolerance", sim.boundary_tolerance,
                       "Relative boundary-density tolerance");
  simulate->add_option("--mass-tolerance", sim.mass_tolerance, "Relative mass-drift tolerance");

  // compare
  std::string cmp_a, cmp_b;
  double cmp_threshold = 5e-2;
  std::string cmp_report;
  auto* cmp = app.add_subcommand("compare", "Compare two trajectory CSV files");
  cmp->add_option("first", cmp_a, "Trajectory CSV")->required();
  cmp->add_option("second", cmp_b, "Trajectory CSV")->required();
  cmp->add_option("--threshold", cmp_threshold, "Max allowed deviation");
  cmp->add_option("--output", cmp_report, "Report JSON path (default: stdout only)");

  // ingest
  std::string ingest_path;
  SimulateOptions ing;
  auto* ingest = app.add_subcommand("ingest", "Quantile trajectories from a density CSV");
  ingest->add_option("file", ingest_path, "Density series CSV")->required();
  ingest->add_option("--quantiles", ing.quantiles, "Quantile values in (0,1)")->delimiter(',');
  ingest->add_option("--x0", ing.x0, "Initial position (repeatable)");
  ingest->add_option("--output", ing.output, "Output directory");
  ingest->add_option("--format", ing.format, "per-trajectory | long")
      ->check(CLI::IsMember({"per-trajectory", "long"}));
  ingest->add_flag("--linear", ing.linear_interpolation,
                   "Linear CPF interpolation instead of the trapezoid-top quadratic");
  ingest->add_option("--boundary-tolerance", ing.boundary_tolerance,
                     "Relative boundary-density tolerance");
  ingest->add_option("--mass-tolerance", ing.mass_tolerance, "Relative mass-drift tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (presets->parsed()) {
      for (const auto& name : qtraj::preset_names()) std::cout << name << "\n";
      return kExitOk;
    }
    if (simulate->parsed()) {
      const auto cfg = build_config(sim);
      const auto result = qtraj::run_experiment(cfg);
      return write_result(result, sim.output, sim.format, /*has_bohm=*/true);
    }
    if (cmp->parsed()) {
      const auto a = qtraj::read_trajectory_csv_file(cmp_a);
      const auto b = qtraj::read_trajectory_csv_file(cmp_b);
      const auto report = qtraj::compare(a, b);
      json out{{"max_deviation", report.max_deviation},
               {"threshold", cmp_threshold},
               {"passed", report.max_deviation <= cmp_threshold},
               {"deviations", report.deviations}};
      if (!cmp_report.empty()) {
        std::ofstream f(cmp_report);
        f << out.dump(2) << "\n";
      }
      std::cout << "max deviation " << report.max_deviation << " (threshold "
                << cmp_threshold << ")\n";
      return report.max_deviation <= cmp_threshold ? kExitOk : kExitThreshold;
    }
    if (ingest->parsed()) {
      qtraj::DensityTolerances tol;
      if (ing.boundary_tolerance >= 0.0) tol.boundary = ing.boundary_tolerance;
      if (ing.mass_tolerance >= 0.0) tol.mass = ing.mass_tolerance;
      const auto series = qtraj::ingest_series_file(ingest_path, tol);
      qtraj::ExperimentConfig cfg;
      cfg.name = "ingested";
      cfg.grid = series.grid();
      cfg.dt = series.dt();
      cfg.t0 = series.frame(0).t;
      cfg.t_end = series.frame(series.n_frames() - 1).t;
      cfg.tolerances = tol;
      if (ing.linear_interpolation) cfg.cpf.interpolation = qtraj::CpfInterpolation::Linear;
      cfg.quantiles = ing.quantiles;
      for (const auto& entry : ing.x0) cfg.starts.push_back({std::stod(entry)});
      if (cfg.quantiles.empty() && cfg.starts.empty())
        cfg.quantiles = {0.1, 0.25, 0.5, 0.75, 0.9};
      const auto result = qtraj::run_ingested(series, cfg);
      return write_result(result, ing.output, ing.format, /*has_bohm=*/false);
    }
  } catch (const qtraj::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
