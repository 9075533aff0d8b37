#ifndef QTRAJ_EXPERIMENTS_HPP
#define QTRAJ_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qtraj/bohm.hpp"
#include "qtraj/compare.hpp"
#include "qtraj/density.hpp"
#include "qtraj/quantile.hpp"
#include "qtraj/wavefunction.hpp"

namespace qtraj {

/// Fully resolved run description: model, discretization, trajectory picks.
struct ExperimentConfig {
  std::string name;
  WavefunctionModel model;
  bool two_dimensional = false;  // per-axis copies of the same 1D model
  Grid1D grid;
  double t0 = 0.0;
  double dt = 0.1;
  double t_end = 3.0;
  std::vector<double> quantiles;              // 1D runs
  std::vector<std::vector<double>> starts;    // initial positions (1 or 2 per entry)
  DensityTolerances tolerances{};
  CpfOptions cpf{};
  double threshold = 5e-2;        // max allowed quantile-vs-Bohm deviation
  double bohm_step_divisor = 50.0;  // oracle step = dt / divisor

  Eigen::Index n_frames() const;
  std::vector<double> times() const;
};

/// One quantile trajectory with its independently integrated counterpart.
struct TrajectoryPair {
  Trajectory quantile;
  std::optional<Trajectory> bohm;
  ComparisonReport report;  // deviations empty when no counterpart exists
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrajectoryPair> pairs;
  double max_deviation = 0.0;
  double max_p_drift = 0.0;
};

/// The four reference presets: harmonic, free, two-slit, well-2d.
std::vector<std::string> preset_names();
ExperimentConfig preset(const std::string& name);

/// Runs quantile trajectories plus the Bohm oracle and comparison report.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Quantile-only run over an externally supplied density series.
ExperimentResult run_ingested(const DensitySeries& series, const ExperimentConfig& config);

}  // namespace qtraj

#endif
