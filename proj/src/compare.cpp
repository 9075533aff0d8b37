#include "qtraj/compare.hpp"

#include <cmath>

namespace qtraj {

ComparisonReport compare(const Trajectory& quantile_traj, const Trajectory& other) {
  if (quantile_traj.n_samples() != other.n_samples() ||
      quantile_traj.n_dims() != other.n_dims())
    throw ConfigurationError("compare: trajectories have different shapes");
  for (size_t i = 0; i < quantile_traj.times.size(); ++i)
    if (std::abs(quantile_traj.times[i] - other.times[i]) >
        1e-9 * std::max(1.0, std::abs(quantile_traj.times[i])))
      throw ConfigurationError("compare: recorded time grids differ");

  ComparisonReport report;
  report.deviations.reserve(quantile_traj.times.size());
  for (Eigen::Index k = 0; k < quantile_traj.n_samples(); ++k) {
    const double dev = (quantile_traj.positions.row(k) - other.positions.row(k)).norm();
    if (!std::isfinite(dev)) throw InvalidInputError("compare: non-finite deviation");
    report.deviations.push_back(dev);
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  return report;
}

std::vector<double> p_drift_series(const DensitySeries& series, const Trajectory& traj,
                                   const CpfOptions& opts) {
  if (traj.n_dims() != 1) throw ConfigurationError("p_drift_series: 1D trajectories only");
  if (traj.quantiles.empty()) throw ConfigurationError("p_drift_series: trajectory has no P");
  if (traj.n_samples() != series.n_frames())
    throw ConfigurationError("p_drift_series: trajectory and series length differ");
  const double p = traj.quantiles.front();
  std::vector<double> drift;
  drift.reserve(traj.times.size());
  for (Eigen::Index k = 0; k < traj.n_samples(); ++k) {
    const CpfTable table = build_cpf(series.frame(k));
    drift.push_back(std::abs(cpf_at(table, traj.positions(k, 0), opts) - p));
  }
  return drift;
}

}  // namespace qtraj
