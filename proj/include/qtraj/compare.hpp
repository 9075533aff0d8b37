#ifndef QTRAJ_COMPARE_HPP
#define QTRAJ_COMPARE_HPP

#include <vector>

#include "qtraj/quantile.hpp"

namespace qtraj {

/// Per-time deviation between a quantile trajectory and its counterpart.
struct ComparisonReport {
  std::vector<double> deviations;  // euclidean per recorded time
  double max_deviation = 0.0;
  std::vector<double> p_drift;  // |cpf_at(x(t)) - P| per time, when available
  double max_p_drift = 0.0;
};

/// Deviations require identical recorded time grids.
ComparisonReport compare(const Trajectory& quantile_traj, const Trajectory& other);

/// |cpf_at(table_t, x(t)) - P| per frame for a 1D trajectory over its series.
std::vector<double> p_drift_series(const DensitySeries& series, const Trajectory& traj,
                                   const CpfOptions& opts = {});

}  // namespace qtraj

#endif
