#ifndef QTRAJ_QUANTILE_HPP
#define QTRAJ_QUANTILE_HPP

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "qtraj/cpf.hpp"
#include "qtraj/density.hpp"

namespace qtraj {

/// Selects a trajectory either by its conserved left mass P or by an initial
/// position (converted to P against the t=0 frame).
struct QuantileSpec {
  std::optional<double> p;
  std::optional<double> x0;

  static QuantileSpec from_p(double p) { return {p, std::nullopt}; }
  static QuantileSpec from_x0(double x0) { return {std::nullopt, x0}; }
  void validate() const;
};

/// Ordered (t, position) samples; positions has one column per coordinate.
struct Trajectory {
  std::vector<double> times;
  Eigen::MatrixXd positions;  // rows: times, cols: coordinates
  std::vector<double> quantiles;  // conserved P per coordinate (empty if n/a)

  Eigen::Index n_samples() const { return static_cast<Eigen::Index>(times.size()); }
  Eigen::Index n_dims() const { return positions.cols(); }
};

/// Left mass at x0 against the first frame of a series (renormalized).
double p_from_x0(const DensityFrame& frame0, double x0, const CpfOptions& opts = {});

/// x_P(t) by per-frame CPF inversion at constant P.
Trajectory quantile_trajectory(const DensitySeries& series, const QuantileSpec& spec,
                               const CpfOptions& opts = {});

/// Density-only velocity -(1/rho) * int_{x_min}^{x} d(rho)/dt dx'.
/// Diagnostic realization of the probability-conservation velocity field.
double density_velocity(const DensitySeries& series, Eigen::Index frame_index, double x,
                        double velocity_floor_rel = 1e-12);

/// Independent per-axis 1D problems whose product forms the full density.
struct SeparableSystem {
  std::vector<DensitySeries> axes;
};

/// Runs quantile_trajectory per axis and stacks the coordinates.
Trajectory separable_trajectory(const SeparableSystem& system,
                                const std::vector<QuantileSpec>& specs,
                                const CpfOptions& opts = {});

}  // namespace qtraj

#endif
