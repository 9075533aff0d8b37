#include "qtraj/quantile.hpp"

#include <cmath>
#include <sstream>

namespace qtraj {

void QuantileSpec::validate() const {
  if (p.has_value() == x0.has_value())
    throw ConfigurationError("QuantileSpec: exactly one of P or x0 must be set");
  if (p && (!std::isfinite(*p) || *p <= 0.0 || *p >= 1.0))
    throw RangeError("QuantileSpec: P must lie in (0, 1)");
  if (x0 && !std::isfinite(*x0)) throw RangeError("QuantileSpec: x0 must be finite");
}

double p_from_x0(const DensityFrame& frame0, double x0, const CpfOptions& opts) {
  if (!frame0.grid.contains(x0)) throw RangeError("p_from_x0: x0 outside grid");
  const Eigen::Index k = frame0.grid.segment_of(x0);
  const double peak = frame0.values.maxCoeff();
  if (frame0.values(k) <= 1e-12 * peak && frame0.values(k + 1) <= 1e-12 * peak)
    throw DegenerateDensityError("p_from_x0: x0 lies in a zero-density region");
  CpfOptions renorm = opts;
  renorm.renormalize = true;
  const double p = cpf_at(build_cpf(frame0), x0, renorm);
  if (p <= 0.0 || p >= 1.0)
    throw DegenerateDensityError("p_from_x0: x0 carries no interior mass");
  return p;
}

namespace {

double resolve_p(const DensitySeries& series, const QuantileSpec& spec,
                 const CpfOptions& opts) {
  spec.validate();
  if (spec.p) return *spec.p;
  return p_from_x0(series.frame(0), *spec.x0, opts);
}

}  // namespace

Trajectory quantile_trajectory(const DensitySeries& series, const QuantileSpec& spec,
                               const CpfOptions& opts) {
  const double p = resolve_p(series, spec, opts);
  Trajectory traj;
  traj.times = series.times();
  traj.positions.resize(series.n_frames(), 1);
  traj.quantiles = {p};
  for (Eigen::Index k = 0; k < series.n_frames(); ++k) {
    try {
      traj.positions(k, 0) = invert_cpf(build_cpf(series.frame(k)), p, opts);
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "quantile_trajectory: frame " << k << " (t=" << series.frame(k).t
          << "): " << e.what();
      throw ConfigurationError(msg.str());
    }
  }
  return traj;
}

double density_velocity(const DensitySeries& series, Eigen::Index frame_index, double x,
                        double velocity_floor_rel) {
  const Grid1D& grid = series.grid();
  if (!grid.contains(x)) throw RangeError("density_velocity: x outside grid");
  const Eigen::ArrayXd& rho = series.frame(frame_index).values;
  const Eigen::Index k = grid.segment_of(x);
  const double dx = grid.dx();
  const double s = x - grid.node(k);
  const double rho_x = rho(k) + (rho(k + 1) - rho(k)) * s / dx;
  const double floor = velocity_floor_rel * rho.maxCoeff();
  if (rho_x <= floor)
    throw DegenerateDensityError("density_velocity: density below floor at x");

  const Eigen::ArrayXd drho_dt = time_derivative(series, frame_index);
  // Trapezoid up to node k, then the partial cell with linearly interpolated integrand.
  double integral = 0.0;
  for (Eigen::Index j = 1; j <= k; ++j)
    integral += dx * 0.5 * (drho_dt(j - 1) + drho_dt(j));
  const double d_at_x = drho_dt(k) + (drho_dt(k + 1) - drho_dt(k)) * s / dx;
  integral += s * 0.5 * (drho_dt(k) + d_at_x);
  return -integral / rho_x;
}

Trajectory separable_trajectory(const SeparableSystem& system,
                                const std::vector<QuantileSpec>& specs,
                                const CpfOptions& opts) {
  if (system.axes.empty()) throw ConfigurationError("separable_trajectory: no axes");
  if (specs.size() != system.axes.size())
    throw ConfigurationError("separable_trajectory: one spec per axis required");

  const std::vector<double> times = system.axes.front().times();
  for (const auto& axis : system.axes) {
    const auto axis_times = axis.times();
    if (axis_times.size() != times.size())
      throw ConfigurationError("separable_trajectory: axes have different time grids");
    for (size_t i = 0; i < times.size(); ++i)
      if (std::abs(axis_times[i] - times[i]) > 1e-12 * std::max(1.0, std::abs(times[i])))
        throw ConfigurationError("separable_trajectory: axes have different time grids");
  }

  Trajectory traj;
  traj.times = times;
  traj.positions.resize(static_cast<Eigen::Index>(times.size()),
                        static_cast<Eigen::Index>(system.axes.size()));
  for (size_t axis = 0; axis < system.axes.size(); ++axis) {
    Trajectory one = quantile_trajectory(system.axes[axis], specs[axis], opts);
    traj.positions.col(static_cast<Eigen::Index>(axis)) = one.positions.col(0);
    traj.quantiles.push_back(one.quantiles.front());
  }
  return traj;
}

}  // namespace qtraj
