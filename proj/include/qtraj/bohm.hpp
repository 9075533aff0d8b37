#ifndef QTRAJ_BOHM_HPP
#define QTRAJ_BOHM_HPP

#include <vector>

#include "qtraj/quantile.hpp"
#include "qtraj/wavefunction.hpp"

namespace qtraj {

/// Fixed-step RK4 configuration for the guidance-law integrator.
struct IntegratorConfig {
  double step = 1e-3;
  std::vector<double> record_times;  // strictly increasing; first is the start time
  /// Absolute density below which the velocity field counts as degenerate.
  double density_floor = 1e-14;

  void validate() const;
};

/// Thrown when a trajectory enters a degenerate-density region; carries the
/// samples integrated so far.
struct AbortedTrajectoryError : Error {
  AbortedTrajectoryError(const std::string& what, Trajectory partial_traj)
      : Error(what), partial(std::move(partial_traj)) {}
  Trajectory partial;
};

/// Guidance-law velocity (hbar / m) Im(psi* dpsi/dx) / |psi|^2.
double bohm_velocity(const WavefunctionModel& model, double x, double t,
                     double density_floor = 1e-14);

/// RK4 integration of xdot = bohm_velocity from the first record time.
Trajectory bohm_trajectory(const WavefunctionModel& model, double x0,
                           const IntegratorConfig& cfg);

}  // namespace qtraj

#endif
