#include "qtraj/bohm.hpp"

#include <cmath>
#include <sstream>

namespace qtraj {

void IntegratorConfig::validate() const {
  if (!(step > 0.0)) throw ConfigurationError("IntegratorConfig: step must be positive");
  if (record_times.size() < 2)
    throw ConfigurationError("IntegratorConfig: need at least two record times");
  for (size_t i = 1; i < record_times.size(); ++i)
    if (!(record_times[i] > record_times[i - 1]))
      throw ConfigurationError("IntegratorConfig: record times must be strictly increasing");
}

double bohm_velocity(const WavefunctionModel& model, double x, double t,
                     double density_floor) {
  const Complex psi = eval_psi(model, x, t);
  const double rho = std::norm(psi);
  if (rho <= density_floor)
    throw DegenerateDensityError("bohm_velocity: density below floor");
  const Complex dpsi = eval_dpsi_dx(model, x, t);
  const auto& constants =
      std::visit([](const auto& m) { return m.constants; }, model);
  // (hbar/2mi)(psi* dpsi - psi dpsi*) / rho reduces to this manifestly real form.
  return constants.hbar / constants.mass * std::imag(std::conj(psi) * dpsi) / rho;
}

Trajectory bohm_trajectory(const WavefunctionModel& model, double x0,
                           const IntegratorConfig& cfg) {
  cfg.validate();
  const double t0 = cfg.record_times.front();
  if (std::norm(eval_psi(model, x0, t0)) <= cfg.density_floor)
    throw DegenerateDensityError("bohm_trajectory: starting density below floor");

  Trajectory traj;
  traj.times.reserve(cfg.record_times.size());
  std::vector<double> samples;
  samples.reserve(cfg.record_times.size());
  traj.times.push_back(t0);
  samples.push_back(x0);

  auto finalize = [&](Trajectory& out) {
    out.positions.resize(static_cast<Eigen::Index>(samples.size()), 1);
    for (size_t i = 0; i < samples.size(); ++i)
      out.positions(static_cast<Eigen::Index>(i), 0) = samples[i];
  };

  double x = x0;
  for (size_t seg = 1; seg < cfg.record_times.size(); ++seg) {
    const double ta = cfg.record_times[seg - 1];
    const double tb = cfg.record_times[seg];
    const auto n_steps =
        std::max<long>(1, std::lround(std::ceil((tb - ta) / cfg.step - 1e-12)));
    const double h = (tb - ta) / static_cast<double>(n_steps);
    try {
      for (long i = 0; i < n_steps; ++i) {
        const double t = ta + h * static_cast<double>(i);
        const double k1 = bohm_velocity(model, x, t, cfg.density_floor);
        const double k2 = bohm_velocity(model, x + 0.5 * h * k1, t + 0.5 * h, cfg.density_floor);
        const double k3 = bohm_velocity(model, x + 0.5 * h * k2, t + 0.5 * h, cfg.density_floor);
        const double k4 = bohm_velocity(model, x + h * k3, t + h, cfg.density_floor);
        x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
    } catch (const DegenerateDensityError& e) {
      Trajectory partial;
      partial.times = traj.times;
      finalize(partial);
      std::ostringstream msg;
      msg << "bohm_trajectory: aborted in segment ending at t=" << tb << ": " << e.what();
      throw AbortedTrajectoryError(msg.str(), std::move(partial));
    }
    traj.times.push_back(tb);
    samples.push_back(x);
  }
  finalize(traj);
  return traj;
}

}  // namespace qtraj
