#include "qtraj/density.hpp"

#include <cmath>
#include <sstream>

namespace qtraj {

double trapezoid_mass(const Eigen::ArrayXd& values, double dx) {
  const auto n = values.size();
  if (n < 2) return 0.0;
  return dx * (values.sum() - 0.5 * (values(0) + values(n - 1)));
}

DensityFrame::DensityFrame(Grid1D g, double time, Eigen::ArrayXd v,
                           const DensityTolerances& tol)
    : grid(g), t(time), values(std::move(v)) {
  if (values.size() != grid.n_nodes)
    throw InvalidInputError("DensityFrame: value count does not match grid");
  if (!values.isFinite().all()) throw InvalidDensityError("DensityFrame: non-finite value");
  if ((values < 0.0).any()) throw InvalidDensityError("DensityFrame: negative value");
  const double peak = values.maxCoeff();
  if (peak <= 0.0) throw InvalidDensityError("DensityFrame: all-zero density");
  const double limit = tol.boundary * peak;
  if (values(0) > limit || values(values.size() - 1) > limit) {
    std::ostringstream msg;
    msg << "DensityFrame: boundary density not negligible at t=" << t
        << " (edges " << values(0) << ", " << values(values.size() - 1)
        << "; limit " << limit << ")";
    throw BoundaryViolationError(msg.str());
  }
}

double DensityFrame::mass() const { return trapezoid_mass(values, grid.dx()); }

DensitySeries::DensitySeries(std::vector<DensityFrame> frames, const DensityTolerances& tol)
    : frames_(std::move(frames)) {
  if (frames_.empty()) throw InvalidInputError("DensitySeries: no frames");
  grid_ = frames_.front().grid;
  for (const auto& f : frames_)
    if (!(f.grid == grid_)) throw ConfigurationError("DensitySeries: frames on different grids");
  if (frames_.size() > 1) {
    dt_ = frames_[1].t - frames_[0].t;
    if (!(dt_ > 0.0)) throw FormatError("DensitySeries: times must be strictly increasing");
    for (size_t k = 1; k < frames_.size(); ++k) {
      const double step = frames_[k].t - frames_[k - 1].t;
      if (std::abs(step - dt_) > 1e-9 * std::max(1.0, std::abs(dt_)))
        throw FormatError("DensitySeries: non-uniform time spacing");
    }
  }
  const double mass0 = frames_.front().mass();
  for (const auto& f : frames_) {
    if (std::abs(f.mass() - mass0) > tol.mass * std::max(1.0, std::abs(mass0))) {
      std::ostringstream msg;
      msg << "DensitySeries: mass drift at t=" << f.t << " (" << f.mass() << " vs "
          << mass0 << ")";
      throw ConservationError(msg.str());
    }
  }
}

std::vector<double> DensitySeries::times() const {
  std::vector<double> out;
  out.reserve(frames_.size());
  for (const auto& f : frames_) out.push_back(f.t);
  return out;
}

DensitySeries sample_model(const WavefunctionModel& model, const Grid1D& grid,
                           const std::vector<double>& times, const DensityTolerances& tol) {
  if (times.empty()) throw InvalidInputError("sample_model: no times");
  std::vector<DensityFrame> frames;
  frames.reserve(times.size());
  const Eigen::ArrayXd xs = grid.nodes();
  for (double t : times) {
    Eigen::ArrayXd values(grid.n_nodes);
    for (Eigen::Index i = 0; i < grid.n_nodes; ++i) values(i) = density(model, xs(i), t);
    frames.emplace_back(grid, t, std::move(values), tol);
  }
  return DensitySeries(std::move(frames), tol);
}

DensitySeries sample_model(const WavefunctionModel& model, const Grid1D& grid, double t0,
                           double dt, Eigen::Index n_frames, const DensityTolerances& tol) {
  if (n_frames < 1) throw InvalidInputError("sample_model: need at least one frame");
  std::vector<double> times(static_cast<size_t>(n_frames));
  for (Eigen::Index k = 0; k < n_frames; ++k) times[static_cast<size_t>(k)] = t0 + dt * static_cast<double>(k);
  return sample_model(model, grid, times, tol);
}

Eigen::ArrayXd time_derivative(const DensitySeries& series, Eigen::Index frame_index) {
  const auto n = series.n_frames();
  if (n < 3) throw InsufficientDataError("time_derivative: need at least 3 frames");
  if (frame_index < 0 || frame_index >= n)
    throw RangeError("time_derivative: frame index out of range");
  const double dt = series.dt();
  const auto& v = [&](Eigen::Index k) -> const Eigen::ArrayXd& {
    return series.frame(k).values;
  };
  if (frame_index == 0)
    return (-3.0 * v(0) + 4.0 * v(1) - v(2)) / (2.0 * dt);
  if (frame_index == n - 1)
    return (3.0 * v(n - 1) - 4.0 * v(n - 2) + v(n - 3)) / (2.0 * dt);
  return (v(frame_index + 1) - v(frame_index - 1)) / (2.0 * dt);
}

}  // namespace qtraj
