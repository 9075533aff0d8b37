#ifndef QTRAJ_DENSITY_HPP
#define QTRAJ_DENSITY_HPP

#include <Eigen/Core>
#include <vector>

#include "qtraj/grid.hpp"
#include "qtraj/wavefunction.hpp"

namespace qtraj {

/// Validation tolerances for density frames and series.
struct DensityTolerances {
  /// Max allowed boundary value relative to the frame maximum.
  double boundary = 1e-8;
  /// Max allowed per-frame trapezoid-mass drift relative to frame 0.
  double mass = 1e-3;
};

/// Nonnegative density samples on a uniform grid at one time.
struct DensityFrame {
  Grid1D grid;
  double t = 0.0;
  Eigen::ArrayXd values;

  DensityFrame() = default;
  DensityFrame(Grid1D g, double time, Eigen::ArrayXd v,
               const DensityTolerances& tol = {});

  /// Trapezoid mass of the frame.
  double mass() const;
};

/// Time-ordered density frames on a shared grid with uniform time step.
class DensitySeries {
 public:
  DensitySeries(std::vector<DensityFrame> frames, const DensityTolerances& tol = {});

  const Grid1D& grid() const { return grid_; }
  double dt() const { return dt_; }
  Eigen::Index n_frames() const { return static_cast<Eigen::Index>(frames_.size()); }
  const DensityFrame& frame(Eigen::Index i) const { return frames_.at(static_cast<size_t>(i)); }
  const std::vector<DensityFrame>& frames() const { return frames_; }
  std::vector<double> times() const;

 private:
  Grid1D grid_;
  double dt_ = 0.0;
  std::vector<DensityFrame> frames_;
};

/// Samples |psi|^2 of an analytic model onto a grid at uniformly spaced times.
DensitySeries sample_model(const WavefunctionModel& model, const Grid1D& grid,
                           const std::vector<double>& times,
                           const DensityTolerances& tol = {});

/// Convenience overload: times t0 + k dt for k = 0..n_frames-1.
DensitySeries sample_model(const WavefunctionModel& model, const Grid1D& grid,
                           double t0, double dt, Eigen::Index n_frames,
                           const DensityTolerances& tol = {});

/// Per-node d(rho)/dt at a frame: central differences in the interior,
/// one-sided second order at the first and last frame.
Eigen::ArrayXd time_derivative(const DensitySeries& series, Eigen::Index frame_index);

/// Trapezoid integral of samples on a uniform grid with spacing dx.
double trapezoid_mass(const Eigen::ArrayXd& values, double dx);

}  // namespace qtraj

#endif
