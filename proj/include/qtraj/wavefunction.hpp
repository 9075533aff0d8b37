#ifndef QTRAJ_WAVEFUNCTION_HPP
#define QTRAJ_WAVEFUNCTION_HPP

#include <complex>
#include <string>
#include <variant>

#include "qtraj/constants.hpp"
#include "qtraj/errors.hpp"

namespace qtraj {

using Complex = std::complex<double>;

/// Recommended discretization for reproducing the reference figures.
struct ModelDefaults {
  double x_min;
  double x_max;
  double dx;
  double dt;
  double t_end;
};

/// Superposition of the harmonic-oscillator ground and first excited states.
struct HarmonicSuperposition {
  double omega = 3.0;
  PhysicalConstants constants{};

  double width() const;  // a = sqrt(hbar / (m omega))
  Complex psi(double x, double t) const;
  Complex dpsi_dx(double x, double t) const;
  ModelDefaults defaults() const { return {-5.0, 5.0, 0.2, 0.1, 3.0}; }
};

/// Free particle, initially Gaussian with width parameter a.
struct FreeGaussian {
  double a = std::acos(-1.0) / 2.0;  // pi/2
  PhysicalConstants constants{};

  Complex psi(double x, double t) const;
  Complex dpsi_dx(double x, double t) const;
  /// Density standard deviation sqrt((1 + (2 hbar a t / m)^2) / (4a)).
  double sigma(double t) const;
  ModelDefaults defaults() const { return {-5.0, 5.0, 0.2, 0.1, 3.0}; }
};

/// Two-slit transverse wavefunction: equal-weight superposition of two
/// spreading Gaussians centered at +-slit_offset with initial width slit_width.
struct TwoSlit {
  double slit_offset = 6.0;
  double slit_width = 3.5;
  double t_max = 100.0;
  PhysicalConstants constants{};

  Complex psi(double y, double t) const;
  Complex dpsi_dx(double y, double t) const;
  ModelDefaults defaults() const {
    return {-129.668, 129.668, 3.24169, 2.5, t_max};
  }
};

/// Superposition of the two lowest states of an infinite square well of width L.
struct SquareWellSuperposition {
  double well_width = 1.0;
  PhysicalConstants constants{};

  double ground_energy() const;  // E1 = pi^2 hbar^2 / (2 m L^2)
  Complex psi(double x, double t) const;
  Complex dpsi_dx(double x, double t) const;
  ModelDefaults defaults() const {
    return {0.0, well_width, well_width / 30.0, 0.05, 1.0};
  }
};

using WavefunctionModel =
    std::variant<HarmonicSuperposition, FreeGaussian, TwoSlit, SquareWellSuperposition>;

Complex eval_psi(const WavefunctionModel& model, double x, double t);
Complex eval_dpsi_dx(const WavefunctionModel& model, double x, double t);
double density(const WavefunctionModel& model, double x, double t);
ModelDefaults model_defaults(const WavefunctionModel& model);
std::string model_name(const WavefunctionModel& model);

}  // namespace qtraj

#endif
