#include "qtraj/wavefunction.hpp"

#include <cmath>

namespace qtraj {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_args(double x, double t) {
  if (!std::isfinite(x) || !std::isfinite(t))
    throw InvalidInputError("wavefunction: x and t must be finite");
  if (t < 0.0) throw InvalidInputError("wavefunction: t must be nonnegative");
}

}  // namespace

// --- harmonic oscillator, ground + first excited -------------------------

double HarmonicSuperposition::width() const {
  return std::sqrt(constants.hbar / (constants.mass * omega));
}

Complex HarmonicSuperposition::psi(double x, double t) const {
  check_args(x, t);
  if (!(omega > 0.0)) throw InvalidInputError("HarmonicSuperposition: omega must be positive");
  constants.validate();
  const double a = width();
  const double hbar = constants.hbar;
  const double e0 = hbar * omega * 0.5;
  const double e1 = hbar * omega * 1.5;
  const double gauss = std::exp(-x * x / (2.0 * a * a));
  const double c0 = std::sqrt(1.0 / (a * std::sqrt(kPi)));
  const double c1 = std::sqrt(1.0 / (2.0 * a * std::sqrt(kPi)));
  const Complex phase0 = std::exp(Complex(0.0, -e0 * t / hbar));
  const Complex phase1 = std::exp(Complex(0.0, -e1 * t / hbar));
  return (c0 * gauss * phase0 + c1 * gauss * (2.0 * x / a) * phase1) / std::sqrt(2.0);
}

Complex HarmonicSuperposition::dpsi_dx(double x, double t) const {
  check_args(x, t);
  constants.validate();
  const double a = width();
  const double hbar = constants.hbar;
  const double e0 = hbar * omega * 0.5;
  const double e1 = hbar * omega * 1.5;
  const double gauss = std::exp(-x * x / (2.0 * a * a));
  const double c0 = std::sqrt(1.0 / (a * std::sqrt(kPi)));
  const double c1 = std::sqrt(1.0 / (2.0 * a * std::sqrt(kPi)));
  const Complex phase0 = std::exp(Complex(0.0, -e0 * t / hbar));
  const Complex phase1 = std::exp(Complex(0.0, -e1 * t / hbar));
  // d/dx [gauss] = -(x/a^2) gauss;  d/dx [(2x/a) gauss] = (2/a)(1 - x^2/a^2) gauss
  const double d0 = -(x / (a * a)) * gauss;
  const double d1 = (2.0 / a) * (1.0 - x * x / (a * a)) * gauss;
  return (c0 * d0 * phase0 + c1 * d1 * phase1) / std::sqrt(2.0);
}

// --- free Gaussian packet -------------------------------------------------

Complex FreeGaussian::psi(double x, double t) const {
  check_args(x, t);
  if (!(a > 0.0)) throw InvalidInputError("FreeGaussian: a must be positive");
  constants.validate();
  const Complex denom(1.0, 2.0 * constants.hbar * a * t / constants.mass);
  const double prefactor = std::pow(2.0 * a / kPi, 0.25);
  return prefactor * std::exp(-a * x * x / denom) / std::sqrt(denom);
}

Complex FreeGaussian::dpsi_dx(double x, double t) const {
  const Complex denom(1.0, 2.0 * constants.hbar * a * t / constants.mass);
  return psi(x, t) * (-2.0 * a * x / denom);
}

double FreeGaussian::sigma(double t) const {
  const double s = 2.0 * constants.hbar * a * t / constants.mass;
  return std::sqrt((1.0 + s * s) / (4.0 * a));
}

// --- two-slit transverse packet ------------------------------------------

Complex TwoSlit::psi(double y, double t) const {
  check_args(y, t);
  if (!(slit_offset > 0.0) || !(slit_width > 0.0) || !(t_max > 0.0))
    throw InvalidInputError("TwoSlit: parameters must be positive");
  constants.validate();
  const double s0 = slit_width;
  const Complex spread(1.0, constants.hbar * t / (2.0 * constants.mass * s0 * s0));
  const Complex c = 4.0 * s0 * s0 * spread;  // = 4 s0^2 + 2 i hbar t / m
  const double norm1 = std::pow(2.0 * kPi * s0 * s0, -0.25);
  const Complex g_plus = norm1 / std::sqrt(spread) *
                         std::exp(-(y - slit_offset) * (y - slit_offset) / c);
  const Complex g_minus = norm1 / std::sqrt(spread) *
                          std::exp(-(y + slit_offset) * (y + slit_offset) / c);
  // Overlap of the two slit packets is conserved by free evolution.
  const double overlap = std::exp(-slit_offset * slit_offset / (2.0 * s0 * s0));
  const double norm = 1.0 / std::sqrt(2.0 * (1.0 + overlap));
  return norm * (g_plus + g_minus);
}

Complex TwoSlit::dpsi_dx(double y, double t) const {
  check_args(y, t);
  constants.validate();
  const double s0 = slit_width;
  const Complex spread(1.0, constants.hbar * t / (2.0 * constants.mass * s0 * s0));
  const Complex c = 4.0 * s0 * s0 * spread;
  const double norm1 = std::pow(2.0 * kPi * s0 * s0, -0.25);
  const Complex g_plus = norm1 / std::sqrt(spread) *
                         std::exp(-(y - slit_offset) * (y - slit_offset) / c);
  const Complex g_minus = norm1 / std::sqrt(spread) *
                          std::exp(-(y + slit_offset) * (y + slit_offset) / c);
  const double overlap = std::exp(-slit_offset * slit_offset / (2.0 * s0 * s0));
  const double norm = 1.0 / std::sqrt(2.0 * (1.0 + overlap));
  return norm * (g_plus * (-2.0 * (y - slit_offset) / c) +
                 g_minus * (-2.0 * (y + slit_offset) / c));
}

// --- two lowest square-well states ---------------------------------------

double SquareWellSuperposition::ground_energy() const {
  const double l = well_width;
  return kPi * kPi * constants.hbar * constants.hbar / (2.0 * constants.mass * l * l);
}

Complex SquareWellSuperposition::psi(double x, double t) const {
  check_args(x, t);
  if (!(well_width > 0.0)) throw InvalidInputError("SquareWellSuperposition: L must be positive");
  constants.validate();
  const double l = well_width;
  if (x < 0.0 || x > l) return Complex(0.0, 0.0);
  const double e1 = ground_energy();
  const Complex phase1 = std::exp(Complex(0.0, -e1 * t / constants.hbar));
  const Complex phase2 = std::exp(Complex(0.0, -4.0 * e1 * t / constants.hbar));
  return std::sqrt(1.0 / l) *
         (std::sin(kPi * x / l) * phase1 + std::sin(2.0 * kPi * x / l) * phase2);
}

Complex SquareWellSuperposition::dpsi_dx(double x, double t) const {
  check_args(x, t);
  constants.validate();
  const double l = well_width;
  if (x < 0.0 || x > l) return Complex(0.0, 0.0);
  const double e1 = ground_energy();
  const Complex phase1 = std::exp(Complex(0.0, -e1 * t / constants.hbar));
  const Complex phase2 = std::exp(Complex(0.0, -4.0 * e1 * t / constants.hbar));
  return std::sqrt(1.0 / l) * ((kPi / l) * std::cos(kPi * x / l) * phase1 +
                               (2.0 * kPi / l) * std::cos(2.0 * kPi * x / l) * phase2);
}

// --- variant dispatch -----------------------------------------------------

Complex eval_psi(const WavefunctionModel& model, double x, double t) {
  return std::visit([&](const auto& m) { return m.psi(x, t); }, model);
}

Complex eval_dpsi_dx(const WavefunctionModel& model, double x, double t) {
  return std::visit([&](const auto& m) { return m.dpsi_dx(x, t); }, model);
}

double density(const WavefunctionModel& model, double x, double t) {
  return std::norm(eval_psi(model, x, t));
}

ModelDefaults model_defaults(const WavefunctionModel& model) {
  return std::visit([](const auto& m) { return m.defaults(); }, model);
}

std::string model_name(const WavefunctionModel& model) {
  struct Namer {
    std::string operator()(const HarmonicSuperposition&) const { return "harmonic"; }
    std::string operator()(const FreeGaussian&) const { return "free"; }
    std::string operator()(const TwoSlit&) const { return "two-slit"; }
    std::string operator()(const SquareWellSuperposition&) const { return "square-well"; }
  };
  return std::visit(Namer{}, model);
}

}  // namespace qtraj
