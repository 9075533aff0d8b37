#ifndef QTRAJ_CPF_HPP
#define QTRAJ_CPF_HPP

#include <Eigen/Core>

#include "qtraj/density.hpp"
#include "qtraj/grid.hpp"

namespace qtraj {

/// How a quantile is located inside one trapezoid of the CPF approximation.
enum class CpfInterpolation {
  /// Solve the trapezoid-top quadratic exactly (density varies linearly
  /// across the segment). Falls back to linear where the density is flat.
  Quadratic,
  /// Linear interpolation of the cumulative values.
  Linear,
};

struct CpfOptions {
  CpfInterpolation interpolation = CpfInterpolation::Quadratic;
  /// Divide requested P by the total covered mass to absorb truncation loss.
  bool renormalize = true;
  /// Absolute cumulative increment below which a segment counts as flat;
  /// inversion there returns the segment midpoint.
  double flat_epsilon = 1e-14;
};

/// Trapezoid approximation of the cumulative probability at the grid nodes.
struct CpfTable {
  Grid1D grid;
  double t = 0.0;
  Eigen::ArrayXd cumulative;  // C_0 = 0, nondecreasing
  Eigen::ArrayXd density;     // node densities the table was built from

  double total() const { return cumulative(cumulative.size() - 1); }
};

/// C_k = C_{k-1} + dx (v_{k-1} + v_k) / 2 with C_0 = 0.
CpfTable build_cpf(const DensityFrame& frame);

/// Position x with cumulative probability P, 0 < P < 1.
double invert_cpf(const CpfTable& table, double p, const CpfOptions& opts = {});

/// Cumulative probability at x; exact inverse of invert_cpf under the same options.
double cpf_at(const CpfTable& table, double x, const CpfOptions& opts = {});

}  // namespace qtraj

#endif
