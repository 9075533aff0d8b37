#include "qtraj/cpf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qtraj {

CpfTable build_cpf(const DensityFrame& frame) {
  const auto n = frame.grid.n_nodes;
  const double dx = frame.grid.dx();
  Eigen::ArrayXd cumulative(n);
  cumulative(0) = 0.0;
  for (Eigen::Index k = 1; k < n; ++k)
    cumulative(k) = cumulative(k - 1) + dx * 0.5 * (frame.values(k - 1) + frame.values(k));
  return CpfTable{frame.grid, frame.t, std::move(cumulative), frame.values};
}

double invert_cpf(const CpfTable& table, double p, const CpfOptions& opts) {
  if (!std::isfinite(p) || p <= 0.0 || p >= 1.0)
    throw RangeError("invert_cpf: P must lie in (0, 1)");
  const double total = table.total();
  if (!(total > 0.0)) throw InvalidDensityError("invert_cpf: zero total mass");
  const double target = opts.renormalize ? p * total : p;
  if (target > total)
    throw CoverageError("invert_cpf: requested quantile beyond covered mass");

  const auto n = table.cumulative.size();
  const double* begin = table.cumulative.data();
  const double* end = begin + n;
  const auto i_lo = static_cast<Eigen::Index>(std::lower_bound(begin, end, target) - begin);
  const auto i_hi = static_cast<Eigen::Index>(std::upper_bound(begin, end, target) - begin) - 1;
  if (i_hi > i_lo)  // target sits on a flat run; its preimage is an interval
    return 0.5 * (table.grid.node(i_lo) + table.grid.node(i_hi));
  if (i_hi == i_lo && i_lo < n) return table.grid.node(i_lo);

  const Eigen::Index k = std::clamp<Eigen::Index>(i_lo - 1, 0, n - 2);
  const double dx = table.grid.dx();
  const double x_k = table.grid.node(k);
  const double c_k = table.cumulative(k);
  const double dc = table.cumulative(k + 1) - c_k;
  if (dc < opts.flat_epsilon) return x_k + 0.5 * dx;  // flat segment: midpoint

  const double area = target - c_k;
  if (opts.interpolation == CpfInterpolation::Linear) return x_k + dx * area / dc;

  const double v_k = table.density(k);
  const double v_k1 = table.density(k + 1);
  if (std::abs(v_k1 - v_k) < 1e-12 * table.density.maxCoeff())
    return x_k + dx * area / dc;
  // Density is linear across the segment, so the partial area is quadratic in s:
  // (slope/2) s^2 + v_k s = area. Stable root with s in [0, dx].
  const double slope = (v_k1 - v_k) / dx;
  const double disc = std::max(v_k * v_k + 2.0 * slope * area, 0.0);
  const double s = 2.0 * area / (v_k + std::sqrt(disc));
  return x_k + std::clamp(s, 0.0, dx);
}

double cpf_at(const CpfTable& table, double x, const CpfOptions& opts) {
  if (!std::isfinite(x)) throw RangeError("cpf_at: non-finite position");
  if (!table.grid.contains(x)) throw RangeError("cpf_at: position outside grid");
  const double total = table.total();
  if (!(total > 0.0)) throw InvalidDensityError("cpf_at: zero total mass");

  const Eigen::Index k = table.grid.segment_of(x);
  const double dx = table.grid.dx();
  const double s = x - table.grid.node(k);
  const double c_k = table.cumulative(k);
  const double dc = table.cumulative(k + 1) - c_k;
  double c;
  if (opts.interpolation == CpfInterpolation::Linear ||
      std::abs(table.density(k + 1) - table.density(k)) < 1e-12 * table.density.maxCoeff()) {
    c = c_k + dc * s / dx;
  } else {
    const double slope = (table.density(k + 1) - table.density(k)) / dx;
    c = c_k + table.density(k) * s + 0.5 * slope * s * s;
  }
  return opts.renormalize ? c / total : c;
}

}  // namespace qtraj
