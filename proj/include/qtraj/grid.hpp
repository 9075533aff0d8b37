#ifndef QTRAJ_GRID_HPP
#define QTRAJ_GRID_HPP

#include <Eigen/Core>
#include <cmath>

#include "qtraj/errors.hpp"

namespace qtraj {

/// Uniform 1D grid of n_nodes nodes spanning [x_min, x_max].
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  Eigen::Index n_nodes = 2;

  Grid1D() = default;
  Grid1D(double xmin, double xmax, Eigen::Index n) : x_min(xmin), x_max(xmax), n_nodes(n) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max))
      throw InvalidInputError("Grid1D: bounds must be finite");
    if (!(x_max > x_min)) throw InvalidInputError("Grid1D: x_max must exceed x_min");
    if (n_nodes < 3) throw InvalidInputError("Grid1D: need at least 3 nodes");
  }

  double dx() const { return (x_max - x_min) / static_cast<double>(n_nodes - 1); }
  double node(Eigen::Index i) const { return x_min + dx() * static_cast<double>(i); }

  Eigen::ArrayXd nodes() const {
    return Eigen::ArrayXd::LinSpaced(n_nodes, x_min, x_max);
  }

  bool contains(double x) const { return x >= x_min && x <= x_max; }

  /// Index of the segment [node(k), node(k+1)] containing x; clamped to valid segments.
  Eigen::Index segment_of(double x) const {
    if (!contains(x)) throw RangeError("Grid1D: position outside grid");
    auto k = static_cast<Eigen::Index>(std::floor((x - x_min) / dx()));
    if (k < 0) k = 0;
    if (k > n_nodes - 2) k = n_nodes - 2;
    return k;
  }

  friend bool operator==(const Grid1D& a, const Grid1D& b) {
    return a.x_min == b.x_min && a.x_max == b.x_max && a.n_nodes == b.n_nodes;
  }
};

}  // namespace qtraj

#endif
