#ifndef QTRAJ_DENSITY_IO_HPP
#define QTRAJ_DENSITY_IO_HPP

#include <iosfwd>
#include <string>

#include "qtraj/density.hpp"
#include "qtraj/quantile.hpp"

namespace qtraj {

/// Reads a density-series CSV:
///   # grid x_min=<f> x_max=<f> n=<int> dt=<f>
///   t,v_0,v_1,...,v_{n-1}       (one row per frame)
/// Values are validated (nonnegative, mass-conserving) but never renormalized.
DensitySeries ingest_series(std::istream& in, const DensityTolerances& tol = {});
DensitySeries ingest_series_file(const std::string& path, const DensityTolerances& tol = {});

/// Canonical re-serialization of a series in the ingestion format, with
/// round-trip decimal precision.
void export_series(const DensitySeries& series, std::ostream& out);
std::string export_series_string(const DensitySeries& series);

/// Trajectory CSV: header "t,x[,y...]" then one row per sample.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
void write_trajectory_csv_file(const Trajectory& traj, const std::string& path);
Trajectory read_trajectory_csv_file(const std::string& path);

}  // namespace qtraj

#endif
