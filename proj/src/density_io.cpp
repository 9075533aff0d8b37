#include "qtraj/density_io.hpp"

#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace qtraj {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& token, const char* what) {
  try {
    size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size()) throw FormatError(std::string("trailing characters in ") + what);
    return v;
  } catch (const std::exception&) {
    throw FormatError(std::string("cannot parse ") + what + ": '" + token + "'");
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

DensitySeries ingest_series(std::istream& in, const DensityTolerances& tol) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("ingest_series: empty input");
  double x_min = 0.0, x_max = 0.0, dt = 0.0;
  long long n = 0;
  if (std::sscanf(header.c_str(), "# grid x_min=%lf x_max=%lf n=%lld dt=%lf", &x_min,
                  &x_max, &n, &dt) != 4)
    throw FormatError("ingest_series: bad header line: '" + header + "'");
  if (n < 3) throw FormatError("ingest_series: need at least 3 grid nodes");
  Grid1D grid;
  try {
    grid = Grid1D(x_min, x_max, static_cast<Eigen::Index>(n));
  } catch (const Error& e) {
    throw FormatError(std::string("ingest_series: ") + e.what());
  }

  std::vector<DensityFrame> frames;
  std::string line;
  size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (static_cast<long long>(fields.size()) != n + 1) {
      std::ostringstream msg;
      msg << "ingest_series: row " << row << " has " << fields.size()
          << " fields, expected " << (n + 1);
      throw FormatError(msg.str());
    }
    const double t = parse_double(fields[0], "frame time");
    Eigen::ArrayXd values(n);
    for (long long i = 0; i < n; ++i) {
      const double v = parse_double(fields[static_cast<size_t>(i + 1)], "density value");
      if (!std::isfinite(v) || v < 0.0) {
        std::ostringstream msg;
        msg << "ingest_series: row " << row << ", value " << i << " is invalid (" << v << ")";
        throw InvalidDensityError(msg.str());
      }
      values(static_cast<Eigen::Index>(i)) = v;
    }
    frames.emplace_back(grid, t, std::move(values), tol);
  }
  if (frames.empty()) throw FormatError("ingest_series: no frames");
  DensitySeries series(std::move(frames), tol);
  if (series.n_frames() > 1 &&
      std::abs(series.dt() - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
    throw FormatError("ingest_series: header dt does not match frame times");
  return series;
}

DensitySeries ingest_series_file(const std::string& path, const DensityTolerances& tol) {
  std::ifstream in(path);
  if (!in) throw FormatError("ingest_series: cannot open '" + path + "'");
  return ingest_series(in, tol);
}

void export_series(const DensitySeries& series, std::ostream& out) {
  const Grid1D& g = series.grid();
  out << "# grid x_min=" << fmt_double(g.x_min) << " x_max=" << fmt_double(g.x_max)
      << " n=" << g.n_nodes << " dt=" << fmt_double(series.dt()) << "\n";
  for (const auto& frame : series.frames()) {
    out << fmt_double(frame.t);
    for (Eigen::Index i = 0; i < frame.values.size(); ++i)
      out << ',' << fmt_double(frame.values(i));
    out << "\n";
  }
}

std::string export_series_string(const DensitySeries& series) {
  std::ostringstream out;
  export_series(series, out);
  return out.str();
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << "t";
  for (Eigen::Index d = 0; d < traj.n_dims(); ++d) out << ',' << (d == 0 ? "x" : "y");
  out << "\n";
  for (Eigen::Index k = 0; k < traj.n_samples(); ++k) {
    out << fmt_double(traj.times[static_cast<size_t>(k)]);
    for (Eigen::Index d = 0; d < traj.n_dims(); ++d) out << ',' << fmt_double(traj.positions(k, d));
    out << "\n";
  }
}

void write_trajectory_csv_file(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("write_trajectory_csv: cannot open '" + path + "'");
  write_trajectory_csv(traj, out);
}

Trajectory read_trajectory_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("read_trajectory_csv: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw FormatError("read_trajectory_csv: empty file");
  const auto header = split_csv(line);
  if (header.size() < 2 || header[0] != "t")
    throw FormatError("read_trajectory_csv: bad header in '" + path + "'");
  const auto dims = header.size() - 1;

  std::vector<double> times;
  std::vector<std::vector<double>> coords;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != header.size())
      throw FormatError("read_trajectory_csv: ragged row in '" + path + "'");
    times.push_back(parse_double(fields[0], "sample time"));
    std::vector<double> point;
    for (size_t d = 0; d < dims; ++d) point.push_back(parse_double(fields[d + 1], "position"));
    coords.push_back(std::move(point));
  }
  if (times.empty()) throw FormatError("read_trajectory_csv: no samples in '" + path + "'");

  Trajectory traj;
  traj.times = std::move(times);
  traj.positions.resize(static_cast<Eigen::Index>(traj.times.size()),
                        static_cast<Eigen::Index>(dims));
  for (size_t k = 0; k < coords.size(); ++k)
    for (size_t d = 0; d < dims; ++d)
      traj.positions(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(d)) = coords[k][d];
  return traj;
}

}  // namespace qtraj
