// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <vector>

#include "qtraj/bohm.hpp"
#include "qtraj/compare.hpp"
#include "qtraj/density_io.hpp"
#include "qtraj/experiments.hpp"

using namespace qtraj;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Harmonic oscillator: quantile vs Bohm at preset and refined resolution.
void criterion_1() {
  Timer timer;
  auto cfg = preset("harmonic");
  const double coarse_dev = run_experiment(cfg).max_deviation;

  auto refined = cfg;
  refined.grid = Grid1D(-5.0, 5.0, 201);  // dx = 0.05
  refined.dt = 0.05 / 3.0;                // dx/dt = 3
  refined.t_end = 3.0;
  const double refined_dev = run_experiment(refined).max_deviation;

  const double elapsed = timer.seconds();
  const bool ok = coarse_dev <= 5e-2 && refined_dev <= 5e-3 && elapsed < 5.0;
  report(1, "harmonic oscillator quantile vs Bohm", ok,
         "preset-res dev " + fmt(coarse_dev) + " <= 5e-2, refined dev " + fmt(refined_dev) +
             " <= 5e-3, " + fmt(elapsed) + " s");
}

// ---------------------------------------------------------------------------
// 2. Free particle closed form x_P(t) = x_P(0) sqrt(1 + (pi t)^2).
void criterion_2() {
  Timer timer;
  const double a = kPi / 2.0;
  FreeGaussian model{a};
  Grid1D grid(-25.0, 25.0, 2501);  // dx = 0.02
  const double dt = 0.0067;
  const auto n_frames = static_cast<Eigen::Index>(std::lround(3.0 / dt)) + 1;
  const auto series = sample_model(model, grid, 0.0, dt, n_frames);

  double worst_rel = 0.0;
  double median_abs = 0.0;
  for (double p = 0.1; p < 0.95; p += 0.1) {
    const auto traj = quantile_trajectory(series, QuantileSpec::from_p(p));
    const double x0 = traj.positions(0, 0);
    for (Eigen::Index k = 0; k < traj.n_samples(); ++k) {
      const double t = traj.times[static_cast<size_t>(k)];
      const double expected = x0 * std::sqrt(1.0 + kPi * kPi * t * t);
      if (std::abs(p - 0.5) < 1e-9)
        median_abs = std::max(median_abs, std::abs(traj.positions(k, 0)));
      else
        worst_rel = std::max(worst_rel,
                             std::abs(traj.positions(k, 0) - expected) / std::abs(expected));
    }
  }

  // Independent oracle at a finer step than the quantile run.
  double bohm_rel = 0.0;
  IntegratorConfig integ;
  integ.step = 1e-3;
  integ.record_times = series.times();
  for (double x0 : {0.2691, -0.8, 1.5}) {
    const auto traj = bohm_trajectory(model, x0, integ);
    for (Eigen::Index k = 0; k < traj.n_samples(); ++k) {
      const double t = traj.times[static_cast<size_t>(k)];
      const double expected = x0 * std::sqrt(1.0 + kPi * kPi * t * t);
      bohm_rel = std::max(bohm_rel, std::abs(traj.positions(k, 0) - expected) /
                                        std::abs(expected));
    }
  }

  const double elapsed = timer.seconds();
  const bool ok = worst_rel <= 1e-3 && median_abs <= 1e-6 && bohm_rel <= 1e-6 &&
                  elapsed < 5.0;
  report(2, "free particle closed form", ok,
         "quantile rel err " + fmt(worst_rel) + " <= 1e-3, median |x| " + fmt(median_abs) +
             ", Bohm rel err " + fmt(bohm_rel) + " <= 1e-6, " + fmt(elapsed) + " s");
}

// ---------------------------------------------------------------------------
// 3. Two-slit ensemble: no crossings, machine-level P drift, Bohm agreement.
void criterion_3() {
  Timer timer;
  const auto cfg = preset("two-slit");
  const auto result = run_experiment(cfg);
  const double dy = cfg.grid.dx();

  bool no_crossings = true;
  for (size_t i = 1; i < result.pairs.size(); ++i) {
    const auto& lo = result.pairs[i - 1].quantile;
    const auto& hi = result.pairs[i].quantile;
    for (Eigen::Index k = 0; k < lo.n_samples(); ++k)
      if (!(hi.positions(k, 0) >= lo.positions(k, 0))) no_crossings = false;
  }

  // Classify each sample by how close the quantile sits to a nodal flat.
  const auto series = sample_model(cfg.model, cfg.grid, cfg.times(), cfg.tolerances);
  double dev_away = 0.0, dev_near = 0.0;
  for (const auto& pair : result.pairs) {
    for (Eigen::Index k = 0; k < pair.quantile.n_samples(); ++k) {
      const double x = pair.quantile.positions(k, 0);
      const auto& rho = series.frame(k).values;
      const double peak = rho.maxCoeff();
      const Eigen::Index seg = cfg.grid.segment_of(x);
      double local = peak;
      for (Eigen::Index j = std::max<Eigen::Index>(0, seg - 2);
           j <= std::min(cfg.grid.n_nodes - 1, seg + 3); ++j)
        local = std::min(local, rho(j));
      const double dev = pair.report.deviations[static_cast<size_t>(k)];
      if (local < 5e-2 * peak)
        dev_near = std::max(dev_near, dev);
      else
        dev_away = std::max(dev_away, dev);
    }
  }

  const double elapsed = timer.seconds();
  const bool ok = result.pairs.size() >= 20 && no_crossings &&
                  result.max_p_drift <= 1e-6 && dev_away <= 2e-1 * dy &&
                  dev_near <= 1.5 * dy && elapsed < 30.0;
  report(3, "two-slit ensemble vs Bohm", ok,
         std::to_string(result.pairs.size()) + " trajectories, crossings " +
             (no_crossings ? "none" : "FOUND") + ", P drift " + fmt(result.max_p_drift) +
             " <= 1e-6, dev away " + fmt(dev_away) + " <= " + fmt(2e-1 * dy) +
             ", dev near nodes " + fmt(dev_near) + " <= " + fmt(1.5 * dy) + ", " +
             fmt(elapsed) + " s");
}

// ---------------------------------------------------------------------------
// 4. Separable 2D well: coordinates identical to standalone 1D runs.
void criterion_4() {
  const auto cfg = preset("well-2d");
  const auto result = run_experiment(cfg);
  const auto series = sample_model(cfg.model, cfg.grid, cfg.times(), cfg.tolerances);

  bool exact = true;
  for (const auto& pair : result.pairs) {
    for (Eigen::Index d = 0; d < 2; ++d) {
      const auto one = quantile_trajectory(
          series, QuantileSpec::from_p(pair.quantile.quantiles[static_cast<size_t>(d)]),
          cfg.cpf);
      for (Eigen::Index k = 0; k < one.n_samples(); ++k)
        if (pair.quantile.positions(k, d) != one.positions(k, 0)) exact = false;
    }
  }

  // Emit the figure family as CSV.
  namespace fs = std::filesystem;
  const fs::path outdir = fs::path("acceptance_out") / "well-2d";
  fs::create_directories(outdir);
  for (size_t i = 0; i < result.pairs.size(); ++i)
    write_trajectory_csv_file(result.pairs[i].quantile,
                              (outdir / ("trajectory_" + std::to_string(i) + ".csv")).string());

  const bool ok = exact && result.pairs.size() == 9;
  report(4, "separable 2D well per-axis identity", ok,
         std::string(exact ? "coordinates bit-identical to 1D runs" : "MISMATCH") +
             ", family CSV in " + outdir.string());
}

// ---------------------------------------------------------------------------
// 5. CPF invariants over randomized grids, >= 1000 cases.
void criterion_5() {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> n_peaks(1, 3);
  std::uniform_int_distribution<int> n_nodes(41, 241);
  std::uniform_real_distribution<double> mean_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> sigma_dist(0.5, 1.5);
  std::uniform_real_distribution<double> weight_dist(0.2, 1.0);
  std::uniform_real_distribution<double> p_dist(0.02, 0.98);

  int cases = 0;
  bool monotone = true, zero_start = true, mass_ok = true, round_trip = true;
  double worst_mass = 0.0, worst_round = 0.0;
  for (int trial = 0; trial < 1000; ++trial, ++cases) {
    const int peaks = n_peaks(rng);
    std::vector<double> means, sigmas, weights;
    double wsum = 0.0;
    for (int j = 0; j < peaks; ++j) {
      means.push_back(mean_dist(rng));
      sigmas.push_back(sigma_dist(rng));
      weights.push_back(weight_dist(rng));
      wsum += weights.back();
    }
    const int n = n_nodes(rng);
    Grid1D grid(-14.0, 14.0, n);
    Eigen::ArrayXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      double rho = 0.0;
      for (int j = 0; j < peaks; ++j) {
        const double z = (grid.node(i) - means[j]) / sigmas[j];
        rho += weights[j] / wsum * std::exp(-0.5 * z * z) /
               (sigmas[j] * std::sqrt(2.0 * kPi));
      }
      v(i) = rho;
    }
    DensityTolerances tol;
    tol.boundary = 1e-6;
    const CpfTable table = build_cpf(DensityFrame(grid, 0.0, v, tol));

    if (table.cumulative(0) != 0.0) zero_start = false;
    for (Eigen::Index k = 1; k < n; ++k)
      if (table.cumulative(k) < table.cumulative(k - 1)) monotone = false;
    worst_mass = std::max(worst_mass, std::abs(table.total() - 1.0));
    if (std::abs(table.total() - 1.0) > 1e-3) mass_ok = false;
    for (int q = 0; q < 5; ++q) {
      const double p = p_dist(rng);
      const double back = cpf_at(table, invert_cpf(table, p));
      worst_round = std::max(worst_round, std::abs(back - p));
      if (std::abs(back - p) > 1e-12) round_trip = false;
    }
  }

  // O(dx^2) convergence of quantiles against the error-function oracle.
  auto normal_cdf = [](double x) { return 0.5 * (1.0 + std::erf(x / std::sqrt(2.0))); };
  auto quantile_oracle = [&](double p) {
    double lo = -10.0, hi = 10.0;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (normal_cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  auto max_err = [&](int n) {
    Grid1D grid(-6.0, 6.0, n);
    Eigen::ArrayXd v(n);
    for (Eigen::Index i = 0; i < n; ++i)
      v(i) = std::exp(-0.5 * grid.node(i) * grid.node(i)) / std::sqrt(2.0 * kPi);
    DensityTolerances tol;
    tol.boundary = 1e-5;
    const CpfTable table = build_cpf(DensityFrame(grid, 0.0, v, tol));
    double err = 0.0;
    for (double p = 0.05; p < 0.96; p += 0.05)
      err = std::max(err, std::abs(invert_cpf(table, p) - quantile_oracle(p)));
    return err;
  };
  const double ratio = max_err(61) / max_err(121);
  const bool converges = ratio >= 3.0;

  const bool ok = cases >= 1000 && monotone && zero_start && mass_ok && round_trip && converges;
  report(5, "CPF invariant property suite", ok,
         std::to_string(cases) + " cases, worst mass err " + fmt(worst_mass) +
             " <= 1e-3, worst round trip " + fmt(worst_round) +
             " <= 1e-12, refinement ratio " + fmt(ratio) + " >= 3");
}

// ---------------------------------------------------------------------------
// 6. Density-only velocity equals the guidance-law field on the free Gaussian.
void criterion_6() {
  const double a = kPi / 2.0;
  FreeGaussian model{a};
  Grid1D grid(-9.0, 9.0, 4801);
  const double dt = 1e-3;
  const double t_mid = 1.0;
  const auto series = sample_model(model, grid, t_mid - 2.0 * dt, dt, 5);

  const auto& rho = series.frame(2).values;
  const double peak = rho.maxCoeff();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < grid.n_nodes; i += 8) {
    if (rho(i) < 1e-3 * peak) continue;
    const double x = grid.node(i);
    const double v_density = density_velocity(series, 2, x);
    const double v_bohm = bohm_velocity(model, x, t_mid);
    worst = std::max(worst, std::abs(v_density - v_bohm));
  }
  const bool ok = worst <= 1e-3;
  report(6, "density-only velocity vs guidance law", ok,
         "max |v_rho - v_bohm| " + fmt(worst) + " <= 1e-3 where rho > 1e-3 max");
}

// ---------------------------------------------------------------------------
// 7. Stationarity and symmetry.
void criterion_7() {
  Grid1D grid(-8.0, 8.0, 161);
  Eigen::ArrayXd v(grid.n_nodes);
  for (Eigen::Index i = 0; i < grid.n_nodes; ++i)
    v(i) = std::exp(-0.5 * grid.node(i) * grid.node(i)) / std::sqrt(2.0 * kPi);
  std::vector<DensityFrame> frames;
  for (int k = 0; k < 12; ++k) frames.emplace_back(grid, 0.05 * k, v);
  DensitySeries stationary(std::move(frames));

  bool constant = true;
  for (double p : {0.15, 0.5, 0.85}) {
    const auto traj = quantile_trajectory(stationary, QuantileSpec::from_p(p));
    for (Eigen::Index k = 1; k < traj.n_samples(); ++k)
      if (traj.positions(k, 0) != traj.positions(0, 0)) constant = false;
  }

  double median_dev = 0.0;
  {
    FreeGaussian model{kPi / 2.0};
    Grid1D wide(-25.0, 25.0, 1001);
    const auto series = sample_model(model, wide, 0.0, 0.1, 31);
    const auto traj = quantile_trajectory(series, QuantileSpec::from_p(0.5));
    for (Eigen::Index k = 0; k < traj.n_samples(); ++k)
      median_dev = std::max(median_dev, std::abs(traj.positions(k, 0)));
  }
  {
    TwoSlit model{};
    Grid1D ygrid(-129.668, 129.668, 81);
    const auto series = sample_model(model, ygrid, 0.0, 2.5, 41);
    const auto traj = quantile_trajectory(series, QuantileSpec::from_p(0.5));
    for (Eigen::Index k = 0; k < traj.n_samples(); ++k)
      median_dev = std::max(median_dev, std::abs(traj.positions(k, 0)));
  }

  const bool ok = constant && median_dev <= 1e-10;
  report(7, "stationarity and symmetry", ok,
         std::string(constant ? "stationary trajectories exactly constant"
                              : "stationary drift FOUND") +
             ", symmetric median |x| " + fmt(median_dev) + " <= 1e-10");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
