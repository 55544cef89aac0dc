#pragma once

// Experiment runner and asymptotics: survival-probability time series on
// log-spaced grids, power-law/saturation fits, the predicted exponent matrix
// with numerical verification for N = 1, 2, and the eta < 0 saturation
// constant.

#include <string>
#include <vector>

#include "escape/many_body.hpp"
#include "escape/types.hpp"

namespace escape {

struct SeriesMeta {
  RobinParameter eta = RobinParameter::finite(0.0);
  Statistics statistics = Statistics::kBoson;
  int n_particles = 1;
  std::vector<double> q;
  std::vector<double> sigma;
  double sym_norm = 1.0;             // full-line norm of the symmetrized state
  double containment_deficit = 0.0;  // initial mass outside (0,1)
  double t_a = 0.0;                  // asymptotic onset, max_i q_i / pi
};

struct SurvivalSeries {
  std::vector<double> times;          // sorted, > 0
  std::vector<double> probabilities;  // same length
  SeriesMeta meta;
};

struct DecayFit {
  enum class Kind { kPowerLaw, kSaturation, kIndeterminate };
  Kind kind = Kind::kIndeterminate;
  double alpha = 0.0;  // P ~ t^-alpha when kind == kPowerLaw
  double r_squared = 0.0;
  double constant = 0.0;  // tail mean when kind == kSaturation
  double last_decade_slope = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  int n_points = 0;
};

struct FitOptions {
  double window_lo = 0.0;  // 0 => 4 * t_a
  double window_hi = 0.0;  // 0 => last sample
  double p_floor = 1e-18;  // samples below this are precision-limited; dropped
  double r2_threshold = 0.99;
  double saturation_slope = -0.1;  // last-decade log-log slope above => saturated
};

struct RunConfig {
  RobinParameter eta = RobinParameter::finite(0.0);
  Statistics statistics = Statistics::kBoson;
  int n_particles = 1;
  std::vector<double> q{0.6};
  std::vector<double> sigma{0.1};
  double t_min = 0.0;  // 0 => 2 * t_a
  double t_max = 0.0;  // 0 => 100 * t_a
  int n_times = 60;
  double grid_density = 2000.0;  // frame dumps only
  std::string output;            // CSV path; empty => stdout summary only
  double tol = 1e-9;             // quadrature tolerance (internal)
};

// Validates the config and evaluates P^(N) on the log-spaced time grid.
// Deterministic for a fixed config. Quadrature failures carry the offending t.
SurvivalSeries run_experiment(const RunConfig& config);

// Least-squares log-log fit on the tail window. Saturation wins when the
// last-decade slope is above opts.saturation_slope; a power law requires
// r^2 >= opts.r2_threshold; otherwise the fit is reported indeterminate.
// Requires >= 12 usable samples in the window.
DecayFit fit_decay(const SurvivalSeries& series, const FitOptions& opts = {});

// Saturation level of P^(1) for eta < 0 applied to a Gaussian packet,
// to leading order in sigma: C = 4 sqrt(pi) |eta| sigma e^{-2q|eta|}
// (1 - e^{-2|eta|}). Throws std::domain_error for eta >= 0.
double saturation_constant(double eta, const GaussianPacket& psi0);

struct Table1Cell {
  std::string regime;      // "eta<0", "eta=0", "eta>0", "eta=+-inf"
  std::string population;  // "1", "2 bosons", ..., "N fermions"
  std::string predicted;   // "const", "t^-3", "t^-N(2N+1)", ...
  bool predicted_saturation = false;
  double predicted_alpha = 0.0;  // meaningful when !predicted_saturation
  bool has_fit = false;
  DecayFit fit;
  bool pass = false;
  bool slope_consistent_only = false;  // precision-limited steep decay
};

struct Table1Report {
  std::vector<Table1Cell> cells;
  std::string to_text() const;
  bool all_pass() const;
};

// Predicted exponent matrix {eta<0, eta=0, eta>0, eta=+-inf} x
// {1, 2 bosons, 2 fermions, N bosons, N fermions}, with fitted exponents and
// pass flags for the numerically verified columns (N <= max_n_numeric).
Table1Report table1_report(int max_n_numeric = 2, double tol = 1e-9);

}  // namespace escape
