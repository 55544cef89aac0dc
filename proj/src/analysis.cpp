#include "escape/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "escape/parallel.hpp"

namespace escape {
namespace {

constexpr double kSqrtPi = 1.77245385090551602730;

void validate_config(const RunConfig& c) {
  const std::size_t n = static_cast<std::size_t>(c.n_particles);
  if (c.n_particles < 1 || c.n_particles > 6) {
    throw std::invalid_argument("config: n_particles must be in [1, 6]");
  }
  if (c.q.size() != n || c.sigma.size() != n) {
    throw std::invalid_argument("config: q and sigma must list n_particles values");
  }
  if (c.n_times < 1) throw std::invalid_argument("config: empty time grid");
  for (std::size_t i = 0; i < n; ++i) validate_packet({c.q[i], c.sigma[i]});
  if (c.t_min != 0.0 && c.t_max != 0.0 && !(c.t_min < c.t_max)) {
    throw std::invalid_argument("config: t_min must be below t_max");
  }
}

double series_t_a(const std::vector<double>& q) {
  double qm = 0.0;
  for (double v : q) qm = std::max(qm, v);
  return qm / 3.14159265358979323846;
}

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

LogLogFit least_squares_loglog(const std::vector<double>& ts,
                               const std::vector<double>& ps) {
  const std::size_t n = ts.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(ts[i]);
    const double y = std::log(ps[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  LogLogFit f;
  const double den = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0.0;
  const double mean_y = sy / n;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(ts[i]);
    const double y = std::log(ps[i]);
    const double e = y - (f.slope * x + f.intercept);
    ss_res += e * e;
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  f.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return f;
}

}  // namespace

SurvivalSeries run_experiment(const RunConfig& config) {
  validate_config(config);
  SurvivalSeries series;
  auto& meta = series.meta;
  meta.eta = config.eta;
  meta.statistics = config.statistics;
  meta.n_particles = config.n_particles;
  meta.q = config.q;
  meta.sigma = config.sigma;
  meta.t_a = series_t_a(config.q);

  OrbitalSet orbitals;
  orbitals.statistics = config.statistics;
  for (int i = 0; i < config.n_particles; ++i) {
    orbitals.packets.push_back({config.q[i], config.sigma[i]});
  }
  meta.sym_norm = symmetrized_initial_norm(orbitals);
  meta.containment_deficit = initial_containment_deficit(orbitals, config.eta);

  const double t_lo = config.t_min > 0.0 ? config.t_min : 2.0 * meta.t_a;
  const double t_hi = config.t_max > 0.0 ? config.t_max : 100.0 * meta.t_a;
  const int n = config.n_times;
  series.times.resize(n);
  series.probabilities.resize(n);
  const double ratio = t_hi / t_lo;
  for (int i = 0; i < n; ++i) {
    series.times[i] = n == 1 ? t_lo : t_lo * std::pow(ratio, double(i) / (n - 1));
  }
  parallel_for(n, [&](std::size_t i) {
    const double t = series.times[i];
    series.probabilities[i] =
        config.n_particles == 1
            ? survival_1(orbitals.packets[0], config.eta, t, config.tol)
            : survival_N_overlap(orbitals, config.eta, t, config.tol);
  });
  return series;
}

DecayFit fit_decay(const SurvivalSeries& series, const FitOptions& opts) {
  if (series.times.size() != series.probabilities.size()) {
    throw std::invalid_argument("fit_decay: length mismatch");
  }
  DecayFit fit;
  fit.window_lo = opts.window_lo > 0.0 ? opts.window_lo
                  : series.meta.t_a > 0.0 ? 4.0 * series.meta.t_a
                                          : series.times.front();
  // never fit a power law before the asymptotic regime can exist
  fit.window_lo = std::max(fit.window_lo, 2.0 * series.meta.t_a);
  fit.window_hi = opts.window_hi > 0.0 ? opts.window_hi : series.times.back();

  std::vector<double> ts, ps;
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    const double t = series.times[i];
    const double p = series.probabilities[i];
    if (t >= fit.window_lo && t <= fit.window_hi && p > opts.p_floor) {
      ts.push_back(t);
      ps.push_back(p);
    }
  }
  fit.n_points = static_cast<int>(ts.size());
  if (fit.n_points < 12) {
    throw std::invalid_argument("fit_decay: fewer than 12 samples in the fit window");
  }
  fit.window_hi = ts.back();

  const LogLogFit full = least_squares_loglog(ts, ps);
  fit.r_squared = full.r_squared;

  // last decade of the usable window
  std::vector<double> tail_t, tail_p;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] >= ts.back() / 10.0) {
      tail_t.push_back(ts[i]);
      tail_p.push_back(ps[i]);
    }
  }
  double tail_mean = 0.0;
  for (double p : tail_p) tail_mean += p;
  tail_mean /= tail_p.size();
  fit.constant = tail_mean;
  fit.last_decade_slope =
      tail_t.size() >= 3 ? least_squares_loglog(tail_t, tail_p).slope : full.slope;

  if (fit.last_decade_slope > opts.saturation_slope) {
    fit.kind = DecayFit::Kind::kSaturation;
    fit.alpha = -full.slope;
    return fit;
  }
  fit.alpha = -full.slope;
  fit.kind = full.r_squared >= opts.r2_threshold ? DecayFit::Kind::kPowerLaw
                                                 : DecayFit::Kind::kIndeterminate;
  return fit;
}

double saturation_constant(double eta, const GaussianPacket& psi0) {
  if (!(eta < 0.0)) throw std::domain_error("saturation_constant: eta must be < 0");
  validate_packet(psi0);
  const double a = -eta;
  return 4.0 * kSqrtPi * a * psi0.sigma * std::exp(-2.0 * psi0.q * a) *
         (1.0 - std::exp(-2.0 * a));
}

namespace {

struct CellSpec {
  const char* regime;
  RobinParameter eta;
  const char* predicted[5];  // columns: 1, 2 bos, 2 fer, N bos, N fer
  double alpha[3];           // numeric columns; -1 => saturation
};

const char* kPopulations[5] = {"1", "2 bosons", "2 fermions", "N bosons",
                               "N fermions"};

std::vector<CellSpec> table_rows() {
  return {
      {"eta<0", RobinParameter::finite(-2.0),
       {"const", "const", "t^-3", "const", "t^((1-N)(2N-1))"},
       {-1.0, -1.0, 3.0}},
      {"eta=0", RobinParameter::finite(0.0),
       {"t^-1", "t^-2", "t^-6", "t^-N", "t^(-N(2N-1))"},
       {1.0, 2.0, 6.0}},
      {"eta>0", RobinParameter::finite(2.0),
       {"t^-3", "t^-6", "t^-10", "t^-3N", "t^(-N(2N+1))"},
       {3.0, 6.0, 10.0}},
      {"eta=+-inf", RobinParameter::dirichlet_limit(),
       {"t^-3", "t^-6", "t^-10", "t^-3N", "t^(-N(2N+1))"},
       {3.0, 6.0, 10.0}},
  };
}

// Pinned acceptance tolerances for the fitted exponents.
double alpha_tolerance(int column, const CellSpec& row) {
  if (column == 0) return row.alpha[0] == 1.0 ? 0.1 : 0.15;
  if (column == 1) return row.alpha[1] == 2.0 ? 0.2 : 0.4;
  // two fermions
  if (row.alpha[2] == 3.0) return 0.3;
  if (row.alpha[2] == 6.0) return 0.4;
  return 1.0;  // steep t^-10 cell: slope-consistent window
}

// Fit-window parameters per cell. Power-law cells fit [40 t_a, 600 t_a],
// beyond the finite-eta transient ~1/(eta^2 t). Steep t^-10 cells live on a
// precision-limited early window instead: P ~ t^-10 reaches the double-
// precision quadrature floor by t ~ 5.
struct CellRun {
  double t_min_ta = 2.0, t_max_ta = 600.0, window_lo_ta = 40.0;
  double tol = 1e-9, p_floor = 1e-18;
};

CellRun cell_run_parameters(double predicted_alpha, bool dirichlet) {
  CellRun r;
  if (predicted_alpha >= 10.0) {
    r.t_max_ta = 100.0;
    r.tol = dirichlet ? 1e-11 : 1e-12;
    r.p_floor = r.tol;
    r.window_lo_ta = dirichlet ? 4.0 : 10.0;
  } else if (predicted_alpha >= 6.0) {
    r.tol = 1e-10;
    r.p_floor = 1e-13;
  }
  return r;
}

}  // namespace

Table1Report table1_report(int max_n_numeric, double tol) {
  if (max_n_numeric > 2) {
    throw std::invalid_argument("table1_report: numeric verification is N <= 2");
  }
  Table1Report report;
  const GaussianPacket single{0.6, 0.1};
  const std::vector<GaussianPacket> pair{{0.3, 0.05}, {0.7, 0.05}};

  for (const auto& row : table_rows()) {
    for (int col = 0; col < 5; ++col) {
      Table1Cell cell;
      cell.regime = row.regime;
      cell.population = kPopulations[col];
      cell.predicted = row.predicted[col];
      if (col < 3) {
        cell.predicted_saturation = row.alpha[col] < 0.0;
        cell.predicted_alpha = std::max(0.0, row.alpha[col]);
      } else {
        cell.predicted_saturation = std::string(row.predicted[col]) == "const";
      }

      const bool numeric =
          (col == 0 && max_n_numeric >= 1) || (col > 0 && col < 3 && max_n_numeric >= 2);
      if (numeric) {
        RunConfig config;
        config.eta = row.eta;
        if (col == 0) {
          config.n_particles = 1;
          config.q = {single.q};
          config.sigma = {single.sigma};
        } else {
          config.n_particles = 2;
          config.statistics = col == 1 ? Statistics::kBoson : Statistics::kFermion;
          config.q = {pair[0].q, pair[1].q};
          config.sigma = {pair[0].sigma, pair[1].sigma};
        }
        const CellRun params = cell_run_parameters(
            cell.predicted_saturation ? 0.0 : cell.predicted_alpha,
            row.eta.is_dirichlet_limit());
        const double ta = series_t_a(config.q);
        config.n_times = 75;
        config.t_min = params.t_min_ta * ta;
        config.t_max = params.t_max_ta * ta;
        config.tol = std::min(tol, params.tol);
        FitOptions fopts;
        fopts.window_lo = params.window_lo_ta * ta;
        fopts.p_floor = params.p_floor;
        cell.slope_consistent_only =
            !cell.predicted_saturation && cell.predicted_alpha >= 10.0;
        const SurvivalSeries series = run_experiment(config);
        cell.fit = fit_decay(series, fopts);
        cell.has_fit = true;

        if (cell.predicted_saturation) {
          cell.pass = cell.fit.kind == DecayFit::Kind::kSaturation;
          if (cell.pass && col == 0) {
            const double c = saturation_constant(row.eta.eta(), single);
            cell.pass = std::abs(cell.fit.constant / c - 1.0) <= 0.15;
          }
        } else {
          const double tolerance = alpha_tolerance(col, row);
          const bool alpha_ok =
              std::abs(cell.fit.alpha - cell.predicted_alpha) <= tolerance;
          if (cell.slope_consistent_only) {
            cell.pass = alpha_ok;
          } else {
            cell.pass = alpha_ok && cell.fit.kind == DecayFit::Kind::kPowerLaw;
          }
        }
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

std::string Table1Report::to_text() const {
  std::ostringstream os;
  os << "asymptotic survival P^(N)(t), predicted vs fitted\n";
  std::string regime;
  for (const auto& cell : cells) {
    if (cell.regime != regime) {
      regime = cell.regime;
      os << regime << "\n";
    }
    os << "  " << cell.population << ": " << cell.predicted;
    if (cell.has_fit) {
      if (cell.fit.kind == DecayFit::Kind::kSaturation) {
        os << "  [fit: saturation at " << cell.fit.constant
           << ", last-decade slope " << cell.fit.last_decade_slope << "]";
      } else {
        os << "  [fit: alpha = " << cell.fit.alpha << ", r^2 = " << cell.fit.r_squared
           << (cell.slope_consistent_only ? ", slope-consistent window" : "") << "]";
      }
      os << (cell.pass ? "  PASS" : "  FAIL");
    }
    os << "\n";
  }
  return os.str();
}

bool Table1Report::all_pass() const {
  for (const auto& cell : cells) {
    if (cell.has_fit && !cell.pass) return false;
  }
  return true;
}

}  // namespace escape
