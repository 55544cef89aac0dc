// escape: survival-probability experiments for quantum escape from the unit
// interval with a Robin wall at the origin.
//
//   escape run --config FILE        time series + decay fit + JSON sidecar
//   escape fit SERIES.csv           refit an exported series
//   escape table1 [--max-n 2]       predicted vs fitted exponent matrix
//   escape frames --eta V --times ...  density frame dumps

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "escape/analysis.hpp"
#include "escape/io.hpp"
#include "escape/state.hpp"

namespace {

std::string sidecar_path(const std::string& csv_path) {
  const auto dot = csv_path.rfind('.');
  const std::string stem =
      dot == std::string::npos ? csv_path : csv_path.substr(0, dot);
  return stem + ".json";
}

int cmd_run(const std::string& config_path) {
  escape::RunConfig config = escape::load_config(config_path);
  const auto series = escape::run_experiment(config);
  const auto fit = escape::fit_decay(series);

  const std::string out = config.output.empty() ? "series.csv" : config.output;
  escape::write_series_csv(out, series);
  escape::write_sidecar_json(sidecar_path(out), config, series, fit);

  std::printf("eta=%s N=%d %s: %zu samples on [%g, %g]\n",
              config.eta.label().c_str(), config.n_particles,
              config.statistics == escape::Statistics::kFermion ? "fermions"
                                                                : "bosons",
              series.times.size(), series.times.front(), series.times.back());
  std::printf("%s\n", escape::fit_to_json(fit).c_str());
  std::printf("wrote %s and %s\n", out.c_str(), sidecar_path(out).c_str());
  return 0;
}

int cmd_fit(const std::string& csv_path, double window_lo, double window_hi,
            double t_a, double p_floor) {
  auto series = escape::read_series_csv(csv_path);
  if (t_a > 0.0) series.meta.t_a = t_a;
  escape::FitOptions opts;
  opts.window_lo = window_lo;
  opts.window_hi = window_hi;
  if (p_floor > 0.0) opts.p_floor = p_floor;
  if (window_lo == 0.0 && t_a == 0.0) {
    // bare CSV carries no t_a; fit the whole series unless told otherwise
    opts.window_lo = series.times.front();
  }
  const auto fit = escape::fit_decay(series, opts);
  std::printf("%s\n", escape::fit_to_json(fit).c_str());
  return 0;
}

int cmd_table1(int max_n, bool symbolic) {
  const auto report = escape::table1_report(symbolic ? 0 : max_n);
  std::printf("%s", report.to_text().c_str());
  if (!symbolic && !report.all_pass()) {
    std::printf("one or more fitted cells missed their tolerance\n");
    return 1;
  }
  return 0;
}

int cmd_frames(const std::string& eta_text, const std::vector<double>& times,
               double q, double sigma, double x_max, double grid_density,
               const std::string& out_dir) {
  const escape::RobinParameter eta = escape::parse_eta(eta_text);
  const escape::GaussianPacket packet{q, sigma};
  const escape::SpatialGrid grid = escape::SpatialGrid::uniform(x_max, grid_density);
  for (double t : times) {
    const auto state = escape::evolve(packet, eta, t, grid);
    char name[256];
    std::snprintf(name, sizeof name, "%s/frame_eta%s_t%g.csv", out_dir.c_str(),
                  eta.label().c_str(), t);
    escape::write_density_frame(name, state);
    std::printf("wrote %s\n", name);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum escape from the unit interval with a Robin wall"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "run a survival-probability experiment");
  run->add_option("--config", config_path, "key=value config file")->required();

  std::string series_path;
  double window_lo = 0.0, window_hi = 0.0, t_a = 0.0, p_floor = 0.0;
  auto* fit = app.add_subcommand("fit", "fit a decay law to an exported series");
  fit->add_option("series", series_path, "CSV with t,P columns")->required();
  fit->add_option("--window-lo", window_lo, "fit window start (default: 4 t_a)");
  fit->add_option("--window-hi", window_hi, "fit window end (default: last sample)");
  fit->add_option("--t-a", t_a, "asymptotic onset used for the default window");
  fit->add_option("--p-floor", p_floor, "drop samples below this probability");

  int max_n = 2;
  bool symbolic = false;
  auto* table = app.add_subcommand("table1", "predicted vs fitted exponent matrix");
  table->add_option("--max-n", max_n, "verify numerically up to this N (<= 2)")
      ->check(CLI::Range(0, 2));
  table->add_flag("--symbolic", symbolic, "skip the numerical fits");

  std::string eta_text = "0";
  std::vector<double> times;
  double q = 0.6, sigma = 0.1, x_max = 2.0, grid_density = 2000.0;
  std::string out_dir = ".";
  auto* frames = app.add_subcommand("frames", "density frame dumps");
  frames->add_option("--eta", eta_text, "Robin parameter (number, inf, -inf)")
      ->required();
  frames->add_option("--times", times, "frame times")->required()->delimiter(',');
  frames->add_option("--q", q, "packet center");
  frames->add_option("--sigma", sigma, "packet width");
  frames->add_option("--x-max", x_max, "grid extent");
  frames->add_option("--grid-density", grid_density, "points per unit length");
  frames->add_option("--out-dir", out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config_path);
    if (*fit) return cmd_fit(series_path, window_lo, window_hi, t_a, p_floor);
    if (*table) return cmd_table1(max_n, symbolic);
    if (*frames)
      return cmd_frames(eta_text, times, q, sigma, x_max, grid_density, out_dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "escape: %s\n", e.what());
    return 1;
  }
  return 0;
}
