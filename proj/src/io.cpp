#include "escape/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace escape {
namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_list(const std::string& value, const std::string& where) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::runtime_error(where + ": empty list element");
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) {
      throw std::runtime_error(where + ": bad number '" + item + "'");
    }
  }
  if (out.empty()) throw std::runtime_error(where + ": empty list");
  return out;
}

double parse_number(const std::string& value, const std::string& where) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(where + ": bad number '" + value + "'");
  }
}

nlohmann::json eta_to_json(const RobinParameter& eta) {
  if (eta.is_dirichlet_limit()) return "inf";
  return eta.eta();
}

}  // namespace

RobinParameter parse_eta(const std::string& value) {
  if (value == "inf" || value == "-inf" || value == "+inf") {
    return RobinParameter::dirichlet_limit();
  }
  return RobinParameter::finite(parse_number(value, "eta"));
}

RunConfig parse_config(std::istream& in, const std::string& filename) {
  RunConfig config;
  std::string line;
  int lineno = 0;
  bool q_seen = false, sigma_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = filename + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(where + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw std::runtime_error(where + ": empty value");

    if (key == "eta") {
      try {
        config.eta = parse_eta(value);
      } catch (const std::exception&) {
        throw std::runtime_error(where + ": bad eta '" + value + "'");
      }
    } else if (key == "statistics") {
      if (value == "boson" || value == "bosons") {
        config.statistics = Statistics::kBoson;
      } else if (value == "fermion" || value == "fermions") {
        config.statistics = Statistics::kFermion;
      } else {
        throw std::runtime_error(where + ": statistics must be boson or fermion");
      }
    } else if (key == "n_particles") {
      config.n_particles = static_cast<int>(parse_number(value, where));
    } else if (key == "q") {
      config.q = parse_list(value, where);
      q_seen = true;
    } else if (key == "sigma") {
      config.sigma = parse_list(value, where);
      sigma_seen = true;
    } else if (key == "t_min") {
      config.t_min = parse_number(value, where);
    } else if (key == "t_max") {
      config.t_max = parse_number(value, where);
    } else if (key == "n_times") {
      config.n_times = static_cast<int>(parse_number(value, where));
    } else if (key == "grid_density") {
      config.grid_density = parse_number(value, where);
    } else if (key == "output") {
      config.output = value;
    } else {
      throw std::runtime_error(where + ": unknown key '" + key + "'");
    }
  }
  if (config.n_particles > 1 && (!q_seen || !sigma_seen)) {
    throw std::runtime_error(filename + ": q and sigma lists required for N > 1");
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  return parse_config(in, path);
}

void write_series_csv(const std::string& path, const SurvivalSeries& series) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "t,P\n";
  out.precision(12);
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    out << series.times[i] << "," << series.probabilities[i] << "\n";
  }
}

SurvivalSeries read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open series file " + path);
  SurvivalSeries series;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (lineno == 1 && line.find_first_not_of("tP, ") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 't,P'");
    }
    const std::string where = path + ":" + std::to_string(lineno);
    series.times.push_back(parse_number(trim(line.substr(0, comma)), where));
    series.probabilities.push_back(parse_number(trim(line.substr(comma + 1)), where));
  }
  if (series.times.empty()) throw std::runtime_error(path + ": no samples");
  // a bare CSV carries no t_a; 0 marks it unknown to fit_decay
  series.meta.t_a = 0.0;
  return series;
}

std::string fit_to_json(const DecayFit& fit) {
  nlohmann::json j;
  switch (fit.kind) {
    case DecayFit::Kind::kPowerLaw:
      j["kind"] = "power_law";
      break;
    case DecayFit::Kind::kSaturation:
      j["kind"] = "saturation";
      break;
    default:
      j["kind"] = "indeterminate";
  }
  j["alpha"] = fit.alpha;
  j["r_squared"] = fit.r_squared;
  j["constant"] = fit.constant;
  j["last_decade_slope"] = fit.last_decade_slope;
  j["window"] = {fit.window_lo, fit.window_hi};
  j["n_points"] = fit.n_points;
  return j.dump(2);
}

void write_sidecar_json(const std::string& path, const RunConfig& config,
                        const SurvivalSeries& series, const DecayFit& fit) {
  nlohmann::json j;
  j["config"]["eta"] = eta_to_json(config.eta);
  j["config"]["statistics"] =
      config.statistics == Statistics::kFermion ? "fermion" : "boson";
  j["config"]["n_particles"] = config.n_particles;
  j["config"]["q"] = config.q;
  j["config"]["sigma"] = config.sigma;
  j["config"]["t_min"] = series.times.front();
  j["config"]["t_max"] = series.times.back();
  j["config"]["n_times"] = series.times.size();
  j["diagnostics"]["t_a"] = series.meta.t_a;
  j["diagnostics"]["symmetrized_norm"] = series.meta.sym_norm;
  j["diagnostics"]["containment_deficit"] = series.meta.containment_deficit;
  j["fit"] = nlohmann::json::parse(fit_to_json(fit));
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void write_density_frame(const std::string& path, const EvolvedState& state) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "x,re,im,density\n";
  out.precision(10);
  for (int i = 0; i < state.grid.n_points; ++i) {
    const ComplexAmplitude v = state.values[i];
    out << state.grid.node(i) << "," << v.real() << "," << v.imag() << ","
        << std::norm(v) << "\n";
  }
}

}  // namespace escape
