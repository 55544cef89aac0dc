#pragma once

// Plain-text key=value configs, CSV series/frames, and the JSON sidecar.

#include <iosfwd>
#include <string>

#include "escape/analysis.hpp"
#include "escape/state.hpp"

namespace escape {

// "inf" / "-inf" / decimal number.
RobinParameter parse_eta(const std::string& value);

// Parses a key=value config. Recognized keys: eta ("inf", "-inf", or a
// number), statistics (boson|fermion), n_particles, q, sigma (comma lists),
// t_min, t_max, n_times, grid_density, output. Blank lines and '#' comments
// are skipped; unknown keys are errors with file:line positions.
RunConfig parse_config(std::istream& in, const std::string& filename);
RunConfig load_config(const std::string& path);

void write_series_csv(const std::string& path, const SurvivalSeries& series);
// Reads a "t,P" CSV (header optional).
SurvivalSeries read_series_csv(const std::string& path);

// JSON with the full config, diagnostics, and the fit next to the CSV.
void write_sidecar_json(const std::string& path, const RunConfig& config,
                        const SurvivalSeries& series, const DecayFit& fit);

std::string fit_to_json(const DecayFit& fit);

// One density frame: header "x,re,im,density".
void write_density_frame(const std::string& path, const EvolvedState& state);

}  // namespace escape
