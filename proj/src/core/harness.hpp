#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schemes.hpp"

namespace fqnm {

inline constexpr const char* kArtifactVersion = "0.1.0";

struct ExperimentConfig {
    std::string experiment;
    std::size_t n_cells = 0;
    double delta = 0.0;
    double cfl = 0.0;
    double t_final = 0.0;
    double gamma = 1.4;
    double lambda = 0.0;
    double advection_speed = 1.0;
    double window = 0.1;          // shock-zoom half-width
    std::int64_t n_steps = 0;     // audit
    std::int64_t q_range = 0;     // monotone-check
    std::uint64_t seed = 0;
    std::string model = "burgers";
    std::vector<Scheme> schemes;
    std::vector<double> deltas;   // convergence
    std::string out_dir = ".";

    // key = value pairs as resolved (defaults applied), for the manifest.
    std::vector<std::pair<std::string, std::string>> resolved;
};

// Line-oriented "key = value" format, '#' comments. Unknown keys,
// duplicates, and type mismatches are ConfigErrors with line numbers.
ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& origin = "<string>");

// Names and required/optional keys for `fqnm-lab list`.
std::string experiment_catalog();

// Runs the configured experiment, writing <out_dir>/<experiment>.csv
// plus a manifest companion. Throws on any invariant breach.
void run_experiment(const ExperimentConfig& cfg);

}  // namespace fqnm
