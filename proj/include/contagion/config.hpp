#pragma once

#include <stdexcept>
#include <string>

#include "contagion/montecarlo.hpp"
#include "contagion/partition.hpp"

namespace contagion {

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full run configuration: model parameters, sweep protocol and
/// command-specific options, parsed from a line-oriented `key = value`
/// file (# starts a comment). Unknown keys and out-of-range values are
/// rejected with the offending key and line number.
struct RunConfig {
    ModelParams params;

    std::vector<double> p_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> d_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    int n_trials = 100;
    int n_samples = 2000;
    std::uint64_t master_seed = 12345;
    int max_retries = 10000;

    std::string loss_law = "student";  // student | normal
    int threads = 1;                   // 0 = hardware concurrency
    std::string out_dir = "out";

    // single-system commands (partition, gen)
    double system_p = 0.5;
    double system_d = 0.2;
    GridSpec grid;

    SweepConfig sweep_config() const;
    std::unique_ptr<LossLaw> make_loss_law() const;

    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& cfg);

}  // namespace contagion
