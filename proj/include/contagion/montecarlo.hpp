#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "contagion/distributions.hpp"
#include "contagion/model.hpp"
#include "contagion/rng.hpp"

namespace contagion {

enum class StreamRole : std::uint64_t { network = 1, portfolio = 2, losses = 3 };

/// Reproducible, statistically independent stream for one (cell, trial,
/// role) coordinate. Workers never share streams, so sweep results do not
/// depend on scheduling.
Rng derive_stream(std::uint64_t master_seed, std::size_t p_index, std::size_t d_index,
                  std::size_t trial_index, StreamRole role);

struct SweepConfig {
    std::vector<double> p_grid;
    std::vector<double> d_grid;
    std::vector<double> s_list;
    int n_trials = 100;
    int n_samples = 2000;
    std::uint64_t master_seed = 12345;
    ModelParams params;
    int max_retries = 10000;

    void validate() const;
};

struct SweepRow {
    double p = 0, d = 0, s = 0;
    double mean_cost = 0;
    double std_err = 0;
    double multi_rate = 0;
    long n_trials = 0;
    long n_samples = 0;
};

/// One row per (p, d, s), sorted by (p, d, s).
struct SweepTable {
    std::vector<SweepRow> rows;
};

struct CostEstimate {
    std::vector<double> mean_cost_per_s;  // aligned with the s_list passed in
    double multi_rate = 0;                // fraction of samples with lfp != gfp
    std::vector<long> k_histogram;        // failure counts of the lfp, size N+1
};

/// Monte Carlo estimate of the expected systemic cost for each exponent S:
/// the mean over loss samples of K^S, where K is the number of failures in
/// the least fixed point (system initialized all-solvent). The regions of
/// loss space partition it, so this estimates sum_i P_i K_i^S. Also
/// reports how often the sample fell in a multiple-behavior region.
CostEstimate expected_cost(const ExposureSystem& sys, const LossLaw& law,
                           int n_samples, std::span<const double> s_list, Rng& rng);

/// Convenience overload for the calibrated Student-t law.
CostEstimate expected_cost(const ExposureSystem& sys, const LossModel& model,
                           int n_samples, std::span<const double> s_list, Rng& rng);

/// Full (P, D) sweep: per cell and trial, generate a network, portfolio
/// matrix and exposures, then estimate cost over n_samples loss vectors.
/// Cell statistics are means over trials with their standard errors.
/// Deterministic for a fixed config: streams are derived per (cell,
/// trial, role) and the reduction runs in trial order, so the result is
/// identical for any n_threads (0 = hardware concurrency).
SweepTable sweep(const SweepConfig& cfg, const LossLaw& law, int n_threads = 1);

/// d of the minimum mean cost on the (p, s) slice; ties go to smaller d.
double find_d_opt(const SweepTable& table, double p, double s);

}  // namespace contagion
