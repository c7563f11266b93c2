#pragma once

#include <string>

#include "contagion/montecarlo.hpp"
#include "contagion/partition.hpp"

namespace contagion {

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double x);

/// Header `p,d,s,mean_cost,std_err,multi_rate,n_trials,n_samples`, rows
/// sorted by (p,d,s), '\n' newlines. Byte-stable for a given table.
void write_sweep_csv(const SweepTable& table, const std::string& path);
SweepTable read_sweep_csv(const std::string& path);

/// Long-format `p,d,mean_cost` slice for a single exponent S.
void write_heatmap_csv(const SweepTable& table, double s, const std::string& path);

void write_census_csv(const RegionCensus& census, const std::string& path);
void write_boundaries_csv(const std::vector<BoundarySegment>& segments,
                          const std::string& path);

/// Whitespace-separated decimal rows; all rows must have equal length.
Eigen::MatrixXd read_matrix(const std::string& path);
void write_matrix(const Eigen::MatrixXd& m, const std::string& path);

}  // namespace contagion
