#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "contagion/model.hpp"

namespace contagion {

/// Least/greatest fixed point pair at one loss vector.
RegionSignature classify_region(const ExposureSystem& sys, const LossVector& v);

struct GridSpec {
    double lo = -0.5;
    double hi = 1.0;
    int resolution = 400;  // points per axis, endpoints included

    bool operator==(const GridSpec&) const = default;
};

/// Tally of region signatures over a regular grid in loss space.
/// Signatures are packed as (lfp bits, gfp bits), bank i at bit i.
struct RegionCensus {
    std::map<std::pair<std::uint64_t, std::uint64_t>, long> counts;
    GridSpec grid;
    long total_points = 0;

    int n_signatures() const { return static_cast<int>(counts.size()); }
    int n_multi() const;           // distinct signatures with lfp != gfp
    int n_distinct_lfp() const;
};

std::uint64_t pack_state(const BankState& f);
BankState unpack_state(std::uint64_t bits, int n);

/// Classifies every point of the regular grid [lo,hi]^M. Small systems
/// only: throws if 2^N * resolution^M exceeds the budget.
RegionCensus census(const ExposureSystem& sys, const GridSpec& grid,
                    double budget = 1e9);

/// Upper bound on the number of multiple-behavior regions:
/// sum_{i=2}^{n} C(n,i) 2^(n-i)  (= 3^n - 2^n - n 2^(n-1)).
std::uint64_t multi_behavior_bound(int n);

struct WitnessSearchConfig {
    int n_directions = 64;  // random positive-simplex directions (first is uniform)
    int n_steps = 256;      // t steps per direction
    std::uint64_t seed = 0;
};

/// Searches rays v = t*u, u on the positive simplex, for a loss vector
/// whose region is all-well/all-fail multiple-behavior (lfp empty, gfp
/// full). Returns the first hit or nullopt; exhausting the budget is a
/// legitimate "none", not an error.
std::optional<LossVector> find_all_fail_witness(const ExposureSystem& sys,
                                                const WitnessSearchConfig& cfg = {});

/// One bank's failure boundary in a 2-asset system, given a fixed failure
/// set of the other banks: the segment of
///   X[i][0] v0 + X[i][1] v1 = 1 - (L f)[i]
/// clipped to the [lo,hi]^2 window. A zero X row has no boundary and is
/// returned with degenerate = true; a line entirely outside the window
/// yields inside_window = false.
struct BoundarySegment {
    int bank = 0;
    BankState context;
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool degenerate = false;
    bool inside_window = true;
};

/// Boundaries of every bank for one failure-set context. M = 2 only.
std::vector<BoundarySegment> boundary_segments(const ExposureSystem& sys,
                                               const BankState& f_context,
                                               double lo, double hi);

}  // namespace contagion
