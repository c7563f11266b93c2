#pragma once

#include <stdexcept>
#include <vector>

#include "contagion/model.hpp"
#include "contagion/rng.hpp"

namespace contagion {

/// Directed graph on n nodes; edge i->j means bank i lends to bank j.
struct DirectedGraph {
    int n = 0;
    std::vector<std::uint8_t> adj;  // row-major n*n, zero diagonal

    bool has_edge(int i, int j) const { return adj[static_cast<std::size_t>(i) * n + j] != 0; }
    int out_degree(int i) const;
    long edge_count() const;
};

/// Erdos-Renyi: each ordered pair (i,j), i != j, is a link independently
/// with probability p. Edges are drawn row by row, j ascending.
DirectedGraph gen_er_network(int n, double p, Rng& rng);

/// Interbank fraction of total assets as a function of connectivity.
/// Linear shape: w = w_max * p, so the maximum share is reached on the
/// complete network.
double interbank_weight(double p, double w_max, WeightShape shape);

/// Assembles the X, L pair from a network, an interbank share w and
/// row-stochastic portfolio weights. A connected bank splits w/eta buffer
/// units equally across its out-neighbors and scales its portfolio by
/// (1-w)/eta; an isolated bank has no one to lend to and puts the full
/// 1/eta into external assets.
ExposureSystem build_exposures(const DirectedGraph& g, double w, double eta,
                               const Eigen::MatrixXd& portfolio_weights);

/// Diverse diversification of a row-stochastic matrix: the mean L1
/// distance between normalized portfolios over ordered pairs,
///   D = 1/(2N(N-1)) sum_i sum_{l != i} sum_j |X'_ij - X'_lj|.
/// 0 for identical rows, 1 for pairwise disjoint ones.
double diversification(const Eigen::MatrixXd& portfolio_weights);

/// Uniform point on the standard simplex (normalized exponentials).
Eigen::VectorXd gen_seed(int n, Rng& rng);

/// Sorts n-1 positive raw draws descending into eps_2..eps_n and rescales
/// them by a common factor so the cyclic-shift portfolio matrix built from
/// them has diversification d_target. D is linear in the common scale, so
/// the factor is d_target / D(unit-scale matrix), with D measured on the
/// unit matrix directly. Returns the scaled eps_2..eps_n; eps_1 is their
/// sum by construction.
std::vector<double> scale_epsilons(std::vector<double> raw, double d_target);

/// Row k of the cyclic-shift construction: the seed plus the perturbation
/// (+eps_1, -eps_2, ..., -eps_n) rotated so +eps_1 falls on column k,
/// where eps_1 = sum(eps_tail). Rows sum to whatever the seed sums to.
Eigen::MatrixXd build_cyclic_portfolio(const Eigen::VectorXd& seed,
                                       const std::vector<double>& eps_tail);

class RetryExhaustedError : public std::runtime_error {
  public:
    RetryExhaustedError(const std::string& msg, int attempts)
        : std::runtime_error(msg), attempts_(attempts) {}
    int attempts() const { return attempts_; }

  private:
    int attempts_;
};

/// Random n x n row-stochastic matrix with diversification exactly
/// d_target (within 1e-9). Square case only. Draws raw eps uniformly,
/// rescales to the target, rejects draws whose largest eps exceeds 1/n
/// (no non-negative matrix exists for them), and samples the seed
/// uniformly from the feasible sub-simplex {s : s_j >= eps_2}, which
/// shrinks toward the uniform portfolio as d_target grows and is the
/// whole simplex at d_target = 0. Throws RetryExhaustedError after
/// max_retries rejected draws.
Eigen::MatrixXd gen_portfolios(int n, double d_target, Rng& rng,
                               int max_retries = 10000);

}  // namespace contagion
