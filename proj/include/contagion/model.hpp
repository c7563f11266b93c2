#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace contagion {

enum class WeightShape { linear };

/// Scalar knobs of the model. Defaults follow the reference parameter set:
/// 10 banks, 10 assets, 20% maximum interbank share with a linear ramp in
/// connectivity. eta (capital buffer) and q (standalone failure
/// probability) have no canonical values and are always overridable.
struct ModelParams {
    int n_banks = 10;
    int n_assets = 10;
    double eta = 0.05;     // capital buffer as fraction of total assets
    double q = 0.05;       // P(fail) of a single-asset bank
    double w_max = 0.2;    // interbank fraction of total assets at P=1
    WeightShape weight_shape = WeightShape::linear;
    double df = 1.5;       // Student-t degrees of freedom of the loss law
    std::vector<double> s_list = {1.0, 2.0, 3.0, 4.0};

    void validate() const;  // throws std::invalid_argument
    bool operator==(const ModelParams&) const = default;
};

/// A bank system: external asset holdings X (N x M) and interbank loans
/// L (N x N, zero diagonal), both expressed in units of the owning bank's
/// capital buffer. For a system built with capital buffer eta, every
/// bank's X row-sum plus L row-sum equals 1/eta.
struct ExposureSystem {
    Eigen::MatrixXd external;   // N x M
    Eigen::MatrixXd interbank;  // N x N

    int n_banks() const { return static_cast<int>(external.rows()); }
    int n_assets() const { return static_cast<int>(external.cols()); }

    /// Structural checks: shapes, non-negativity, zero diagonal.
    void validate() const;
    /// Structural checks plus the balance-sheet total: each row of
    /// X and L together sums to 1/eta within 1e-9.
    void validate(double eta) const;
};

/// One realization of per-asset fractional losses; entries never exceed 1
/// (an asset price cannot go below zero), negative entries are gains.
using LossVector = Eigen::VectorXd;

/// Solvency state: f[i] != 0 means bank i has failed.
using BankState = std::vector<std::uint8_t>;

BankState all_solvent(int n);
BankState all_failed(int n);
int failure_count(const BankState& f);
bool state_leq(const BankState& a, const BankState& b);  // componentwise a <= b

/// Least and greatest fixed points of the failure map at one loss vector.
/// lfp <= gfp componentwise; they differ exactly on multiple-behavior
/// regions, where the final state depends on initialization.
struct RegionSignature {
    BankState lfp;
    BankState gfp;
    bool multi() const { return lfp != gfp; }
    bool operator==(const RegionSignature&) const = default;
};

/// Asset-side loss of every bank, in capital-buffer units:
/// Y[i] = sum_j X[i][j] v[j] + sum_j L[i][j] f[j].
/// A failed borrower costs its creditor the full loan.
Eigen::VectorXd asset_losses(const ExposureSystem& sys, const LossVector& v,
                             const BankState& f);

/// One application of the failure map: f'[i] = (Y[i] >= 1).
/// The threshold is >= exactly; a bank losing precisely its buffer fails.
BankState step(const ExposureSystem& sys, const LossVector& v, const BankState& f);

struct CascadeResult {
    BankState state;
    int iterations;  // applications of the map until it stopped changing
};

/// Iterates the failure map from an arbitrary initial state until it is
/// stationary. The map is monotone, so from all-solvent or all-failed the
/// iteration terminates within N+1 applications.
CascadeResult cascade_from(const ExposureSystem& sys, const LossVector& v,
                           BankState init);

/// Fixed point reached from the all-solvent start (the canonical final
/// state of the system).
BankState cascade_lfp(const ExposureSystem& sys, const LossVector& v);

/// Fixed point reached from the all-failed start.
BankState cascade_gfp(const ExposureSystem& sys, const LossVector& v);

/// Systemic cost of K simultaneous failures: K^S, with S >= 1 controlling
/// how superlinear the social cost is. Throws for S < 1.
double cost(int failed_count, double s_exponent);

}  // namespace contagion
