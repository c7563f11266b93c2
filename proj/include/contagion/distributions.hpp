#pragma once

#include <memory>
#include <string>

#include "contagion/model.hpp"
#include "contagion/rng.hpp"

namespace contagion {

/// Regularized incomplete beta function I_x(a,b), continued-fraction
/// evaluation (modified Lentz).
double regularized_incomplete_beta(double a, double b, double x);

/// Student-t CDF with df degrees of freedom. +-inf map to 1/0.
double t_cdf(double x, double df);

/// Inverse of t_cdf by bracketing bisection; |t_cdf(result) - p| <= 1e-10.
double t_quantile(double p, double df);

double normal_cdf(double x);
double normal_quantile(double p);

/// Scale calibration for the loss law 1 - e^(T/alpha): a bank invested in
/// a single asset holds 1/eta buffer units and fails iff the asset loss
/// reaches eta, i.e. iff T <= alpha*ln(1-eta). Solving P(fail) = q gives
///   alpha = t_quantile(q, df) / ln(1 - eta),
/// positive because both parts are negative for q < 0.5.
double calibrate_alpha(double q, double eta, double df);

/// Calibrated asset-loss distribution: loss = 1 - e^(T/alpha) with T
/// Student-t(df).
struct LossModel {
    double df = 1.5;
    double alpha = 0.0;
    double q = 0.05;
    double eta = 0.05;

    static LossModel calibrated(double q, double eta, double df = 1.5);
};

/// One Student-t(df) variate: Z / sqrt(G/df) with Z standard normal and
/// G ~ Gamma(df/2, 2).
double sample_t(double df, Rng& rng);

/// m i.i.d. asset losses under the model; every component is < 1.
LossVector sample_losses(int m, const LossModel& model, Rng& rng);

/// Single-asset loss law. The simulation is written against this
/// interface so the Student-t law can be swapped for another (e.g.
/// normal-based) without touching the estimators; any implementation must
/// keep the calibration property P(loss >= eta) = q.
class LossLaw {
  public:
    virtual ~LossLaw() = default;
    virtual double sample(Rng& rng) const = 0;
    virtual std::string name() const = 0;
};

std::unique_ptr<LossLaw> make_student_loss_law(double q, double eta, double df = 1.5);
std::unique_ptr<LossLaw> make_normal_loss_law(double q, double eta);

LossVector sample_losses(int m, const LossLaw& law, Rng& rng);

}  // namespace contagion
