#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "countreg/design.hpp"

namespace countreg {

struct FitOptions {
    int max_iter = 25;
    double tol = 1e-10; // relative deviance change
};

// Fitted Poisson GLM (log link) with the full summary surface.
struct GlmFit {
    Eigen::VectorXd coefficients;
    Eigen::MatrixXd covariance;       // inverse Fisher information at the optimum
    Eigen::VectorXd fitted_means;
    std::vector<std::string> column_names;
    double deviance = 0.0;
    double pearson_chi2 = 0.0;
    double llf = 0.0;
    double aic = 0.0;
    long df_resid = 0;
    long df_model = 0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> deviance_path; // one entry per IRLS iteration

    long n_obs() const { return df_resid + df_model + 1; }
    long n_params() const { return df_model + 1; }
};

// Poisson log-likelihood sum_i [y_i ln mu_i - mu_i - ln Gamma(y_i + 1)].
double log_likelihood(const Eigen::VectorXd& y, const Eigen::VectorXd& mu);

// 2 sum_i [y_i ln(y_i / mu_i) - (y_i - mu_i)], with y ln(y/mu) = 0 at y = 0.
double deviance(const Eigen::VectorXd& y, const Eigen::VectorXd& mu);

double pearson_chi2(const Eigen::VectorXd& y, const Eigen::VectorXd& mu);

// Maximize the Poisson log-likelihood by iteratively reweighted least
// squares; stops when the relative deviance change drops below opts.tol.
GlmFit irls_fit(const DesignMatrix& X, const Eigen::VectorXd& y,
                const FitOptions& opts = {});

struct CoefficientRow {
    std::string name;
    double coef = 0.0;
    double std_err = 0.0;
    double z = 0.0;       // NaN when std_err is zero
    double p_value = 0.0; // NaN when std_err is zero
    double ci_low = 0.0;
    double ci_high = 0.0;
};

// Coefficient table with normal-theory z statistics and confidence
// intervals at the given level.
std::vector<CoefficientRow> summarize(const GlmFit& fit, double level = 0.95);

} // namespace countreg
