#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "countreg/glm.hpp"

namespace countreg {

struct DiagnosticsBundle {
    std::vector<double> pearson_residuals;
    std::vector<double> leverage;
    std::vector<double> standardized_residuals;
    std::vector<double> fitted_means;
    std::vector<double> response;
    std::vector<std::size_t> observation_ids;
};

std::vector<double> pearson_residuals(const Eigen::VectorXd& y, const Eigen::VectorXd& mu);

// Hat-matrix diagonal of sqrt(W) X (X'WX)^{-1} X' sqrt(W), computed
// row-wise via the Cholesky factor of X'WX.
std::vector<double> leverage(const DesignMatrix& X, const Eigen::VectorXd& weights);

std::vector<double> standardized_residuals(const std::vector<double>& pearson,
                                           const std::vector<double>& leverage);

// (theoretical, sample) pairs: sorted residuals against normal quantiles
// at plotting positions (i - 0.5) / n.
std::vector<std::pair<double, double>> qq_points(const std::vector<double>& residuals);

DiagnosticsBundle compute_diagnostics(const ModelFrame& frame, const DesignMatrix& X,
                                      const GlmFit& fit);

struct OutlierRule {
    enum class Kind { explicit_ids, residual_threshold, leverage_threshold };
    Kind kind = Kind::explicit_ids;
    std::vector<std::size_t> ids; // explicit_ids
    double c = 4.0;               // |standardized residual| > c
    double m = 3.0;               // leverage > m * p / n
};

// Observation ids to drop, ascending. Explicit ids absent from the
// bundle produce warnings, not errors.
std::vector<std::size_t> flag_outliers(const DiagnosticsBundle& bundle, const OutlierRule& rule,
                                       std::size_t n_params,
                                       std::vector<std::string>* warnings = nullptr);

struct CoefficientDelta {
    std::string name;
    double before = 0.0;
    double after = 0.0;
    double delta = 0.0;
};

struct RefitResult {
    GlmFit before;
    GlmFit after;
    std::vector<CoefficientDelta> deltas;
    std::size_t dropped = 0;
};

// Fit, drop the given observation ids, and fit again on the reduced
// frame.
RefitResult refit_without(const ModelFrame& frame, const Formula& formula,
                          const std::vector<std::size_t>& drop_ids,
                          const FitOptions& opts = {});

// Subset of the frame without the given observation ids.
ModelFrame drop_observations(const ModelFrame& frame, const std::vector<std::size_t>& drop_ids);

} // namespace countreg
