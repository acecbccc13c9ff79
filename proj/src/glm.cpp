#include "countreg/glm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "countreg/errors.hpp"
#include "countreg/specfun.hpp"

namespace countreg {

namespace {

// Solve the weighted least-squares step: Cholesky (LDLT) of X'WX first,
// QR of sqrt(W)X as the fallback when the normal equations are not safely
// positive definite. A rank-deficient fallback reports the dependent
// columns.
Eigen::VectorXd wls_solve(const Eigen::MatrixXd& X, const Eigen::VectorXd& w,
                          const Eigen::VectorXd& z,
                          const std::vector<std::string>& column_names) {
    const Eigen::MatrixXd xtwx = X.transpose() * w.asDiagonal() * X;
    const Eigen::VectorXd xtwz = X.transpose() * (w.array() * z.array()).matrix();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(xtwx);
    if (ldlt.info() == Eigen::Success) {
        const auto& d = ldlt.vectorD();
        const double d_max = d.maxCoeff();
        if (d_max > 0.0 && d.minCoeff() > d_max * 1e-12) {
            return ldlt.solve(xtwz);
        }
    }
    const Eigen::VectorXd sw = w.array().sqrt();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sw.asDiagonal() * X);
    if (qr.rank() < X.cols()) {
        std::string cols;
        const auto& perm = qr.colsPermutation().indices();
        for (Eigen::Index i = qr.rank(); i < X.cols(); ++i) {
            if (!cols.empty()) cols += ", ";
            cols += column_names[static_cast<std::size_t>(perm(i))];
        }
        throw SingularDesignError("design matrix is singular; dependent columns: " + cols);
    }
    return qr.solve((sw.array() * z.array()).matrix());
}

} // namespace

double log_likelihood(const Eigen::VectorXd& y, const Eigen::VectorXd& mu) {
    if (y.size() != mu.size()) throw std::invalid_argument("length mismatch");
    double llf = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (!(mu(i) > 0.0)) throw std::domain_error("log_likelihood: mu must be positive");
        llf += y(i) * std::log(mu(i)) - mu(i) - specfun::ln_gamma(y(i) + 1.0);
    }
    return llf;
}

double deviance(const Eigen::VectorXd& y, const Eigen::VectorXd& mu) {
    if (y.size() != mu.size()) throw std::invalid_argument("length mismatch");
    double dev = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (!(mu(i) > 0.0)) throw std::domain_error("deviance: mu must be positive");
        const double term = y(i) > 0.0 ? y(i) * std::log(y(i) / mu(i)) : 0.0;
        dev += term - (y(i) - mu(i));
    }
    return 2.0 * dev;
}

double pearson_chi2(const Eigen::VectorXd& y, const Eigen::VectorXd& mu) {
    if (y.size() != mu.size()) throw std::invalid_argument("length mismatch");
    double chi2 = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (!(mu(i) > 0.0)) throw std::domain_error("pearson_chi2: mu must be positive");
        const double d = y(i) - mu(i);
        chi2 += d * d / mu(i);
    }
    return chi2;
}

GlmFit irls_fit(const DesignMatrix& X, const Eigen::VectorXd& y, const FitOptions& opts) {
    const Eigen::Index n = X.values.rows();
    const Eigen::Index p = X.values.cols();
    if (y.size() != n) throw std::invalid_argument("irls_fit: y length mismatch");
    if (n <= p) {
        throw SingularDesignError("need more observations than parameters (n=" +
                                  std::to_string(n) + ", p=" + std::to_string(p) + ")");
    }
    if ((y.array() < 0.0).any()) {
        throw std::domain_error("irls_fit: responses must be nonnegative");
    }
    if (opts.max_iter < 1) throw ConfigError("irls_fit: max_iter must be >= 1");

    GlmFit fit;
    fit.column_names = X.column_names;

    // mu0 = y + 0.5 guards zero counts; the first WLS solve doubles as the
    // starting value.
    Eigen::VectorXd mu = y.array() + 0.5;
    Eigen::VectorXd eta = mu.array().log();
    double dev_prev = deviance(y, mu);
    Eigen::VectorXd beta(p);

    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        const Eigen::VectorXd z = eta.array() + (y - mu).array() / mu.array();
        beta = wls_solve(X.values, mu, z, X.column_names);
        eta = X.values * beta;
        mu = eta.array().exp();
        if (!mu.allFinite() || !(mu.array() > 0.0).all()) {
            throw DivergenceError("IRLS produced non-finite fitted means at iteration " +
                                  std::to_string(iter));
        }
        const double dev = deviance(y, mu);
        fit.deviance_path.push_back(dev);
        fit.iterations = iter;
        if (std::fabs(dev - dev_prev) / (std::fabs(dev) + 0.1) < opts.tol) {
            fit.converged = true;
            break;
        }
        dev_prev = dev;
    }

    fit.coefficients = beta;
    fit.fitted_means = mu;
    fit.deviance = fit.deviance_path.back();
    fit.pearson_chi2 = pearson_chi2(y, mu);
    fit.llf = log_likelihood(y, mu);
    fit.df_resid = static_cast<long>(n - p);
    fit.df_model = static_cast<long>(p - 1);
    fit.aic = 2.0 * static_cast<double>(p) - 2.0 * fit.llf;

    const Eigen::MatrixXd fisher = X.values.transpose() * mu.asDiagonal() * X.values;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(fisher);
    if (ldlt.info() != Eigen::Success ||
        !(ldlt.vectorD().minCoeff() > ldlt.vectorD().maxCoeff() * 1e-14)) {
        throw SingularDesignError("Fisher information is singular at the optimum");
    }
    fit.covariance = ldlt.solve(Eigen::MatrixXd::Identity(p, p));
    // Symmetrize away solver round-off.
    fit.covariance = 0.5 * (fit.covariance + fit.covariance.transpose()).eval();
    return fit;
}

std::vector<CoefficientRow> summarize(const GlmFit& fit, double level) {
    if (!(level > 0.0) || !(level < 1.0)) {
        throw ConfigError("confidence level must lie in (0, 1)");
    }
    const double crit = specfun::normal_quantile(1.0 - (1.0 - level) / 2.0);
    std::vector<CoefficientRow> rows;
    rows.reserve(static_cast<std::size_t>(fit.coefficients.size()));
    for (Eigen::Index j = 0; j < fit.coefficients.size(); ++j) {
        CoefficientRow row;
        row.name = fit.column_names[static_cast<std::size_t>(j)];
        row.coef = fit.coefficients(j);
        row.std_err = std::sqrt(std::max(0.0, fit.covariance(j, j)));
        if (row.std_err > 0.0) {
            row.z = row.coef / row.std_err;
            row.p_value = 2.0 * (1.0 - specfun::normal_cdf(std::fabs(row.z)));
        } else {
            row.z = std::numeric_limits<double>::quiet_NaN();
            row.p_value = std::numeric_limits<double>::quiet_NaN();
        }
        row.ci_low = row.coef - crit * row.std_err;
        row.ci_high = row.coef + crit * row.std_err;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace countreg
