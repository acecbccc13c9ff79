#include "countreg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "countreg/errors.hpp"
#include "countreg/specfun.hpp"

namespace countreg {

std::vector<double> pearson_residuals(const Eigen::VectorXd& y, const Eigen::VectorXd& mu) {
    if (y.size() != mu.size()) throw std::invalid_argument("length mismatch");
    std::vector<double> r(static_cast<std::size_t>(y.size()));
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (!(mu(i) > 0.0)) throw std::domain_error("pearson_residuals: mu must be positive");
        r[static_cast<std::size_t>(i)] = (y(i) - mu(i)) / std::sqrt(mu(i));
    }
    return r;
}

std::vector<double> leverage(const DesignMatrix& X, const Eigen::VectorXd& weights) {
    const Eigen::Index n = X.values.rows();
    if (weights.size() != n) throw std::invalid_argument("weight length mismatch");
    if (!(weights.array() > 0.0).all()) {
        throw std::domain_error("leverage: weights must be positive");
    }
    const Eigen::MatrixXd xtwx = X.values.transpose() * weights.asDiagonal() * X.values;
    Eigen::LLT<Eigen::MatrixXd> llt(xtwx);
    if (llt.info() != Eigen::Success) {
        throw SingularDesignError("leverage: X'WX is singular");
    }
    // h_ii = w_i * || L^{-1} x_i ||^2 — one triangular solve per row, the
    // full hat matrix is never formed.
    const Eigen::MatrixXd l_inv_xt =
        llt.matrixL().solve(Eigen::MatrixXd(X.values.transpose()));
    std::vector<double> h(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        h[static_cast<std::size_t>(i)] = weights(i) * l_inv_xt.col(i).squaredNorm();
    }
    return h;
}

std::vector<double> standardized_residuals(const std::vector<double>& pearson,
                                           const std::vector<double>& leverage) {
    if (pearson.size() != leverage.size()) throw std::invalid_argument("length mismatch");
    std::vector<double> out(pearson.size());
    for (std::size_t i = 0; i < pearson.size(); ++i) {
        if (leverage[i] >= 1.0) {
            throw DegenerateBinsError("observation " + std::to_string(i) +
                                      " has leverage >= 1");
        }
        out[i] = pearson[i] / std::sqrt(1.0 - leverage[i]);
    }
    return out;
}

std::vector<std::pair<double, double>> qq_points(const std::vector<double>& residuals) {
    if (residuals.size() < 2) {
        throw ConfigError("qq_points: need at least 2 residuals");
    }
    std::vector<double> sorted = residuals;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<std::pair<double, double>> points;
    points.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double p = (static_cast<double>(i) + 0.5) / n;
        points.emplace_back(specfun::normal_quantile(p), sorted[i]);
    }
    return points;
}

DiagnosticsBundle compute_diagnostics(const ModelFrame& frame, const DesignMatrix& X,
                                      const GlmFit& fit) {
    DiagnosticsBundle bundle;
    const Eigen::Index n = X.values.rows();
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        y(i) = static_cast<double>(frame.response[static_cast<std::size_t>(i)]);
    }
    bundle.pearson_residuals = pearson_residuals(y, fit.fitted_means);
    bundle.leverage = leverage(X, fit.fitted_means);
    bundle.standardized_residuals =
        standardized_residuals(bundle.pearson_residuals, bundle.leverage);
    bundle.fitted_means.assign(fit.fitted_means.data(), fit.fitted_means.data() + n);
    bundle.response.assign(y.data(), y.data() + n);
    bundle.observation_ids = frame.observation_ids;
    return bundle;
}

std::vector<std::size_t> flag_outliers(const DiagnosticsBundle& bundle, const OutlierRule& rule,
                                       std::size_t n_params,
                                       std::vector<std::string>* warnings) {
    std::vector<std::size_t> flagged;
    switch (rule.kind) {
        case OutlierRule::Kind::explicit_ids: {
            const std::set<std::size_t> known(bundle.observation_ids.begin(),
                                              bundle.observation_ids.end());
            for (std::size_t id : rule.ids) {
                if (known.count(id)) {
                    flagged.push_back(id);
                } else if (warnings) {
                    warnings->push_back("observation id " + std::to_string(id) +
                                       " not present in the fitted frame");
                }
            }
            break;
        }
        case OutlierRule::Kind::residual_threshold: {
            if (!(rule.c > 0.0)) throw ConfigError("residual threshold must be positive");
            for (std::size_t i = 0; i < bundle.standardized_residuals.size(); ++i) {
                if (std::fabs(bundle.standardized_residuals[i]) > rule.c) {
                    flagged.push_back(bundle.observation_ids[i]);
                }
            }
            break;
        }
        case OutlierRule::Kind::leverage_threshold: {
            if (!(rule.m > 0.0)) throw ConfigError("leverage multiplier must be positive");
            const double cutoff = rule.m * static_cast<double>(n_params) /
                                  static_cast<double>(bundle.leverage.size());
            for (std::size_t i = 0; i < bundle.leverage.size(); ++i) {
                if (bundle.leverage[i] > cutoff) flagged.push_back(bundle.observation_ids[i]);
            }
            break;
        }
    }
    std::sort(flagged.begin(), flagged.end());
    flagged.erase(std::unique(flagged.begin(), flagged.end()), flagged.end());
    return flagged;
}

ModelFrame drop_observations(const ModelFrame& frame, const std::vector<std::size_t>& drop_ids) {
    const std::set<std::size_t> drop(drop_ids.begin(), drop_ids.end());
    ModelFrame out;
    out.covariate_names = frame.covariate_names;
    out.covariates.assign(frame.covariate_names.size(), {});
    out.team_column = frame.team_column;
    out.zero_rows_excluded = frame.zero_rows_excluded;

    std::set<std::string> levels_seen;
    std::vector<std::string> row_team;
    for (std::size_t i = 0; i < frame.n(); ++i) {
        if (drop.count(frame.observation_ids[i])) continue;
        out.response.push_back(frame.response[i]);
        for (std::size_t c = 0; c < frame.covariates.size(); ++c) {
            out.covariates[c].push_back(frame.covariates[c][i]);
        }
        out.observation_ids.push_back(frame.observation_ids[i]);
        const std::string& team = frame.team_levels[static_cast<std::size_t>(frame.team[i])];
        row_team.push_back(team);
        levels_seen.insert(team);
    }
    out.team_levels.assign(levels_seen.begin(), levels_seen.end());
    out.team.reserve(row_team.size());
    for (const auto& t : row_team) {
        const auto it = std::lower_bound(out.team_levels.begin(), out.team_levels.end(), t);
        out.team.push_back(static_cast<int>(it - out.team_levels.begin()));
    }
    return out;
}

RefitResult refit_without(const ModelFrame& frame, const Formula& formula,
                          const std::vector<std::size_t>& drop_ids, const FitOptions& opts) {
    RefitResult result;
    {
        auto [design, y] = build_design(frame, formula);
        result.before = irls_fit(design, y, opts);
    }
    const ModelFrame reduced = drop_observations(frame, drop_ids);
    result.dropped = frame.n() - reduced.n();
    if (reduced.n() == 0) {
        throw ConfigError("refit_without: dropping all observations");
    }
    {
        auto [design, y] = build_design(reduced, formula);
        result.after = irls_fit(design, y, opts);
    }
    if (result.before.coefficients.size() == result.after.coefficients.size()) {
        for (Eigen::Index j = 0; j < result.before.coefficients.size(); ++j) {
            CoefficientDelta d;
            d.name = result.before.column_names[static_cast<std::size_t>(j)];
            d.before = result.before.coefficients(j);
            d.after = result.after.coefficients(j);
            d.delta = d.after - d.before;
            result.deltas.push_back(std::move(d));
        }
    } else {
        // Dropping rows removed a team level; align deltas by name.
        for (Eigen::Index j = 0; j < result.before.coefficients.size(); ++j) {
            const std::string& name = result.before.column_names[static_cast<std::size_t>(j)];
            const auto it = std::find(result.after.column_names.begin(),
                                      result.after.column_names.end(), name);
            if (it == result.after.column_names.end()) continue;
            CoefficientDelta d;
            d.name = name;
            d.before = result.before.coefficients(j);
            d.after = result.after.coefficients(it - result.after.column_names.begin());
            d.delta = d.after - d.before;
            result.deltas.push_back(std::move(d));
        }
    }
    return result;
}

} // namespace countreg
