#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "countreg/errors.hpp"
#include "countreg/glm.hpp"
#include "countreg/specfun.hpp"

using namespace countreg;

namespace {

ModelFrame tiny_frame(const std::vector<long>& y, const std::vector<std::string>& teams) {
    ModelFrame frame;
    frame.response = y;
    frame.covariate_names = {"x1", "x2"};
    frame.covariates = {std::vector<double>(y.size(), 0.0),
                        std::vector<double>(y.size(), 0.0)};
    for (std::size_t i = 0; i < y.size(); ++i) {
        frame.covariates[0][i] = static_cast<double>(i) * 0.1;
        frame.covariates[1][i] = static_cast<double>(i % 3) - 1.0;
    }
    std::set<std::string> levels(teams.begin(), teams.end());
    frame.team_levels.assign(levels.begin(), levels.end());
    for (const auto& t : teams) {
        const auto it = std::find(frame.team_levels.begin(), frame.team_levels.end(), t);
        frame.team.push_back(static_cast<int>(it - frame.team_levels.begin()));
    }
    for (std::size_t i = 0; i < y.size(); ++i) frame.observation_ids.push_back(i);
    return frame;
}

DesignMatrix design_from(const Eigen::MatrixXd& values,
                         const std::vector<std::string>& names) {
    DesignMatrix design;
    design.values = values;
    design.column_names = names;
    return design;
}

// Independent check: full Newton iteration on the exact Poisson
// log-likelihood, solved with a pivoted LU factorization and a
// gradient-norm stop, sharing no code path with irls_fit.
Eigen::VectorXd newton_oracle(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(X.cols());
    for (int iter = 0; iter < 200; ++iter) {
        const Eigen::VectorXd mu = (X * beta).array().exp();
        const Eigen::VectorXd grad = X.transpose() * (y - mu);
        const Eigen::MatrixXd hess = X.transpose() * mu.asDiagonal() * X;
        const Eigen::VectorXd step = hess.fullPivLu().solve(grad);
        beta += step;
        if (grad.lpNorm<Eigen::Infinity>() < 1e-12 && step.lpNorm<Eigen::Infinity>() < 1e-12) {
            break;
        }
    }
    return beta;
}

struct SyntheticData {
    DesignMatrix design;
    Eigen::VectorXd y;
};

SyntheticData synthesize(int n, int p, std::mt19937& rng) {
    Eigen::MatrixXd X(n, p);
    X.col(0).setOnes();
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int j = 1; j < p; ++j) {
        for (int i = 0; i < n; ++i) X(i, j) = unif(rng);
    }
    Eigen::VectorXd beta(p);
    beta(0) = 0.3;
    for (int j = 1; j < p; ++j) beta(j) = (j % 2 ? -0.2 : 0.5);
    const Eigen::VectorXd mu = (X * beta).array().exp();
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        std::poisson_distribution<long> pois(mu(i));
        y(i) = static_cast<double>(pois(rng));
    }
    std::vector<std::string> names = {"Intercept"};
    for (int j = 1; j < p; ++j) names.push_back("x" + std::to_string(j));
    return {design_from(X, names), y};
}

} // namespace

TEST_SUITE("glm") {

TEST_CASE("formula parsing") {
    const Formula f = Formula::parse("FTHG ~ HTAG + logHST + HomeTeam");
    CHECK(f.response == "FTHG");
    CHECK(f.terms == std::vector<std::string>{"HTAG", "logHST", "HomeTeam"});
    CHECK(f.terms_string() == "HTAG + logHST + HomeTeam");
    CHECK(Formula::parse("y ~ 1").terms.empty());
    CHECK_THROWS_AS(Formula::parse("no tilde"), ConfigError);
    CHECK_THROWS_AS(Formula::parse("y ~ a + a"), ConfigError);
}

TEST_CASE("design: treatment coding with lexicographic reference") {
    const ModelFrame frame =
        tiny_frame({1, 2, 0, 3, 1, 2}, {"Chelsea", "Arsenal", "Leeds", "Arsenal", "Leeds",
                                        "Chelsea"});
    Formula f;
    f.response = "y";
    f.terms = {"x1", "HomeTeam"};
    ModelFrame named = frame;
    named.team_column = "HomeTeam";
    auto [design, y] = build_design(named, f);

    // Intercept, dummies (reference Arsenal), then numeric terms.
    CHECK(design.column_names ==
          std::vector<std::string>{"Intercept", "HomeTeam[T.Chelsea]", "HomeTeam[T.Leeds]",
                                   "x1"});
    CHECK(design.reference_levels.at("HomeTeam") == "Arsenal");
    CHECK(design.values.col(0).sum() == doctest::Approx(6.0));
    // Row 0 is Chelsea: dummy 1 active, dummy 2 inactive.
    CHECK(design.values(0, 1) == 1.0);
    CHECK(design.values(0, 2) == 0.0);
    // Row 1 is Arsenal (reference): both dummies zero.
    CHECK(design.values(1, 1) == 0.0);
    CHECK(design.values(1, 2) == 0.0);
    CHECK(y(3) == 3.0);
}

TEST_CASE("design: intercept-only and error paths") {
    const ModelFrame frame = tiny_frame({1, 2, 3}, {"A", "A", "A"});
    Formula intercept_only;
    intercept_only.response = "y";
    auto [design, y] = build_design(frame, intercept_only);
    CHECK(design.values.cols() == 1);
    CHECK(design.values.col(0).minCoeff() == 1.0);

    Formula missing;
    missing.response = "y";
    missing.terms = {"nope"};
    CHECK_THROWS_AS(build_design(frame, missing), SchemaError);

    Formula categorical;
    categorical.response = "y";
    categorical.terms = {frame.team_column};
    CHECK_THROWS_AS(build_design(frame, categorical), SchemaError); // single level
}

TEST_CASE("design: p = 31 with 26 teams and 5 numeric terms") {
    std::vector<long> y;
    std::vector<std::string> teams;
    for (int i = 0; i < 26 * 3; ++i) {
        y.push_back(i % 4);
        teams.push_back("Team" + std::string(1, static_cast<char>('A' + i % 26)));
    }
    ModelFrame frame = tiny_frame(y, teams);
    frame.covariate_names = {"a", "b", "c", "d", "e"};
    frame.covariates.assign(5, std::vector<double>(y.size(), 0.0));
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (std::size_t c = 0; c < 5; ++c) {
        for (std::size_t i = 0; i < y.size(); ++i) frame.covariates[c][i] = unif(rng);
    }
    Formula f;
    f.response = "y";
    f.terms = {"a", "b", "c", "d", "e", frame.team_column};
    auto [design, resp] = build_design(frame, f);
    CHECK(design.values.cols() == 31);
    const GlmFit fit = irls_fit(design, resp);
    CHECK(fit.df_model == 30);
    CHECK(fit.df_resid == static_cast<long>(y.size()) - 31);
}

TEST_CASE("intercept-only fit recovers ln of the mean") {
    Eigen::VectorXd y(3);
    y << 1, 2, 3;
    const auto design = design_from(Eigen::MatrixXd::Ones(3, 1), {"Intercept"});
    const GlmFit fit = irls_fit(design, y);
    CHECK(fit.converged);
    CHECK(std::fabs(fit.coefficients(0) - std::log(2.0)) < 1e-10);
    for (int i = 0; i < 3; ++i) CHECK(fit.fitted_means(i) == doctest::Approx(2.0));
    CHECK(fit.df_model == 0);
    CHECK(fit.aic == doctest::Approx(2.0 - 2.0 * fit.llf));
}

TEST_CASE("saturated two-cell fit has zero deviance") {
    // n == p is rejected; duplicate each cell so the two-cell structure
    // stays exactly saturated.
    Eigen::MatrixXd X4(4, 2);
    X4 << 1, 0, 1, 0, 1, 1, 1, 1;
    Eigen::VectorXd y4(4);
    y4 << 1, 1, 3, 3;
    const GlmFit fit = irls_fit(design_from(X4, {"Intercept", "g"}), y4);
    CHECK(fit.coefficients(0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(fit.coefficients(1) == doctest::Approx(std::log(3.0)));
    CHECK(fit.deviance == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("irls matches the Newton oracle on synthetic data") {
    std::mt19937 rng(20240811);
    for (int rep = 0; rep < 5; ++rep) {
        const auto data = synthesize(50, 3, rng);
        const GlmFit fit = irls_fit(data.design, data.y);
        const Eigen::VectorXd oracle = newton_oracle(data.design.values, data.y);
        CHECK(fit.converged);
        for (int j = 0; j < 3; ++j) {
            CHECK(std::fabs(fit.coefficients(j) - oracle(j)) < 1e-8);
        }
        // First-order condition at the optimum.
        const Eigen::VectorXd score =
            data.design.values.transpose() * (data.y - fit.fitted_means);
        CHECK(score.lpNorm<Eigen::Infinity>() < 1e-6 * 50);
    }
}

TEST_CASE("deviance path is monotone after the first iteration") {
    std::mt19937 rng(7);
    const auto data = synthesize(60, 4, rng);
    const GlmFit fit = irls_fit(data.design, data.y);
    for (std::size_t t = 2; t < fit.deviance_path.size(); ++t) {
        CHECK(fit.deviance_path[t] <= fit.deviance_path[t - 1] + 1e-8);
    }
}

TEST_CASE("adding a column never increases deviance") {
    std::mt19937 rng(99);
    const auto data = synthesize(80, 4, rng);
    const GlmFit full = irls_fit(data.design, data.y);
    DesignMatrix reduced;
    reduced.values = data.design.values.leftCols(3);
    reduced.column_names = {"Intercept", "x1", "x2"};
    const GlmFit nested = irls_fit(reduced, data.y);
    CHECK(full.deviance <= nested.deviance + 1e-8);
}

TEST_CASE("covariance is symmetric with nonnegative diagonal") {
    std::mt19937 rng(3);
    const auto data = synthesize(40, 3, rng);
    const GlmFit fit = irls_fit(data.design, data.y);
    const Eigen::MatrixXd& cov = fit.covariance;
    CHECK((cov - cov.transpose()).lpNorm<Eigen::Infinity>() < 1e-10);
    for (int j = 0; j < cov.rows(); ++j) CHECK(cov(j, j) >= 0.0);
}

TEST_CASE("singular designs raise with the offending column name") {
    Eigen::MatrixXd X(6, 3);
    for (int i = 0; i < 6; ++i) {
        X(i, 0) = 1.0;
        X(i, 1) = static_cast<double>(i);
        X(i, 2) = 2.0 * static_cast<double>(i); // collinear with column 1
    }
    Eigen::VectorXd y(6);
    y << 1, 0, 2, 1, 3, 2;
    try {
        irls_fit(design_from(X, {"Intercept", "a", "dup_a"}), y);
        FAIL("expected SingularDesignError");
    } catch (const SingularDesignError& e) {
        CHECK(std::string(e.what()).find("dup") != std::string::npos);
    }
}

TEST_CASE("n <= p is rejected") {
    Eigen::MatrixXd X = Eigen::MatrixXd::Identity(3, 3);
    Eigen::VectorXd y(3);
    y << 1, 2, 3;
    CHECK_THROWS_AS(irls_fit(design_from(X, {"a", "b", "c"}), y), SingularDesignError);
}

TEST_CASE("log-likelihood, deviance, pearson hand values") {
    Eigen::VectorXd y1(1), mu1(1);
    y1 << 0;
    mu1 << 1;
    CHECK(log_likelihood(y1, mu1) == doctest::Approx(-1.0));

    Eigen::VectorXd y(3), mu(3);
    y << 1, 2, 3;
    mu << 2, 2, 2;
    // Hand evaluation: 6 ln2 - 6 - (ln1 + ln2 + ln6).
    const double expected_llf = 6.0 * std::log(2.0) - 6.0 - (std::log(2.0) + std::log(6.0));
    CHECK(log_likelihood(y, mu) == doctest::Approx(expected_llf).epsilon(1e-12));
    CHECK(log_likelihood(y, mu) == doctest::Approx(-4.326024).epsilon(1e-6));

    CHECK(deviance(y, mu) == doctest::Approx(1.046496).epsilon(1e-6));
    CHECK(deviance(y, y) == doctest::Approx(0.0));
    CHECK(pearson_chi2(y, mu) == doctest::Approx(1.0));

    Eigen::VectorXd y4(1), mu4(1);
    y4 << 4;
    mu4 << 1;
    CHECK(pearson_chi2(y4, mu4) == doctest::Approx(9.0));

    Eigen::VectorXd yz(2), muz(2);
    yz << 0, 0;
    muz << 0.5, 0.5;
    CHECK(deviance(yz, muz) == doctest::Approx(2.0)); // zero-count convention
}

TEST_CASE("summarize computes z, p, and intervals") {
    GlmFit fit;
    fit.column_names = {"Intercept", "logHST", "AR"};
    fit.coefficients = Eigen::VectorXd(3);
    fit.coefficients << 0.0, 0.6947, 0.14;
    fit.covariance = Eigen::MatrixXd::Zero(3, 3);
    const double se_log_hst = 0.6947 / 31.036; // reproduces the table z
    fit.covariance(0, 0) = 0.05 * 0.05;
    fit.covariance(1, 1) = se_log_hst * se_log_hst;
    fit.covariance(2, 2) = 0.031 * 0.031;
    fit.converged = true;

    const auto rows = summarize(fit, 0.95);
    CHECK(rows[0].z == doctest::Approx(0.0));
    CHECK(rows[0].p_value == doctest::Approx(1.0));
    CHECK(rows[0].ci_low == doctest::Approx(-rows[0].ci_high));

    CHECK(rows[1].z == doctest::Approx(31.036).epsilon(1e-6));
    CHECK(rows[1].p_value < 1e-10);

    CHECK(rows[2].z == doctest::Approx(0.14 / 0.031).epsilon(1e-12));
    CHECK(rows[2].p_value < 1e-4);
    // 95% interval uses the normal quantile, not a hard-coded 1.96.
    const double crit = countreg::specfun::normal_quantile(0.975);
    CHECK(rows[2].ci_low == doctest::Approx(0.14 - crit * 0.031));
    CHECK(rows[2].ci_high == doctest::Approx(0.14 + crit * 0.031));
}

TEST_CASE("summarize flags zero standard errors") {
    GlmFit fit;
    fit.column_names = {"Intercept"};
    fit.coefficients = Eigen::VectorXd::Constant(1, 1.5);
    fit.covariance = Eigen::MatrixXd::Zero(1, 1);
    const auto rows = summarize(fit, 0.95);
    CHECK(std::isnan(rows[0].z));
    CHECK(std::isnan(rows[0].p_value));
    CHECK(rows[0].ci_low == doctest::Approx(1.5));
}

} // TEST_SUITE
