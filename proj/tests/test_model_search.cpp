#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "countreg/errors.hpp"
#include "countreg/model_search.hpp"
#include "fixtures.hpp"

using namespace countreg;

namespace {

ModelFrame synthetic_frame(std::size_t n, std::size_t n_teams, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(-0.8, 0.8);
    ModelFrame frame;
    frame.covariate_names = {"a", "b", "c"};
    frame.covariates.assign(3, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n_teams; ++i) {
        frame.team_levels.push_back("T" + std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        double eta = 0.2;
        for (std::size_t c = 0; c < 3; ++c) {
            frame.covariates[c][i] = unif(rng);
            eta += (c % 2 ? -0.3 : 0.4) * frame.covariates[c][i];
        }
        frame.team.push_back(static_cast<int>(i % n_teams));
        std::poisson_distribution<long> pois(std::exp(eta));
        frame.response.push_back(pois(rng));
        frame.observation_ids.push_back(i);
    }
    return frame;
}

} // namespace

TEST_SUITE("model_search") {

TEST_CASE("enumeration counts and ordering") {
    const auto one = enumerate_formulas("y", {"a"});
    CHECK(one.size() == 1);
    CHECK(one[0].terms_string() == "a");

    const auto three = enumerate_formulas("y", {"a", "b", "c"});
    REQUIRE(three.size() == 7);
    const std::vector<std::string> expected = {"a",     "b",     "c",    "a + b",
                                               "a + c", "b + c", "a + b + c"};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(three[i].terms_string() == expected[i]);
    }

    const auto six = enumerate_formulas(
        "FTHG", {"HTAG", "logHST", "logHC", "HR", "AR", "HomeTeam"});
    CHECK(six.size() == 63);
    std::set<std::string> distinct;
    for (const auto& f : six) distinct.insert(f.terms_string());
    CHECK(distinct.size() == 63);
    // The published table layout: singletons first, full model last.
    CHECK(six.front().terms_string() == "HTAG");
    CHECK(six.back().terms_string() == "HTAG + logHST + logHC + HR + AR + HomeTeam");

    CHECK_THROWS_AS(enumerate_formulas("y", {}), ConfigError);
    CHECK_THROWS_AS(enumerate_formulas("y", {"a", "a"}), ConfigError);
}

TEST_CASE("fit_all covers every subset with nested-deviance monotonicity") {
    const ModelFrame frame = synthetic_frame(160, 4, 11);
    const auto formulas = enumerate_formulas("y", {"a", "b", "c"});
    const SelectionTable table = fit_all(frame, formulas);
    REQUIRE(table.size() == 7);
    for (const auto& entry : table) CHECK_FALSE(entry.failed);

    auto deviance_of = [&](const std::string& model) {
        for (const auto& e : table) {
            if (e.model == model) return e.deviance;
        }
        FAIL("model not found: ", model);
        return 0.0;
    };
    // Nested chains never increase deviance.
    CHECK(deviance_of("a + b") <= deviance_of("a") + 1e-8);
    CHECK(deviance_of("a + b") <= deviance_of("b") + 1e-8);
    CHECK(deviance_of("a + b + c") <= deviance_of("a + b") + 1e-8);
    CHECK(deviance_of("a + b + c") <= deviance_of("b + c") + 1e-8);
    // df_resid reflects subset size.
    for (const auto& e : table) {
        const auto terms = 1 + std::count(e.model.begin(), e.model.end(), '+');
        CHECK(e.df_resid == 160 - (1 + terms));
    }
}

TEST_CASE("fit_all is deterministic across worker counts") {
    const ModelFrame frame = synthetic_frame(120, 3, 5);
    const auto formulas = enumerate_formulas("y", {"a", "b", "c"});
    const SelectionTable serial = fit_all(frame, formulas, {}, 1);
    const SelectionTable parallel = fit_all(frame, formulas, {}, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].model == parallel[i].model);
        CHECK(serial[i].deviance == parallel[i].deviance);
        CHECK(serial[i].llf == parallel[i].llf);
        CHECK(serial[i].aic == parallel[i].aic);
    }
}

TEST_CASE("fit_all records failures instead of dropping them") {
    ModelFrame frame = synthetic_frame(50, 2, 3);
    // Make covariate c an exact copy of a: any subset with both is singular.
    frame.covariates[2] = frame.covariates[0];
    const auto formulas = enumerate_formulas("y", {"a", "b", "c"});
    const SelectionTable table = fit_all(frame, formulas);
    REQUIRE(table.size() == 7);
    for (const auto& e : table) {
        const bool both = e.model.find('a') != std::string::npos &&
                          e.model.find('c') != std::string::npos;
        CHECK(e.failed == both);
        if (e.failed) CHECK_FALSE(e.failure.empty());
    }
    // Failed fits never pass the screen.
    for (const auto& e : gof_filter(table, 0.000001)) CHECK_FALSE(e.failed);
}

TEST_CASE("gof_filter computes p_chisq and respects alpha") {
    const SelectionTable table = fixtures::metrics_as_table();
    const SelectionTable kept = gof_filter(table, 0.05);
    CHECK(kept.size() == 31);
    for (const auto& e : kept) {
        REQUIRE(e.p_chisq.has_value());
        CHECK(*e.p_chisq >= 0.05);
    }
    // Spot anchor: the two-term survivor at the screen's boundary.
    const auto& last = kept.back();
    CHECK(last.model == "HTAG + logHST");
    CHECK(*last.p_chisq == doctest::Approx(0.094434).epsilon(5e-4));

    // alpha -> 0 retains every row.
    CHECK(gof_filter(table, 0.0).size() == table.size());

    // Idempotent and order-preserving on survivors.
    const SelectionTable twice = gof_filter(kept, 0.05);
    REQUIRE(twice.size() == kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) CHECK(twice[i].model == kept[i].model);
}

TEST_CASE("rank_by_aic is a stable ascending sort with tie-breaks") {
    SelectionTable table(3);
    table[0].model = "big";
    table[0].aic = 100.0;
    table[0].df_resid = 95; // p = 5 at n = 100
    table[1].model = "small";
    table[1].aic = 100.0;
    table[1].df_resid = 97; // p = 3
    table[2].model = "best";
    table[2].aic = 50.0;
    table[2].df_resid = 90;
    const SelectionTable ranked = rank_by_aic(table);
    CHECK(ranked[0].model == "best");
    CHECK(ranked[1].model == "small"); // fewer parameters first on ties
    CHECK(ranked[2].model == "big");

    SelectionTable single(1);
    single[0].model = "only";
    CHECK(rank_by_aic(single)[0].model == "only");

    double prev = -1e300;
    for (const auto& e : rank_by_aic(fixtures::metrics_as_table())) {
        CHECK(e.aic >= prev);
        prev = e.aic;
    }
}

TEST_CASE("filter + rank reproduces the published 31-model order") {
    const SelectionTable ranked = rank_by_aic(gof_filter(fixtures::metrics_as_table(), 0.05));
    const auto& expected = fixtures::surviving_models();
    REQUIRE(ranked.size() == expected.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        CHECK(ranked[i].model == expected[i].model);
        CHECK(*ranked[i].p_chisq == doctest::Approx(expected[i].p_chisq).epsilon(1e-3));
        CHECK(std::fabs(*ranked[i].p_chisq - expected[i].p_chisq) < 5e-5);
    }
}

TEST_CASE("empty formula list yields an empty table") {
    const ModelFrame frame = synthetic_frame(30, 2, 1);
    CHECK(fit_all(frame, {}).empty());
}

} // TEST_SUITE
