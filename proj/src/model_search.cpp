#include "countreg/model_search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "countreg/errors.hpp"
#include "countreg/specfun.hpp"

namespace countreg {

std::vector<Formula> enumerate_formulas(const std::string& response,
                                        const std::vector<std::string>& variables) {
    if (variables.empty()) throw ConfigError("variable universe is empty");
    for (std::size_t i = 0; i < variables.size(); ++i) {
        for (std::size_t j = i + 1; j < variables.size(); ++j) {
            if (variables[i] == variables[j]) {
                throw ConfigError("duplicate variable: " + variables[i]);
            }
        }
    }
    const std::size_t k = variables.size();
    std::vector<unsigned long> masks;
    masks.reserve((1ul << k) - 1);
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) masks.push_back(mask);
    // Size-major order; among equal sizes the masks are already in
    // lexicographic order of the chosen index sets.
    std::stable_sort(masks.begin(), masks.end(), [](unsigned long a, unsigned long b) {
        return __builtin_popcountl(a) < __builtin_popcountl(b);
    });

    std::vector<Formula> formulas;
    formulas.reserve(masks.size());
    for (unsigned long mask : masks) {
        Formula f;
        f.response = response;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (1ul << i)) f.terms.push_back(variables[i]);
        }
        formulas.push_back(std::move(f));
    }
    return formulas;
}

SelectionTable fit_all(const ModelFrame& frame, const std::vector<Formula>& formulas,
                       const FitOptions& opts, unsigned workers) {
    SelectionTable table(formulas.size());
    if (formulas.empty()) return table;

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(formulas.size()));

    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= formulas.size()) return;
            SelectionEntry& entry = table[i];
            entry.model = formulas[i].terms_string();
            try {
                auto [design, y] = build_design(frame, formulas[i]);
                const GlmFit fit = irls_fit(design, y, opts);
                entry.deviance = fit.deviance;
                entry.pearson_chi2 = fit.pearson_chi2;
                entry.llf = fit.llf;
                entry.df_resid = fit.df_resid;
                entry.aic = fit.aic;
            } catch (const std::exception& e) {
                entry.failed = true;
                entry.failure = e.what();
            }
        }
    };

    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    return table;
}

SelectionTable gof_filter(const SelectionTable& table, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw ConfigError("goodness-of-fit alpha must lie in [0, 1)");
    }
    SelectionTable kept;
    for (SelectionEntry entry : table) {
        if (entry.failed) continue;
        entry.p_chisq = specfun::chi2_sf(entry.deviance, static_cast<double>(entry.df_resid));
        if (*entry.p_chisq >= alpha) kept.push_back(std::move(entry));
    }
    return kept;
}

SelectionTable rank_by_aic(const SelectionTable& table) {
    SelectionTable sorted = table;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const SelectionEntry& a, const SelectionEntry& b) {
                         if (a.aic != b.aic) return a.aic < b.aic;
                         if (a.df_resid != b.df_resid) return a.df_resid > b.df_resid;
                         return a.model < b.model;
                     });
    return sorted;
}

} // namespace countreg
