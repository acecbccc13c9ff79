#pragma once

#include <optional>
#include <string>
#include <vector>

#include "countreg/glm.hpp"

namespace countreg {

struct SelectionEntry {
    std::string model; // terms joined by " + "
    double deviance = 0.0;
    double pearson_chi2 = 0.0;
    double llf = 0.0;
    long df_resid = 0;
    double aic = 0.0;
    std::optional<double> p_chisq; // filled by gof_filter
    bool failed = false;
    std::string failure;
};

using SelectionTable = std::vector<SelectionEntry>;

// All 2^k - 1 nonempty variable subsets as intercepted formulas, ordered
// by subset size, then lexicographically in the given variable order.
std::vector<Formula> enumerate_formulas(const std::string& response,
                                        const std::vector<std::string>& variables);

// Fit every formula; failures are recorded in place, never dropped.
// Fits run on up to `workers` threads (0 = hardware concurrency) and the
// table order matches the formula order regardless of scheduling.
SelectionTable fit_all(const ModelFrame& frame, const std::vector<Formula>& formulas,
                       const FitOptions& opts = {}, unsigned workers = 0);

// Deviance goodness-of-fit screen: p_chisq = chi2_sf(deviance, df_resid);
// keeps rows with p_chisq >= alpha. Failed fits never survive.
SelectionTable gof_filter(const SelectionTable& table, double alpha);

// Stable ascending AIC sort; ties broken by fewer parameters, then model
// string.
SelectionTable rank_by_aic(const SelectionTable& table);

} // namespace countreg
