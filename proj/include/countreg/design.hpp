#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "countreg/ingest.hpp"

namespace countreg {

// Model formula: a response and an ordered list of terms. Terms may be
// numeric covariates or the frame's categorical team column.
struct Formula {
    std::string response;
    std::vector<std::string> terms;

    // Parses "FTHG ~ HTAG + logHST + HomeTeam".
    static Formula parse(const std::string& text);

    // Terms joined by " + "; "1" for an intercept-only model.
    std::string terms_string() const;
};

struct DesignMatrix {
    Eigen::MatrixXd values;
    std::vector<std::string> column_names;                 // first is "Intercept"
    std::map<std::string, std::string> reference_levels;   // categorical -> reference
};

// Treatment-coded design: intercept, then dummies for each categorical
// term (reference = lexicographically smallest level), then numeric terms
// in formula order.
std::pair<DesignMatrix, Eigen::VectorXd> build_design(const ModelFrame& frame,
                                                      const Formula& formula);

} // namespace countreg
