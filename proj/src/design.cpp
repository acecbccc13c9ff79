#include "countreg/design.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "countreg/errors.hpp"

namespace countreg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

Formula Formula::parse(const std::string& text) {
    const std::size_t tilde = text.find('~');
    if (tilde == std::string::npos) {
        throw ConfigError("formula must contain '~': " + text);
    }
    Formula f;
    f.response = trim(text.substr(0, tilde));
    if (f.response.empty()) throw ConfigError("formula lacks a response: " + text);

    std::stringstream rhs(text.substr(tilde + 1));
    std::string term;
    while (std::getline(rhs, term, '+')) {
        term = trim(term);
        if (term.empty() || term == "1") continue;
        if (std::find(f.terms.begin(), f.terms.end(), term) != f.terms.end()) {
            throw ConfigError("duplicate term in formula: " + term);
        }
        f.terms.push_back(term);
    }
    return f;
}

std::string Formula::terms_string() const {
    if (terms.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        out += terms[i];
    }
    return out;
}

std::pair<DesignMatrix, Eigen::VectorXd> build_design(const ModelFrame& frame,
                                                      const Formula& formula) {
    const auto n = static_cast<Eigen::Index>(frame.n());

    // Split terms, keeping each group's formula order. Dummies precede
    // numeric terms in the final column layout.
    std::vector<std::string> categorical, numeric;
    for (const auto& term : formula.terms) {
        if (term == frame.team_column) {
            categorical.push_back(term);
        } else if (frame.has_covariate(term)) {
            numeric.push_back(term);
        } else {
            throw SchemaError("formula term not present in model frame: " + term);
        }
    }

    DesignMatrix design;
    design.column_names.push_back("Intercept");
    Eigen::Index p = 1;
    for (const auto& term : categorical) {
        if (frame.team_levels.size() < 2) {
            throw SchemaError("categorical term " + term +
                              " has fewer than 2 levels; no contrast possible");
        }
        design.reference_levels[term] = frame.team_levels.front();
        for (std::size_t lvl = 1; lvl < frame.team_levels.size(); ++lvl) {
            design.column_names.push_back(term + "[T." + frame.team_levels[lvl] + "]");
        }
        p += static_cast<Eigen::Index>(frame.team_levels.size()) - 1;
    }
    p += static_cast<Eigen::Index>(numeric.size());
    for (const auto& term : numeric) design.column_names.push_back(term);

    design.values = Eigen::MatrixXd::Zero(n, p);
    design.values.col(0).setOnes();
    Eigen::Index col = 1;
    for (std::size_t t = 0; t < categorical.size(); ++t) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const int lvl = frame.team[static_cast<std::size_t>(i)];
            if (lvl > 0) design.values(i, col + lvl - 1) = 1.0;
        }
        col += static_cast<Eigen::Index>(frame.team_levels.size()) - 1;
    }
    for (const auto& term : numeric) {
        const auto& values = frame.covariate(term);
        for (Eigen::Index i = 0; i < n; ++i) {
            design.values(i, col) = values[static_cast<std::size_t>(i)];
        }
        ++col;
    }

    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        y(i) = static_cast<double>(frame.response[static_cast<std::size_t>(i)]);
    }
    return {std::move(design), std::move(y)};
}

} // namespace countreg
