#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace countreg {

enum class ColumnKind { numeric, text, date };

// One column of the merged match table. Numeric columns hold parsed values
// (cells that fail to parse are simply missing); text/date columns hold
// strings, with dates normalized to yyyy-mm-dd.
struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::text;
    std::vector<double> num;
    std::vector<std::string> text;
    std::vector<std::uint8_t> missing;

    std::size_t missing_count() const;
};

// Column-oriented table of merged season files. Row order is stable
// (file order, then row order); the row index doubles as the
// observation id used throughout the pipeline.
struct MatchTable {
    std::vector<Column> columns;
    std::size_t rows = 0;
    std::vector<std::string> source_files;

    const Column* find(const std::string& name) const;
    const Column& require(const std::string& name) const;
    bool has(const std::string& name) const { return find(name) != nullptr; }
};

// Row view used by tests and spot inspection.
struct MatchRecord {
    std::string date;
    std::string home_team;
    std::optional<long> fthg, htag, hst, hc, hr, ar;
    std::optional<long> attendance, hhw, ho;
    std::optional<std::string> referee;
};

struct SummaryStats {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
    double mean = 0, sd = 0;
    std::size_t n = 0;
    std::size_t missing = 0;
};

struct MissingEntry {
    std::string column;
    std::size_t missing = 0;
    double fraction = 0.0;
};

enum class LogMode { plain_log_drop_zeros, log1p };

// Analysis-ready frame: selected teams only, no missing cells,
// log-transformed shot/corner covariates.
struct ModelFrame {
    std::vector<long> response;                       // FTHG
    std::vector<std::string> covariate_names;         // HTAG, logHST, logHC, HR, AR
    std::vector<std::vector<double>> covariates;      // column-major, parallel to names
    std::string team_column = "HomeTeam";
    std::vector<std::string> team_levels;             // lexicographic
    std::vector<int> team;                            // level index per row
    std::vector<std::size_t> observation_ids;         // original table row indices
    std::size_t zero_rows_excluded = 0;               // plain-log mode only

    std::size_t n() const { return response.size(); }
    const std::vector<double>& covariate(const std::string& name) const;
    bool has_covariate(const std::string& name) const;
};

// Parse and merge season CSVs (football-data.co.uk header notation).
// Columns absent from a file are missing for that file's rows; malformed
// numeric cells become missing, not errors.
MatchTable load_matches(const std::vector<std::string>& paths);

std::vector<MissingEntry> missingness_report(const MatchTable& table);

// Drop columns whose missing fraction exceeds the threshold, and
// categorical (non-date text) columns with more distinct levels than
// max_category_levels. Never changes rows.
MatchTable prune_columns(const MatchTable& table, double missing_threshold,
                         std::size_t max_category_levels);

// Summary statistics with type-7 quartiles and n-1 standard deviation.
SummaryStats describe(const MatchTable& table, const std::string& column);

ModelFrame build_model_frame(const MatchTable& table, const std::vector<std::string>& teams,
                             LogMode log_mode);

// Bins 0..tail_threshold plus a single "more than T" bin; counts only
// rows with non-missing FTHG.
std::vector<std::pair<std::string, long>> goal_histogram(const MatchTable& table,
                                                         int tail_threshold);

// Home-team names in first-appearance order.
std::vector<std::string> home_teams(const MatchTable& table);

// Matches per home team, descending by count then name.
std::vector<std::pair<std::string, long>> team_match_counts(const MatchTable& table);

MatchRecord record(const MatchTable& table, std::size_t row);

namespace detail {
std::optional<double> parse_numeric(const std::string& cell);
std::optional<std::string> parse_date(const std::string& cell); // -> yyyy-mm-dd
std::vector<std::vector<std::string>> read_csv(const std::string& path);
} // namespace detail

} // namespace countreg
