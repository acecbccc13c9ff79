#include "countreg/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "countreg/errors.hpp"

namespace countreg {

namespace {

const std::set<std::string> kNumericColumns = {
    "FTHG", "HTAG", "HST", "HC", "HR", "AR", "Attendance", "HHW", "HO",
};

const std::set<std::string> kTextColumns = {"HomeTeam", "AwayTeam", "Referee"};

ColumnKind column_kind(const std::string& name) {
    if (name == "Date") return ColumnKind::date;
    if (kNumericColumns.count(name)) return ColumnKind::numeric;
    return ColumnKind::text;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool is_missing_token(const std::string& s) {
    return s.empty() || s == "NA" || s == "N/A" || s == "NaN";
}

void append_missing(Column& col) {
    col.missing.push_back(1);
    if (col.kind == ColumnKind::numeric) {
        col.num.push_back(std::nan(""));
    } else {
        col.text.emplace_back();
    }
}

void append_cell(Column& col, const std::string& raw) {
    const std::string cell = trim(raw);
    if (is_missing_token(cell)) {
        append_missing(col);
        return;
    }
    switch (col.kind) {
        case ColumnKind::numeric: {
            auto v = detail::parse_numeric(cell);
            if (v) {
                col.num.push_back(*v);
                col.missing.push_back(0);
            } else {
                append_missing(col);
            }
            break;
        }
        case ColumnKind::date: {
            auto d = detail::parse_date(cell);
            if (d) {
                col.text.push_back(*d);
                col.missing.push_back(0);
            } else {
                append_missing(col);
            }
            break;
        }
        case ColumnKind::text:
            col.text.push_back(cell);
            col.missing.push_back(0);
            break;
    }
}

bool days_in_month(int y, int m, int& days) {
    static const int base[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m < 1 || m > 12) return false;
    days = base[m - 1];
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap) days = 29;
    return true;
}

} // namespace

namespace detail {

std::optional<double> parse_numeric(const std::string& cell) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

std::optional<std::string> parse_date(const std::string& cell) {
    // Season files mix dd/mm/yy and dd/mm/yyyy.
    int d = 0, m = 0, y = 0;
    char extra = 0;
    const int parts = std::sscanf(cell.c_str(), "%d/%d/%d%c", &d, &m, &y, &extra);
    if (parts != 3) return std::nullopt;
    if (y < 100) y = (y < 70) ? 2000 + y : 1900 + y;
    int dim = 0;
    if (y < 1800 || y > 2200 || !days_in_month(y, m, dim) || d < 1 || d > dim) {
        return std::nullopt;
    }
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return std::string(buf);
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    // Strip UTF-8 BOM if present; otherwise bytes pass through untouched,
    // which also covers Latin-1 files.
    std::size_t pos = 0;
    if (data.size() >= 3 && data.compare(0, 3, "\xEF\xBB\xBF") == 0) pos = 3;

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    auto end_field = [&] {
        row.push_back(field);
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        const bool blank = row.size() == 1 && trim(row[0]).empty();
        if (!blank) rows.push_back(std::move(row));
        row.clear();
    };
    for (; pos < data.size(); ++pos) {
        const char c = data[pos];
        if (in_quotes) {
            if (c == '"') {
                if (pos + 1 < data.size() && data[pos + 1] == '"') {
                    field += '"';
                    ++pos;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_row();
        } else {
            field += c;
        }
    }
    if (!field.empty() || !row.empty()) {
        if (!field.empty() && field.back() == '\r') field.pop_back();
        end_row();
    }
    return rows;
}

} // namespace detail

std::size_t Column::missing_count() const {
    std::size_t n = 0;
    for (auto m : missing) n += m;
    return n;
}

const Column* MatchTable::find(const std::string& name) const {
    for (const auto& c : columns) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

const Column& MatchTable::require(const std::string& name) const {
    const Column* c = find(name);
    if (!c) throw SchemaError("column not present: " + name);
    return *c;
}

MatchTable load_matches(const std::vector<std::string>& paths) {
    MatchTable table;
    for (const auto& path : paths) {
        auto rows = detail::read_csv(path);
        if (rows.empty()) throw SchemaError("file has no header row: " + path);
        std::vector<std::string> header;
        for (const auto& h : rows[0]) header.push_back(trim(h));
        auto has_header = [&](const std::string& name) {
            return std::find(header.begin(), header.end(), name) != header.end();
        };
        for (const char* required : {"Date", "HomeTeam", "FTHG"}) {
            if (!has_header(required)) {
                throw SchemaError("header of " + path + " lacks required column " + required);
            }
        }

        // Ensure every header column exists in the merged table, backfilling
        // missing cells for rows from earlier files.
        for (const auto& name : header) {
            if (name.empty() || table.find(name)) continue;
            Column col;
            col.name = name;
            col.kind = column_kind(name);
            for (std::size_t i = 0; i < table.rows; ++i) append_missing(col);
            table.columns.push_back(std::move(col));
        }

        std::map<std::string, std::size_t> index;
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (!header[j].empty()) index.emplace(header[j], j);
        }
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const auto& cells = rows[r];
            for (auto& col : table.columns) {
                auto it = index.find(col.name);
                if (it == index.end() || it->second >= cells.size()) {
                    append_missing(col);
                } else {
                    append_cell(col, cells[it->second]);
                }
            }
            ++table.rows;
        }
        table.source_files.push_back(path);
    }
    return table;
}

std::vector<MissingEntry> missingness_report(const MatchTable& table) {
    std::vector<MissingEntry> report;
    report.reserve(table.columns.size());
    for (const auto& col : table.columns) {
        MissingEntry e;
        e.column = col.name;
        e.missing = col.missing_count();
        e.fraction = table.rows == 0 ? 0.0 : static_cast<double>(e.missing) / table.rows;
        report.push_back(std::move(e));
    }
    return report;
}

MatchTable prune_columns(const MatchTable& table, double missing_threshold,
                         std::size_t max_category_levels) {
    if (missing_threshold < 0.0 || missing_threshold > 1.0) {
        throw ConfigError("missing threshold must lie in [0, 1]");
    }
    MatchTable out;
    out.rows = table.rows;
    out.source_files = table.source_files;
    for (const auto& col : table.columns) {
        const double frac =
            table.rows == 0 ? 0.0 : static_cast<double>(col.missing_count()) / table.rows;
        bool drop = frac > missing_threshold;
        if (!drop && col.kind == ColumnKind::text) {
            std::set<std::string> levels;
            for (std::size_t i = 0; i < table.rows; ++i) {
                if (!col.missing[i]) levels.insert(col.text[i]);
            }
            drop = levels.size() > max_category_levels;
        }
        if (drop && (col.name == "FTHG" || col.name == "HomeTeam")) {
            throw ConfigError("pruning would drop required modeling column " + col.name);
        }
        if (!drop) out.columns.push_back(col);
    }
    return out;
}

SummaryStats describe(const MatchTable& table, const std::string& column) {
    const Column& col = table.require(column);
    if (col.kind != ColumnKind::numeric) {
        throw SchemaError("describe: column is not numeric: " + column);
    }
    std::vector<double> values;
    values.reserve(table.rows);
    for (std::size_t i = 0; i < table.rows; ++i) {
        if (!col.missing[i]) values.push_back(col.num[i]);
    }
    SummaryStats s;
    s.missing = table.rows - values.size();
    s.n = values.size();
    if (values.empty()) return s;

    std::sort(values.begin(), values.end());
    auto quantile = [&](double p) {
        // Type-7: h = (n-1)p, linear interpolation between order statistics.
        const double h = (static_cast<double>(values.size()) - 1.0) * p;
        const std::size_t lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, values.size() - 1);
        return values[lo] + (h - std::floor(h)) * (values[hi] - values[lo]);
    };
    s.min = values.front();
    s.max = values.back();
    s.q1 = quantile(0.25);
    s.median = quantile(0.5);
    s.q3 = quantile(0.75);
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = values.size() > 1 ? std::sqrt(ss / (static_cast<double>(values.size()) - 1.0)) : 0.0;
    return s;
}

const std::vector<double>& ModelFrame::covariate(const std::string& name) const {
    for (std::size_t i = 0; i < covariate_names.size(); ++i) {
        if (covariate_names[i] == name) return covariates[i];
    }
    throw SchemaError("model frame lacks covariate " + name);
}

bool ModelFrame::has_covariate(const std::string& name) const {
    return std::find(covariate_names.begin(), covariate_names.end(), name) !=
           covariate_names.end();
}

ModelFrame build_model_frame(const MatchTable& table, const std::vector<std::string>& teams,
                             LogMode log_mode) {
    if (teams.empty()) throw ConfigError("build_model_frame: team list is empty");
    const Column& fthg = table.require("FTHG");
    const Column& home = table.require("HomeTeam");
    const Column& htag = table.require("HTAG");
    const Column& hst = table.require("HST");
    const Column& hc = table.require("HC");
    const Column& hr = table.require("HR");
    const Column& ar = table.require("AR");

    const std::set<std::string> wanted(teams.begin(), teams.end());

    ModelFrame frame;
    frame.covariate_names = {"HTAG", "logHST", "logHC", "HR", "AR"};
    frame.covariates.assign(5, {});

    std::set<std::string> levels_seen;
    std::vector<std::string> row_team;
    for (std::size_t i = 0; i < table.rows; ++i) {
        if (home.missing[i] || !wanted.count(home.text[i])) continue;
        if (fthg.missing[i] || htag.missing[i] || hst.missing[i] || hc.missing[i] ||
            hr.missing[i] || ar.missing[i]) {
            continue;
        }
        const double hst_v = hst.num[i];
        const double hc_v = hc.num[i];
        double log_hst = 0.0, log_hc = 0.0;
        if (log_mode == LogMode::plain_log_drop_zeros) {
            if (hst_v <= 0.0 || hc_v <= 0.0) {
                ++frame.zero_rows_excluded;
                continue;
            }
            log_hst = std::log(hst_v);
            log_hc = std::log(hc_v);
        } else {
            log_hst = std::log1p(hst_v);
            log_hc = std::log1p(hc_v);
        }
        frame.response.push_back(static_cast<long>(fthg.num[i]));
        frame.covariates[0].push_back(htag.num[i]);
        frame.covariates[1].push_back(log_hst);
        frame.covariates[2].push_back(log_hc);
        frame.covariates[3].push_back(hr.num[i]);
        frame.covariates[4].push_back(ar.num[i]);
        frame.observation_ids.push_back(i);
        row_team.push_back(home.text[i]);
        levels_seen.insert(home.text[i]);
    }
    if (frame.response.empty()) {
        throw ConfigError("build_model_frame: no rows left after filtering");
    }
    frame.team_levels.assign(levels_seen.begin(), levels_seen.end()); // set is sorted
    std::map<std::string, int> level_index;
    for (std::size_t i = 0; i < frame.team_levels.size(); ++i) {
        level_index[frame.team_levels[i]] = static_cast<int>(i);
    }
    frame.team.reserve(row_team.size());
    for (const auto& t : row_team) frame.team.push_back(level_index[t]);
    return frame;
}

std::vector<std::pair<std::string, long>> goal_histogram(const MatchTable& table,
                                                         int tail_threshold) {
    if (tail_threshold < 1) throw ConfigError("goal_histogram: tail threshold must be >= 1");
    std::vector<long> counts(static_cast<std::size_t>(tail_threshold) + 2, 0);
    if (const Column* fthg = table.find("FTHG")) {
        for (std::size_t i = 0; i < table.rows; ++i) {
            if (fthg->missing[i]) continue;
            const long g = static_cast<long>(fthg->num[i]);
            if (g > tail_threshold) {
                ++counts.back();
            } else if (g >= 0) {
                ++counts[static_cast<std::size_t>(g)];
            }
        }
    }
    std::vector<std::pair<std::string, long>> bins;
    for (int k = 0; k <= tail_threshold; ++k) {
        bins.emplace_back(std::to_string(k), counts[static_cast<std::size_t>(k)]);
    }
    bins.emplace_back("more than " + std::to_string(tail_threshold), counts.back());
    return bins;
}

std::vector<std::string> home_teams(const MatchTable& table) {
    std::vector<std::string> teams;
    std::set<std::string> seen;
    if (const Column* home = table.find("HomeTeam")) {
        for (std::size_t i = 0; i < table.rows; ++i) {
            if (home->missing[i]) continue;
            if (seen.insert(home->text[i]).second) teams.push_back(home->text[i]);
        }
    }
    return teams;
}

std::vector<std::pair<std::string, long>> team_match_counts(const MatchTable& table) {
    std::map<std::string, long> counts;
    if (const Column* home = table.find("HomeTeam")) {
        for (std::size_t i = 0; i < table.rows; ++i) {
            if (!home->missing[i]) ++counts[home->text[i]];
        }
    }
    std::vector<std::pair<std::string, long>> out(counts.begin(), counts.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return out;
}

MatchRecord record(const MatchTable& table, std::size_t row) {
    if (row >= table.rows) throw std::out_of_range("record: row index out of range");
    MatchRecord rec;
    auto get_long = [&](const char* name) -> std::optional<long> {
        const Column* c = table.find(name);
        if (!c || c->kind != ColumnKind::numeric || c->missing[row]) return std::nullopt;
        return static_cast<long>(c->num[row]);
    };
    if (const Column* c = table.find("Date"); c && !c->missing[row]) rec.date = c->text[row];
    if (const Column* c = table.find("HomeTeam"); c && !c->missing[row]) {
        rec.home_team = c->text[row];
    }
    rec.fthg = get_long("FTHG");
    rec.htag = get_long("HTAG");
    rec.hst = get_long("HST");
    rec.hc = get_long("HC");
    rec.hr = get_long("HR");
    rec.ar = get_long("AR");
    rec.attendance = get_long("Attendance");
    rec.hhw = get_long("HHW");
    rec.ho = get_long("HO");
    if (const Column* c = table.find("Referee"); c && !c->missing[row]) {
        rec.referee = c->text[row];
    }
    return rec;
}

} // namespace countreg
