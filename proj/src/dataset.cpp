#include "mtlr/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "mtlr/errors.hpp"

namespace mtlr {

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        fields.push_back(trim(field));
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

double parse_time(const std::string& cell, std::size_t row) {
    double value;
    try {
        std::size_t pos = 0;
        value = std::stod(cell, &pos);
        if (pos != cell.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw DataError("row " + std::to_string(row) + ": non-numeric time `" + cell + "`");
    }
    if (!(value >= 0.0)) {
        throw DataError("row " + std::to_string(row) + ": negative time");
    }
    return value;
}

double parse_numeric(const std::string& cell, const std::string& column) {
    try {
        std::size_t pos = 0;
        double value = std::stod(cell, &pos);
        if (pos != cell.size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw DataError("non-numeric value `" + cell + "` in continuous column `" +
                        column + "`");
    }
}

int parse_event(const std::string& cell, std::size_t row) {
    int value;
    try {
        std::size_t pos = 0;
        value = std::stoi(cell, &pos);
        if (pos != cell.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw DataError("row " + std::to_string(row) + ": non-integer event `" + cell + "`");
    }
    if (value < 0) {
        throw DataError("row " + std::to_string(row) +
                        ": event indicator must be in 0..E, got " + cell);
    }
    return value;
}

}  // namespace

int RawTable::column_index(const std::string& name) const {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

RawTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open data file: " + path);
    }
    RawTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError("data file has no header row: " + path);
    }
    table.header = split_line(line);
    std::size_t row_no = 1;
    while (std::getline(in, line)) {
        ++row_no;
        if (trim(line).empty()) continue;
        auto fields = split_line(line);
        if (fields.size() != table.header.size()) {
            throw DataError(path + ": row " + std::to_string(row_no) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(fields));
    }
    return table;
}

IngestResult ingest_csv(const std::string& path, const Schema& schema) {
    RawTable table = read_csv(path);
    for (const char* required : {"id", "time", "event"}) {
        if (table.column_index(required) < 0) {
            throw DataError(path + ": missing required column `" + required + "`");
        }
    }

    // Feature layout follows the CSV header order; every feature column must
    // be declared in the schema.
    FeatureEncoding encoding;
    for (const auto& name : table.header) {
        if (name == "id" || name == "time" || name == "event") continue;
        FeatureEncoding::Column col;
        col.name = name;
        col.kind = schema.kind_of(name);
        encoding.columns.push_back(std::move(col));
    }

    // Fit per-column statistics.
    for (auto& col : encoding.columns) {
        int idx = table.column_index(col.name);
        if (col.kind == ColumnKind::Categorical) {
            std::set<std::string> levels;
            for (const auto& row : table.rows) {
                levels.insert(is_missing_cell(row[idx]) ? std::string() : row[idx]);
            }
            col.levels.assign(levels.begin(), levels.end());
        } else {
            double sum = 0.0;
            double n = 0.0;
            for (const auto& row : table.rows) {
                if (is_missing_cell(row[idx])) continue;
                sum += parse_numeric(row[idx], col.name);
                n += 1.0;
            }
            col.mean = n > 0.0 ? sum / n : 0.0;
            double ss = 0.0;
            for (const auto& row : table.rows) {
                if (is_missing_cell(row[idx])) continue;
                double d = parse_numeric(row[idx], col.name) - col.mean;
                ss += d * d;
            }
            col.stddev = n > 0.0 ? std::sqrt(ss / n) : 1.0;
            if (col.stddev == 0.0) col.stddev = 1.0;
        }
    }

    IngestResult result;
    result.encoding = std::move(encoding);
    result.records = encode_table(table, result.encoding, /*require_outcome=*/true);
    for (const auto& r : result.records) {
        result.max_event = std::max(result.max_event, r.event);
    }
    return result;
}

std::vector<SubjectRecord> encode_table(const RawTable& table,
                                        const FeatureEncoding& encoding,
                                        bool require_outcome) {
    int id_idx = table.column_index("id");
    if (id_idx < 0) {
        throw DataError("missing required column `id`");
    }
    int time_idx = table.column_index("time");
    int event_idx = table.column_index("event");
    if (require_outcome && (time_idx < 0 || event_idx < 0)) {
        throw DataError("missing required column `" +
                        std::string(time_idx < 0 ? "time" : "event") + "`");
    }

    std::vector<int> feature_idx;
    feature_idx.reserve(encoding.columns.size());
    for (const auto& col : encoding.columns) {
        int idx = table.column_index(col.name);
        if (idx < 0) {
            throw DataError("data file is missing feature column `" + col.name + "`");
        }
        feature_idx.push_back(idx);
    }

    std::vector<SubjectRecord> records;
    records.reserve(table.rows.size());
    std::vector<std::string> cells(encoding.columns.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        SubjectRecord rec;
        rec.id = row[id_idx];
        if (time_idx >= 0) rec.time = parse_time(row[time_idx], r + 2);
        if (event_idx >= 0) rec.event = parse_event(row[event_idx], r + 2);
        for (std::size_t c = 0; c < feature_idx.size(); ++c) {
            cells[c] = row[feature_idx[c]];
        }
        rec.features = encoding.encode_row(cells);
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace mtlr
