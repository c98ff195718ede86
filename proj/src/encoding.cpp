#include "mtlr/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "mtlr/errors.hpp"

namespace mtlr {

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

bool is_missing_cell(const std::string& cell) {
    return cell.empty() || cell == "NA";
}

Schema Schema::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open schema file: " + path);
    }
    Schema schema;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": expected `column = categorical|continuous`");
        }
        std::string name = trim(line.substr(0, eq));
        std::string kind = trim(line.substr(eq + 1));
        if (name.empty()) {
            throw DataError(path + ":" + std::to_string(line_no) + ": empty column name");
        }
        if (schema.has(name)) {
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": duplicate column `" + name + "`");
        }
        if (kind == "categorical") {
            schema.columns.emplace_back(name, ColumnKind::Categorical);
        } else if (kind == "continuous") {
            schema.columns.emplace_back(name, ColumnKind::Continuous);
        } else {
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": unknown column kind `" + kind + "`");
        }
    }
    return schema;
}

bool Schema::has(const std::string& name) const {
    return std::any_of(columns.begin(), columns.end(),
                       [&](const auto& c) { return c.first == name; });
}

ColumnKind Schema::kind_of(const std::string& name) const {
    for (const auto& c : columns) {
        if (c.first == name) return c.second;
    }
    throw DataError("column `" + name + "` is not declared in the schema");
}

int FeatureEncoding::dimension() const {
    int d = 0;
    for (const auto& c : columns) d += c.width();
    return d;
}

Eigen::VectorXd FeatureEncoding::encode_row(const std::vector<std::string>& cells) const {
    if (cells.size() != columns.size()) {
        throw DataError("encode_row: cell count does not match encoded columns");
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dimension());
    int offset = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const Column& col = columns[c];
        if (col.kind == ColumnKind::Categorical) {
            // Missing values were folded into the "" level at fit time;
            // levels unseen in training leave the whole block at zero.
            const std::string& value = is_missing_cell(cells[c]) ? std::string() : cells[c];
            auto it = std::lower_bound(col.levels.begin(), col.levels.end(), value);
            if (it != col.levels.end() && *it == value) {
                out[offset + static_cast<int>(it - col.levels.begin())] = 1.0;
            }
            offset += col.width();
        } else {
            double value;
            if (is_missing_cell(cells[c])) {
                value = col.mean;
            } else {
                try {
                    std::size_t pos = 0;
                    value = std::stod(cells[c], &pos);
                    if (pos != cells[c].size()) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    throw DataError("non-numeric value `" + cells[c] +
                                    "` in continuous column `" + col.name + "`");
                }
            }
            out[offset++] = (value - col.mean) / col.stddev;
        }
    }
    return out;
}

}  // namespace mtlr
