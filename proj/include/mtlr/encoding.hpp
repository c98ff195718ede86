#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace mtlr {

enum class ColumnKind { Categorical, Continuous };

// Declared kind of each feature column, read from a flat key-value file
// (`column = categorical|continuous`, '#' starts a comment).
struct Schema {
    std::vector<std::pair<std::string, ColumnKind>> columns;

    static Schema load(const std::string& path);

    bool has(const std::string& name) const;
    ColumnKind kind_of(const std::string& name) const;
};

// Fitted, deterministic feature transform. Categorical columns one-hot
// encode over the levels seen at fit time (sorted; missing values form their
// own empty-string level; unseen levels map to an all-zero block).
// Continuous columns are standardized with training mean and population
// standard deviation; missing values impute to the mean.
class FeatureEncoding {
public:
    struct Column {
        std::string name;
        ColumnKind kind = ColumnKind::Continuous;
        std::vector<std::string> levels;  // categorical: sorted level list
        double mean = 0.0;                // continuous statistics
        double stddev = 1.0;

        int width() const {
            return kind == ColumnKind::Categorical
                       ? static_cast<int>(levels.size())
                       : 1;
        }
    };

    std::vector<Column> columns;

    int dimension() const;

    // Encodes one raw row given as the cell values for `columns`, in order.
    Eigen::VectorXd encode_row(const std::vector<std::string>& cells) const;
};

// True for the cell values treated as missing ("" and "NA").
bool is_missing_cell(const std::string& cell);

}  // namespace mtlr
