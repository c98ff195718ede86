#pragma once

#include <stdexcept>
#include <string>

namespace mtlr {

// Malformed input: files, schemas, out-of-range labels, dimension mismatches.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical breakdown: divergent training, non-finite loss or gradient.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mtlr
