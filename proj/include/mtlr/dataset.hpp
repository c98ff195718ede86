#pragma once

#include <string>
#include <vector>

#include "mtlr/encoding.hpp"
#include "mtlr/types.hpp"

namespace mtlr {

// Minimal comma-separated table: header row plus string cells. Fields are
// split on commas and trimmed; quoting is not supported.
struct RawTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column position, or -1 when absent.
    int column_index(const std::string& name) const;
};

RawTable read_csv(const std::string& path);

struct IngestResult {
    std::vector<SubjectRecord> records;
    FeatureEncoding encoding;
    int max_event = 0;
};

// Fits a FeatureEncoding on the table and encodes every row. The CSV must
// carry `id`, `time` (non-negative float) and `event` (integer >= 0)
// columns; every other column must be declared in the schema.
IngestResult ingest_csv(const std::string& path, const Schema& schema);

// Encodes a table with an already-fitted encoding (the predict path). All
// encoded feature columns must be present; `time`/`event` are read when
// present and required when `require_outcome` is set.
std::vector<SubjectRecord> encode_table(const RawTable& table,
                                        const FeatureEncoding& encoding,
                                        bool require_outcome);

}  // namespace mtlr
