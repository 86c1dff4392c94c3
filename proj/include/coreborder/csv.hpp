#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "coreborder/dataset.hpp"
#include "coreborder/resampling.hpp"

namespace coreborder {

enum class NaPolicy { error, drop_row };

struct CsvSchema {
    /// Header name, or zero-based column index.
    std::variant<std::string, std::size_t> label_column = std::string("label");
    char delimiter = ',';
    bool has_header = true;
    NaPolicy na_policy = NaPolicy::error;
};

/// Reads an RFC-4180 style file. Rows keep file order and get row ids
/// 0..n-1; labels are taken verbatim; features are the non-label columns in
/// file order.
///
/// Throws IoError if the file cannot be read, DataError for an empty file, a
/// missing label column, ragged rows, or an unparsable numeric cell (reported
/// with its line and column) unless na_policy is drop_row.
Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema);
Dataset read_csv(std::istream& in, const CsvSchema& schema);

/// Writes features, then the label column, then optionally "provenance".
/// Numbers use the shortest representation that parses back to the same
/// double.
void write_csv(std::ostream& out, const Dataset& data);
void write_csv(std::ostream& out, const ResampleResult& result, bool include_provenance);
void write_csv(const Dataset& data, const std::filesystem::path& path);
void write_csv(const ResampleResult& result, const std::filesystem::path& path,
               bool include_provenance);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace coreborder
