#include "coreborder/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "coreborder/diagnostics.hpp"
#include "coreborder/error.hpp"

namespace coreborder {
namespace {

struct Record {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based line where the record starts
};

// Splits the stream into records, honoring quoted fields that contain the
// delimiter, doubled quotes and line breaks. Blank lines are skipped.
std::vector<Record> parse_records(std::istream& in, char delim) {
    std::vector<Record> records;
    std::string field;
    Record current;
    bool in_quotes = false;
    bool field_started = false;
    std::size_t line = 1;
    current.line = 1;

    auto end_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        const bool blank = current.fields.size() == 1 && current.fields[0].empty();
        if (!blank) records.push_back(std::move(current));
        current = Record{};
        current.line = line;
    };

    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        if (c == '"' && !field_started) {
            in_quotes = true;
            field_started = true;
        } else if (c == delim) {
            end_field();
        } else if (c == '\r') {
            if (in.peek() == '\n') continue;
            ++line;
            end_record();
        } else if (c == '\n') {
            ++line;
            end_record();
        } else {
            field.push_back(c);
            field_started = true;
        }
    }
    if (in_quotes) throw DataError("unterminated quoted field starting on line " + std::to_string(current.line));
    if (field_started || !field.empty() || !current.fields.empty()) end_record();
    return records;
}

std::optional<double> parse_number(std::string_view text) {
    auto is_space = [](char ch) { return ch == ' ' || ch == '\t'; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    double v = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

std::string quote(const std::string& field, char delim) {
    if (field.find_first_of(std::string{delim, '"', '\n', '\r'}) == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

Dataset read_csv(std::istream& in, const CsvSchema& schema) {
    auto records = parse_records(in, schema.delimiter);
    if (records.empty()) throw DataError("empty CSV input");

    std::vector<std::string> header;
    std::size_t first_data = 0;
    if (schema.has_header) {
        header = records.front().fields;
        first_data = 1;
    }
    const std::size_t width = records.front().fields.size();

    std::size_t label_col = 0;
    if (const auto* name = std::get_if<std::string>(&schema.label_column)) {
        if (!schema.has_header) throw DataError("label column given by name but the file has no header");
        auto it = std::find(header.begin(), header.end(), *name);
        if (it == header.end()) throw DataError("label column '" + *name + "' not found in header");
        if (std::count(header.begin(), header.end(), *name) > 1) {
            throw DataError("label column name '" + *name + "' is ambiguous");
        }
        label_col = static_cast<std::size_t>(it - header.begin());
    } else {
        label_col = std::get<std::size_t>(schema.label_column);
        if (label_col >= width) {
            throw DataError("label column index " + std::to_string(label_col) + " out of range (" +
                            std::to_string(width) + " columns)");
        }
    }
    if (width < 2) throw DataError("need at least one feature column besides the label");

    std::vector<std::string> feature_names;
    std::string label_name = "label";
    for (std::size_t c = 0; c < width; ++c) {
        const std::string name = schema.has_header ? header[c] : "f" + std::to_string(c);
        if (c == label_col) {
            label_name = schema.has_header ? header[c] : "label";
        } else {
            feature_names.push_back(name);
        }
    }
    auto column_name = [&](std::size_t c) {
        return schema.has_header ? "'" + header[c] + "'" : std::to_string(c);
    };

    std::vector<double> features;
    std::vector<Label> labels;
    std::size_t dropped = 0;
    std::vector<double> row;
    for (std::size_t r = first_data; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != width) {
            throw DataError("line " + std::to_string(rec.line) + ": expected " + std::to_string(width) +
                            " fields, found " + std::to_string(rec.fields.size()));
        }
        row.clear();
        bool ok = true;
        for (std::size_t c = 0; c < width && ok; ++c) {
            if (c == label_col) continue;
            if (auto v = parse_number(rec.fields[c])) {
                row.push_back(*v);
            } else if (schema.na_policy == NaPolicy::drop_row) {
                ok = false;
            } else {
                throw DataError("line " + std::to_string(rec.line) + ", column " + column_name(c) +
                                ": cannot parse '" + rec.fields[c] + "' as a finite number");
            }
        }
        if (!ok) {
            ++dropped;
            continue;
        }
        features.insert(features.end(), row.begin(), row.end());
        labels.push_back(rec.fields[label_col]);
    }
    if (dropped > 0) warn("dropped " + std::to_string(dropped) + " rows with unparsable values");
    if (labels.empty()) throw DataError("CSV input has no data rows");
    return Dataset(std::move(features), width - 1, std::move(labels), {}, std::move(feature_names),
                   std::move(label_name));
}

Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return read_csv(in, schema);
}

namespace {

void write_rows(std::ostream& out, const Dataset& data, const std::vector<Provenance>* provenance) {
    const char delim = ',';
    for (std::size_t c = 0; c < data.dims(); ++c) out << quote(data.feature_names()[c], delim) << delim;
    out << quote(data.label_name(), delim);
    if (provenance) out << delim << "provenance";
    out << '\n';
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (double v : data.row(i)) out << format_double(v) << delim;
        out << quote(data.label(i), delim);
        if (provenance) out << delim << to_string((*provenance)[i]);
        out << '\n';
    }
}

template <class Fn>
void write_file(const std::filesystem::path& path, Fn&& fn) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    fn(out);
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

void write_csv(std::ostream& out, const Dataset& data) {
    write_rows(out, data, nullptr);
}

void write_csv(std::ostream& out, const ResampleResult& result, bool include_provenance) {
    if (result.provenance.size() != result.dataset.size()) {
        throw DataError("provenance does not cover every row");
    }
    write_rows(out, result.dataset, include_provenance ? &result.provenance : nullptr);
}

void write_csv(const Dataset& data, const std::filesystem::path& path) {
    write_file(path, [&](std::ostream& out) { write_csv(out, data); });
}

void write_csv(const ResampleResult& result, const std::filesystem::path& path,
               bool include_provenance) {
    write_file(path, [&](std::ostream& out) { write_csv(out, result, include_provenance); });
}

}  // namespace coreborder
