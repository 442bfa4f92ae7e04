#pragma once

#include <string>
#include <utility>
#include <vector>

namespace curvedspec {

// Column-oriented numeric table with ordered provenance metadata. CSV output
// uses '#'-prefixed header lines, '.' decimal separator and 17 significant
// digits so that re-parsing reproduces every double bit-exactly.
struct Dataset {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    // Optional leading text column (e.g. a method or model tag per row).
    std::string label_column;
    std::vector<std::string> labels;

    void add_meta(const std::string& key, const std::string& value) { meta.emplace_back(key, value); }
    bool has_labels() const { return !label_column.empty(); }
};

std::string format_double(double v);  // shortest 17-significant-digit form
double parse_double(const std::string& s);

std::string to_csv(const Dataset& ds);
std::string to_json(const Dataset& ds);

Dataset parse_csv(const std::string& text);
Dataset parse_json(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// FNV-1a over the canonical key=value serialization; stable across runs.
std::string config_hash(const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace curvedspec
