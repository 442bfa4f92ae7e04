#include "curvedspec/dataset.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace curvedspec {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc()) throw std::runtime_error("format_double failed");
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end)
        throw std::runtime_error("parse_double: bad value '" + s + "'");
    return v;
}

namespace {

void check_labels(const Dataset& ds) {
    if (ds.has_labels() && ds.labels.size() != ds.rows.size())
        throw std::runtime_error("dataset: label/row count mismatch");
}

}  // namespace

std::string to_csv(const Dataset& ds) {
    check_labels(ds);
    std::ostringstream out;
    for (const auto& [k, v] : ds.meta) out << "# " << k << " = " << v << "\n";
    if (ds.has_labels()) out << "# label_column = " << ds.label_column << "\n";
    bool first = true;
    if (ds.has_labels()) {
        out << ds.label_column;
        first = false;
    }
    for (const auto& c : ds.columns) {
        out << (first ? "" : ",") << c;
        first = false;
    }
    out << "\n";
    for (std::size_t r = 0; r < ds.rows.size(); ++r) {
        first = true;
        if (ds.has_labels()) {
            out << ds.labels[r];
            first = false;
        }
        for (double v : ds.rows[r]) {
            out << (first ? "" : ",") << format_double(v);
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

std::string to_json(const Dataset& ds) {
    check_labels(ds);
    nlohmann::ordered_json meta;
    for (const auto& [k, v] : ds.meta) meta[k] = v;
    nlohmann::ordered_json j;
    j["meta"] = meta;
    auto cols = nlohmann::ordered_json::array();
    if (ds.has_labels()) cols.push_back(ds.label_column);
    for (const auto& c : ds.columns) cols.push_back(c);
    j["columns"] = cols;
    if (ds.has_labels()) j["label_column"] = ds.label_column;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < ds.rows.size(); ++r) {
        auto row = nlohmann::ordered_json::array();
        if (ds.has_labels()) row.push_back(ds.labels[r]);
        for (double v : ds.rows[r]) row.push_back(v);
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

Dataset parse_csv(const std::string& text) {
    Dataset ds;
    std::istringstream in(text);
    std::string line;
    bool header_done = false;
    std::string label_col;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq != std::string::npos) {
                std::string k = line.substr(1, eq - 1);
                std::string v = line.substr(eq + 1);
                auto trim = [](std::string& s) {
                    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
                    while (!s.empty() && s.back() == ' ') s.pop_back();
                };
                trim(k);
                trim(v);
                if (k == "label_column") label_col = v;
                else ds.add_meta(k, v);
            }
            continue;
        }
        if (!header_done) {
            auto cols = split(line, ',');
            if (!label_col.empty() && !cols.empty() && cols.front() == label_col) {
                ds.label_column = label_col;
                cols.erase(cols.begin());
            }
            ds.columns = std::move(cols);
            header_done = true;
            continue;
        }
        auto parts = split(line, ',');
        if (ds.has_labels()) {
            ds.labels.push_back(parts.front());
            parts.erase(parts.begin());
        }
        std::vector<double> row;
        row.reserve(parts.size());
        for (const auto& p : parts) row.push_back(parse_double(p));
        ds.rows.push_back(std::move(row));
    }
    return ds;
}

Dataset parse_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Dataset ds;
    for (const auto& [k, v] : j.at("meta").items()) ds.add_meta(k, v.get<std::string>());
    auto cols = j.at("columns").get<std::vector<std::string>>();
    if (j.contains("label_column")) {
        ds.label_column = j.at("label_column").get<std::string>();
        cols.erase(cols.begin());
    }
    ds.columns = std::move(cols);
    for (const auto& row : j.at("rows")) {
        std::vector<double> nums;
        bool first = true;
        for (const auto& cell : row) {
            if (first && ds.has_labels()) {
                ds.labels.push_back(cell.get<std::string>());
                first = false;
                continue;
            }
            first = false;
            nums.push_back(cell.get<double>());
        }
        ds.rows.push_back(std::move(nums));
    }
    return ds;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string config_hash(const std::vector<std::pair<std::string, std::string>>& entries) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [k, v] : entries) {
        mix(k);
        mix("=");
        mix(v);
        mix(";");
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace curvedspec
