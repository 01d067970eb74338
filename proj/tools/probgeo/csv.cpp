#include "csv.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "cli_errors.hpp"

namespace probgeo::cli {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        std::string field =
            line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        // trim surrounding whitespace
        const auto first = field.find_first_not_of(" \t\r");
        const auto last = field.find_last_not_of(" \t\r");
        fields.push_back(first == std::string::npos ? std::string{}
                                                    : field.substr(first, last - first + 1));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::optional<double> parse_cell(const std::string& cell) {
    if (cell.empty()) return std::nullopt;
    char* end = nullptr;
    const double value = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size()) return std::nullopt;
    if (!std::isfinite(value)) return std::nullopt;
    return value;
}

/// Rows of the requested columns, with header auto-detection.
std::vector<std::vector<double>> read_rows(const std::string& path,
                                           const std::vector<std::size_t>& columns) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_number = 0;
    bool first_content_row = true;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_fields(line);

        std::vector<double> row;
        row.reserve(columns.size());
        bool ok = true;
        for (std::size_t c : columns) {
            if (c >= fields.size()) {
                ok = false;
                break;
            }
            const auto value = parse_cell(fields[c]);
            if (!value) {
                ok = false;
                break;
            }
            row.push_back(*value);
        }
        if (!ok) {
            if (first_content_row) {
                first_content_row = false;  // header row
                continue;
            }
            throw ParseError("'" + path + "' line " + std::to_string(line_number) +
                             ": cannot parse requested column(s) as finite floats");
        }
        first_content_row = false;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw EmptyInput("'" + path + "' holds no data rows");
    return rows;
}

}  // namespace

Sample ingest_csv(const std::string& path, std::size_t column) {
    const auto rows = read_rows(path, {column});
    Sample sample;
    sample.reserve(rows.size());
    for (const auto& row : rows) sample.push_back(row.front());
    return sample;
}

VectorSample ingest_csv_columns(const std::string& path,
                                const std::vector<std::size_t>& columns) {
    if (columns.empty()) throw UsageError("ingest_csv_columns: no columns requested");
    return VectorSample::from_rows(read_rows(path, columns));
}

}  // namespace probgeo::cli
