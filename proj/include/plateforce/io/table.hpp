#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plateforce::io {

struct Column {
    std::string name;
    std::string unit;  ///< "1" for dimensionless

    /// CSV header label, "name_unit" or bare name when dimensionless.
    std::string label() const { return unit == "1" ? name : name + "_" + unit; }
};

/// Numeric result table with a metadata block.
struct ResultTable {
    std::vector<Column> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;  ///< ordered key/value lines
    std::vector<std::string> warnings;

    void add_row(std::vector<double> row);
    std::size_t column_index(std::string_view name) const;
    double at(std::size_t row, std::string_view column) const;
    const std::string* meta(std::string_view key) const;
};

/// Shortest round-trippable form, at most 17 significant digits.
std::string format_number(double value);

/// Comma-separated values with '#'-prefixed metadata. Identical tables give identical bytes.
std::string to_csv(const ResultTable& table);

/// Inverse of to_csv. Throws ParseError naming the offending line.
ResultTable parse_csv(std::string_view text, const std::string& source = "<csv>");

}  // namespace plateforce::io
