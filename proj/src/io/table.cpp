#include "plateforce/io/table.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "plateforce/error.hpp"

namespace plateforce::io {

namespace {

constexpr std::string_view kUnitsKey = "units";

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(',', start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

void ResultTable::add_row(std::vector<double> row) {
    detail::require(row.size() == columns.size(), "row has " + std::to_string(row.size()) + " cells, table has " +
                                                      std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

std::size_t ResultTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name) return i;
    throw InvalidArgument("no column named '" + std::string(name) + "'");
}

double ResultTable::at(std::size_t row, std::string_view column) const { return rows.at(row).at(column_index(column)); }

const std::string* ResultTable::meta(std::string_view key) const {
    for (const auto& [k, v] : metadata)
        if (k == key) return &v;
    return nullptr;
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    char buf[64];
    // shortest representation that parses back to the same double
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string to_csv(const ResultTable& table) {
    std::string out;
    for (const auto& [key, value] : table.metadata) out += "# " + key + ": " + value + "\n";
    for (const auto& w : table.warnings) out += "# warning: " + w + "\n";
    out += "# " + std::string(kUnitsKey) + ": ";
    for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i ? "," : "") + table.columns[i].unit;
    out += "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i ? "," : "") + table.columns[i].label();
    out += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += "\n";
    }
    return out;
}

ResultTable parse_csv(std::string_view text, const std::string& source) {
    ResultTable table;
    std::vector<std::string_view> units;
    bool have_header = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (line.front() == '#') {
            auto body = line.substr(1);
            if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
            const auto colon = body.find(": ");
            if (colon == std::string_view::npos) continue;
            const std::string key(body.substr(0, colon));
            const std::string value(body.substr(colon + 2));
            if (key == kUnitsKey) units = split_commas(line.substr(line.find(": ") + 2));
            else if (key == "warning") table.warnings.push_back(value);
            else table.metadata.emplace_back(key, value);
            continue;
        }
        const auto cells = split_commas(line);
        if (!have_header) {
            if (cells.size() != units.size())
                throw ParseError(source, line_no, "", "header has " + std::to_string(cells.size()) +
                                                          " columns but the units line lists " +
                                                          std::to_string(units.size()));
            for (std::size_t i = 0; i < cells.size(); ++i) {
                std::string label(cells[i]);
                const std::string unit(units[i]);
                const std::string suffix = "_" + unit;
                if (unit != "1") {
                    if (label.size() <= suffix.size() || label.compare(label.size() - suffix.size(), suffix.size(), suffix) != 0)
                        throw ParseError(source, line_no, label, "column label lacks unit suffix '" + suffix + "'");
                    label.resize(label.size() - suffix.size());
                }
                table.columns.push_back({label, unit});
            }
            have_header = true;
            continue;
        }
        if (cells.size() != table.columns.size())
            throw ParseError(source, line_no, "", "expected " + std::to_string(table.columns.size()) + " cells, got " +
                                                      std::to_string(cells.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto cell = cells[i];
            double v = 0.0;
            const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || end != cell.data() + cell.size())
                throw ParseError(source, line_no, table.columns[i].label(), "not a number: '" + std::string(cell) + "'");
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw ParseError(source, line_no, "", "no header line");
    return table;
}

}  // namespace plateforce::io
