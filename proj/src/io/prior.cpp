#include "plateforce/io/prior.hpp"

#include <charconv>
#include <vector>

#include "plateforce/error.hpp"
#include "plateforce/io/config.hpp"

namespace plateforce::io {

namespace {

bool parse_double(std::string_view s, double& out) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && end == s.data() + s.size() && !s.empty();
}

}  // namespace

PriorBounds parse_prior_bounds(std::string_view text, const std::string& source) {
    std::vector<BoundPoint> points;
    std::vector<int> lines;
    std::string problems;
    int first_bad_line = 0;
    auto report = [&](int line, const std::string& msg) {
        if (!first_bad_line) first_bad_line = line;
        problems += "\n  line " + std::to_string(line) + ": " + msg;
    };

    bool seen_data_or_header = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

        const auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            report(line_no, "expected exactly 2 columns");
            seen_data_or_header = true;
            continue;
        }
        double lambda = 0.0, alpha = 0.0;
        const bool ok = parse_double(line.substr(0, comma), lambda) && parse_double(line.substr(comma + 1), alpha);
        if (!ok) {
            // a single non-numeric first line is the column header
            if (!seen_data_or_header) {
                seen_data_or_header = true;
                continue;
            }
            report(line_no, "non-numeric value");
            continue;
        }
        seen_data_or_header = true;
        if (!(lambda > 0.0) || !(alpha > 0.0)) {
            report(line_no, "lambda and alpha must be > 0");
            continue;
        }
        if (!points.empty() && !(lambda > points.back().lambda))
            report(line_no, "lambda not strictly increasing (previous at line " + std::to_string(lines.back()) + ")");
        points.push_back({lambda, alpha});
        lines.push_back(line_no);
    }
    if (!problems.empty()) throw ParseError(source, first_bad_line, "", "invalid prior bounds:" + problems);
    if (points.empty()) throw ParseError(source, 0, "", "prior bounds file contains no data points");
    return PriorBounds(std::move(points), source);
}

PriorBounds ingest_prior_bounds(const std::filesystem::path& path) {
    return parse_prior_bounds(read_file(path), path.string());
}

}  // namespace plateforce::io
