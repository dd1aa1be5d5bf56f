#include "eitlab/harness/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace eitlab::harness {

std::string format_double(double value) {
    if (value == 0.0) return "0";  // also folds -0
    char buffer[64];
    // Shortest representation first; it is exact and never exceeds 17 digits.
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) {
        throw std::runtime_error("could not format number");
    }
    return std::string(buffer, end);
}

std::optional<double> parse_double(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

CsvWriter::CsvWriter(const std::vector<std::string>& header) : columns_(header.size()) {
    row(header);
}

void CsvWriter::row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_double(v));
    row(cells);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) {
        throw std::logic_error("CSV row width does not match header");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text_ += ',';
        text_ += cells[i];
    }
    text_ += '\n';
}

namespace {

std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        cells.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

}  // namespace

CsvTable parse_csv(std::string_view text) {
    CsvTable table;
    bool first = true;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty()) continue;
        if (first) {
            table.header = split_line(line);
            first = false;
        } else {
            table.rows.push_back(split_line(line));
        }
    }
    return table;
}

}  // namespace eitlab::harness
