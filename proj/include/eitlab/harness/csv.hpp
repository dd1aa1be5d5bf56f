#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eitlab::harness {

// Shortest round-trippable form capped at 17 significant digits, '.'
// decimal separator regardless of locale.
std::string format_double(double value);

// Locale-independent strict parse of the whole string; nullopt on any junk.
std::optional<double> parse_double(std::string_view text);

// Comma-separated, LF-terminated. Cells are written verbatim (no quoting
// needed: every cell is a number or a bare identifier).
class CsvWriter {
public:
    explicit CsvWriter(const std::vector<std::string>& header);

    void row(const std::vector<double>& values);
    void row(const std::vector<std::string>& cells);

    const std::string& text() const noexcept { return text_; }

private:
    std::size_t columns_;
    std::string text_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(std::string_view text);

}  // namespace eitlab::harness
