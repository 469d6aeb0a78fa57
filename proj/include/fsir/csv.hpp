#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fsir::csv {

/// 17 significant digits, '.' decimal separator, no grouping.
std::string format_number(double v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(std::string_view name) const;  ///< throws InvalidInput if missing
};

/// Plain comma-separated reader: no quoting, trims surrounding whitespace
/// and a UTF-8 byte-order mark. Empty lines are skipped.
Table read(const std::filesystem::path& path);

double parse_number(std::string_view field);

/// Writes rows of already-formatted fields.
void write(const std::filesystem::path& path, const std::vector<std::string>& header,
           const std::vector<std::vector<std::string>>& rows);

}  // namespace fsir::csv
