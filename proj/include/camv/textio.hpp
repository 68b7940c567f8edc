#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace camv {

/// Fixed-precision decimal text ("%.{digits}g"); negative zero prints as 0.
std::string format_number(double v, int digits = 9);

/// Writes to a temporary sibling then renames over `path`, so readers never
/// see a partial file. Throws IoError naming the path.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

std::string read_text_file(const std::filesystem::path& path);

/// Splits one CSV line on commas (no quoting; our schemas never need it).
std::vector<std::string> split_csv_line(std::string_view line);

/// Parses a full-string decimal; throws std::invalid_argument otherwise.
double parse_double(std::string_view field);

}  // namespace camv
