#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace matkg::util {

std::string sha256_hex(std::string_view data);

std::string read_file(const std::filesystem::path& path);  // FileUnreadable
std::string sha256_file(const std::filesystem::path& path);

// Writes via a sibling temp file followed by rename so readers never see a
// partial file.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

std::string iso8601_now();

std::string trim(std::string_view s);
std::vector<std::string> split_lines(std::string_view text);
bool starts_with_ci(std::string_view s, std::string_view prefix);
std::string to_lower_ascii(std::string_view s);

}  // namespace matkg::util
