#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace expressivity {

/// Locale-independent decimal with 17 significant digits ('.' separator).
std::string format_double(double v);

/// Writes `contents` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace expressivity
