#pragma once

#include <filesystem>
#include <string>

#include "ultrafid/measures.hpp"

namespace ultrafid {

/// Round-trippable decimal: 17 significant digits, '.' separator, locale-independent.
[[nodiscard]] std::string format_double(double v);

/// "x,value" with header.
[[nodiscard]] std::string to_csv(const DensityGrid& grid);
/// "n,sup_distance" with header.
[[nodiscard]] std::string to_csv(const ConvergenceReport& report);

/// Writes to a sibling temporary and renames it over `path`, so a failed
/// write never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace ultrafid
