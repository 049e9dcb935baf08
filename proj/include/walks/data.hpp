#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

namespace walks {

/// Directory holding the shipped catalogs. The WALKS_DATA_DIR environment
/// variable overrides the build-time default; set_data_dir overrides both.
std::filesystem::path data_dir();
void set_data_dir(const std::filesystem::path& dir);

/// Parses a JSON file; throws std::runtime_error naming the path on failure.
nlohmann::json load_json(const std::filesystem::path& path);

}  // namespace walks
