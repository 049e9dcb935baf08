#include "walks/data.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>

namespace walks {

namespace {

std::mutex dir_mutex;
std::filesystem::path override_dir;

}  // namespace

std::filesystem::path data_dir() {
  std::lock_guard lock(dir_mutex);
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("WALKS_DATA_DIR"); env && *env) return env;
  return WALKS_DATA_DIR;
}

void set_data_dir(const std::filesystem::path& dir) {
  std::lock_guard lock(dir_mutex);
  override_dir = dir;
}

nlohmann::json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace walks
