#include "walks/bfile.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace walks {

namespace {

bool is_digits(const std::string& s, bool allow_sign) {
  std::size_t k = allow_sign && !s.empty() && s[0] == '-' ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  return true;
}

}  // namespace

BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::string index, value, extra;
    if (!(ls >> index) || index[0] == '#') continue;
    if (!(ls >> value)) throw BFileError(line, "missing value after index " + index);
    if (ls >> extra && extra[0] != '#') throw BFileError(line, "unexpected text '" + extra + "'");
    if (!is_digits(index, true)) throw BFileError(line, "index '" + index + "' is not an integer");
    if (!is_digits(value, true)) throw BFileError(line, "value '" + value + "' is not an integer");
    long n = 0;
    try {
      n = std::stol(index);
    } catch (const std::out_of_range&) {
      throw BFileError(line, "index '" + index + "' out of range");
    }
    if (n < 0) throw BFileError(line, "negative index " + index);
    if (!out.entries.empty() && n <= out.entries.back().first)
      throw BFileError(line, "index " + index + " does not increase");
    BigInt v(value);
    if (v < 0) throw BFileError(line, "negative value " + value);
    out.entries.emplace_back(n, std::move(v));
  }
  return out;
}

BFile load_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open b-file " + path.string());
  return parse_bfile(in);
}

BFileComparison compare_bfile(const BFile& file, const std::vector<BigInt>& values) {
  BFileComparison c;
  for (const auto& [n, v] : file.entries) {
    if (static_cast<std::size_t>(n) >= values.size()) break;
    if (!c.first_index) c.first_index = n;
    c.last_index = n;
    ++c.compared;
    if (values[static_cast<std::size_t>(n)] != v) {
      c.mismatch = n;
      c.expected = v;
      c.actual = values[static_cast<std::size_t>(n)];
      break;
    }
  }
  return c;
}

}  // namespace walks
