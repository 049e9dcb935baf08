#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walks/rational.hpp"

namespace walks {

class BFileError : public std::runtime_error {
 public:
  BFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// OEIS b-file: lines "n value"; blank lines and '#' comments are skipped.
/// Indices must be nonnegative and strictly increasing, values nonnegative.
struct BFile {
  std::vector<std::pair<long, BigInt>> entries;
};

BFile parse_bfile(std::istream& in);
/// Throws std::runtime_error if the file cannot be opened.
BFile load_bfile(const std::filesystem::path& path);

struct BFileComparison {
  std::size_t compared = 0;
  std::optional<long> first_index;
  std::optional<long> last_index;
  /// First index where the b-file and the computed values differ.
  std::optional<long> mismatch;
  BigInt expected;  // b-file value at the mismatch
  BigInt actual;    // computed value at the mismatch
};

/// Compares b-file entries with `values[n]` for every n present in both.
BFileComparison compare_bfile(const BFile& file, const std::vector<BigInt>& values);

}  // namespace walks
