#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "walks/bfile.hpp"
#include "walks/cli.hpp"

using namespace walks;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path golden(const std::string& name) { return std::filesystem::path(WALKS_TEST_DIR) / "golden" / name; }

class TempFile {
 public:
  explicit TempFile(const std::string& body) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("walks_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::ofstream(path_) << body;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("count examples") {
  auto one = run({"count", "--lattice", "square", "--region", "three-quadrant", "--start", "0,0", "--n", "1"});
  REQUIRE(one.code == 0);
  CHECK(one.out == slurp(golden("count_square_n1.json")));
  json j = json::parse(one.out);
  const auto& counts = j["tables"][0]["counts"];
  CHECK(counts.size() == 4);
  for (const auto& c : counts) CHECK(c["count"] == "1");

  auto zero = run({"count", "--n", "0"});
  json z = json::parse(zero.out);
  REQUIRE(z["tables"][0]["counts"].size() == 1);
  CHECK(z["tables"][0]["counts"][0]["count"] == "1");

  auto diag = run({"count", "--lattice", "diagonal", "--region", "three-quadrant", "--start", "0,0", "--n", "2",
                   "--endpoint", "0,0", "--format", "text"});
  CHECK(diag.code == 0);
  CHECK(diag.out == "3\n");
}

TEST_CASE("series golden output") {
  auto r = run({"series", "--lattice", "diagonal", "--endpoint", "0,0", "--order", "7", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(golden("series_diagonal_origin.csv")));
}

TEST_CASE("big integers serialize as strings") {
  auto r = run({"count", "--n", "40", "--endpoint", "0,0"});
  json j = json::parse(r.out);
  REQUIRE(j["count"].is_string());
  CHECK(BigInt(j["count"].get<std::string>()) > BigInt("18446744073709551615"));
}

TEST_CASE("verify suites") {
  auto ids = run({"verify", "--suite", "identities", "--order", "12"});
  CHECK(ids.code == 0);
  json j = json::parse(ids.out);
  CHECK(j["pass"] == true);
  CHECK(j["reports"][0]["entries"].size() >= 23);
  CHECK(j["reports"][0]["entries"][0]["id"] == "EQ_T");

  CHECK(run({"verify", "--suite", "closed-forms", "--max-length", "12"}).code == 0);
  auto params = run({"verify", "--suite", "params", "--order", "12", "--format", "csv"});
  CHECK(params.code == 0);
  CHECK(params.out == slurp(golden("verify_params.csv")));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "identities", "--ids", "NOPE"}).code == 2);
  CHECK(run({"count", "--start", "1"}).code == 2);
  CHECK(run({"count", "--lattice", "hex"}).code == 2);
  CHECK(run({"count", "--region", "quadrant", "--start", "-1,0"}).code == 2);
  CHECK(run({"count", "--format", "yaml"}).code == 2);
  CHECK(run({"param", "NOPE"}).code == 2);
  CHECK(run({"oeis", "/nonexistent/file"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("config file with flag precedence") {
  TempFile cfg(R"({"lattice": "diagonal", "n": 2, "endpoint": [0, 0], "format": "text"})");
  auto from_file = run({"--config", cfg.str(), "count"});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == "3\n");
  auto overridden = run({"--config", cfg.str(), "count", "--lattice", "square"});
  CHECK(overridden.out == "4\n");

  TempFile bad(R"({"lattice": "diagonal", "colour": "red"})");
  CHECK(run({"--config", bad.str(), "count"}).code == 2);
  TempFile negative(R"({"n": -3})");
  CHECK(run({"--config", negative.str(), "count"}).code == 2);
}

TEST_CASE("JSON output is deterministic and round-trips") {
  const std::vector<std::string> args = {"series", "--lattice", "square", "--order", "5"};
  auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(json::parse(j.dump(2)) == j);
  CHECK(j.dump(2) + "\n" == a.out);
}

TEST_CASE("param command") {
  auto r = run({"param", "DIAG_ASYM_B0X", "--order", "6"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["matches_walks"] == true);
  CHECK(j["change"] == "sqrt");
}

TEST_CASE("asymptotic diagnostic") {
  auto r = run({"asympt", "--n", "60", "--step", "30"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["exact"] == false);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0]["log10_total"] == 0.0);
  CHECK(std::abs(j["constant"].get<double>() - 1.516) < 1e-3);
  auto d = run({"asympt", "--lattice", "diagonal", "--n", "0"});
  CHECK(std::abs(json::parse(d.out)["constant"].get<double>() - 1.137) < 1e-3);
}

TEST_CASE("catalog listing") {
  json j = json::parse(run({"catalog"}).out);
  CHECK(j["params"].size() == 12);
  CHECK(j["identities"].size() == 23);
}

// ---------------------------------------------------------------- b-files

TEST_CASE("b-file parsing") {
  std::istringstream in("# comment\n\n0 1\n1 4\r\n2 12  # trailing\n");
  BFile f = parse_bfile(in);
  REQUIRE(f.entries.size() == 3);
  CHECK(f.entries[2].first == 2);
  CHECK(f.entries[2].second == 12);

  auto fails_on = [](const std::string& body) {
    std::istringstream s(body);
    try {
      parse_bfile(s);
    } catch (const BFileError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(fails_on("0 1\n1 x\n") == 2);
  CHECK(fails_on("0 1\n# c\n0 2\n") == 3);
  CHECK(fails_on("5\n") == 1);
  CHECK(fails_on("0 -1\n") == 1);
  CHECK(fails_on("-1 1\n") == 1);
  CHECK(fails_on("0 1 2\n") == 1);
}

TEST_CASE("oeis command against generated b-files") {
  // Totals of three-quadrant square walks, written from the count command.
  std::ostringstream body;
  body << "# three-quadrant square totals\n";
  for (int n = 0; n <= 12; ++n) {
    json j = json::parse(run({"count", "--n", std::to_string(n)}).out);
    body << n << " " << j["tables"][0]["total"].get<std::string>() << "\n";
  }
  TempFile good(body.str());
  auto ok = run({"oeis", good.str()});
  CHECK(ok.code == 0);
  json j = json::parse(ok.out);
  CHECK(j["agree"] == true);
  CHECK(j["compared"] == 13);

  std::string corrupted = body.str();
  corrupted.replace(corrupted.find("\n7 ") + 3, 1, "9");
  TempFile bad(corrupted);
  auto mismatch = run({"oeis", bad.str(), "--format", "text"});
  CHECK(mismatch.code == 1);
  CHECK(mismatch.out.find("n = 7") != std::string::npos);

  TempFile empty("# nothing\n");
  auto vacuous = run({"oeis", empty.str()});
  CHECK(vacuous.code == 0);
  CHECK(vacuous.err.find("warning") != std::string::npos);

  TempFile broken("0 1\n1 banana\n");
  auto parse = run({"oeis", broken.str()});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("line 2") != std::string::npos);
}

TEST_CASE("property: endpoint counts from the CLI agree with random b-file slices") {
  std::mt19937 rng(7);
  auto series = json::parse(run({"series", "--endpoint", "-1,0", "--order", "16"}).out)["coefficients"];
  for (int trial = 0; trial < 5; ++trial) {
    std::ostringstream body;
    for (int n = 0; n < 16; ++n)
      if (std::uniform_int_distribution<int>(0, 1)(rng)) body << n << " " << series[n].get<std::string>() << "\n";
    TempFile f(body.str());
    CHECK(run({"oeis", f.str(), "--endpoint", "-1,0"}).code == 0);
  }
}
