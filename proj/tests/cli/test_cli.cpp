// Drives the installed command-line tool as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef MAGICPATH_CLI_PATH
#error "MAGICPATH_CLI_PATH must point at the built CLI"
#endif

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("magicpath_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

const TempDir& tmp() {
  static const TempDir t;
  return t;
}

fs::path at(const std::string& name) { return tmp().path / name; }

struct Result {
  int code;
  std::string err;
};

Result cli(const std::string& args) {
  const auto err = at("stderr.txt");
  const std::string cmd = std::string("\"") + MAGICPATH_CLI_PATH + "\" " + args + " >/dev/null 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  std::ifstream in(err);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

// Order-4 squares file, enumerated once for the whole binary.
const fs::path& squares4() {
  static const fs::path p = [] {
    const auto path = at("squares4.txt");
    REQUIRE(cli("enumerate --order 4 --threads 2 --out " + q(path)).code == 0);
    return path;
  }();
  return p;
}

const fs::path& analysis4() {
  static const fs::path p = [] {
    const auto path = at("analysis4.jsonl");
    REQUIRE(cli("analyze --threads 2 --squares " + q(squares4()) + " --out " + q(path)).code == 0);
    return path;
  }();
  return p;
}

}  // namespace

TEST_CASE("enumerate") {
  REQUIRE(cli("enumerate --order 3 --out " + q(at("squares3.txt"))).code == 0);
  CHECK(slurp(at("squares3.txt")) == "# magicpath squares order=3 count=1\n2 7 6 9 5 1 4 3 8\n");

  const auto text = slurp(squares4());
  CHECK(std::count(text.begin(), text.end(), '\n') == 881);
  REQUIRE(cli("enumerate --order 4 --threads 1 --out " + q(at("squares4_t1.txt"))).code == 0);
  CHECK(slurp(at("squares4_t1.txt")) == text);

  const auto bad = cli("enumerate --order 5 --out " + q(at("x.txt")));
  CHECK(bad.code == 1);
  CHECK(bad.err.find("unsupported order") != std::string::npos);
  CHECK(cli("enumerate --order 4 --out " + q(at("missing/dir/x.txt"))).code == 2);
  CHECK(cli("enumerate --out " + q(at("x.txt"))).code == 1);
  CHECK(cli("bogus").code == 1);
}

TEST_CASE("analyze") {
  const auto text = slurp(analysis4());
  CHECK(text.rfind("# magicpath analysis order=4 count=880 local_min_length=9 partial_max_mismatch=3\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 881);

  REQUIRE(cli("analyze --threads 1 --squares " + q(squares4()) + " --out " + q(at("analysis_t1.jsonl"))).code == 0);
  CHECK(slurp(at("analysis_t1.jsonl")) == text);

  std::ofstream(at("corrupt.txt")) << "# magicpath squares order=3 count=2\n2 7 6 9 5 1 4 3 8\n2 7 6 9 5 1 4 8 3\n";
  const auto bad = cli("analyze --squares " + q(at("corrupt.txt")) + " --out " + q(at("a.jsonl")));
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 3") != std::string::npos);

  CHECK(cli("analyze --squares " + q(at("nope.txt")) + " --out " + q(at("a.jsonl"))).code == 2);
  CHECK(cli("analyze --local-min-length 1 --squares " + q(squares4()) + " --out " + q(at("a.jsonl"))).code == 1);

  REQUIRE(cli("analyze --squares " + q(at("squares3.txt")) + " --out " + q(at("analysis3.jsonl"))).code == 0);
  CHECK(slurp(at("analysis3.jsonl")).find("\"dudeney_group\":null") != std::string::npos);
}

TEST_CASE("report") {
  REQUIRE(cli("report --analysis " + q(analysis4()) + " --out " + q(at("report.md"))).code == 0);
  const auto md = slurp(at("report.md"));
  CHECK(md.find("- reflexive: 414 / 880") != std::string::npos);
  CHECK(md.find("- max total: 42.76") != std::string::npos);
  CHECK(slurp(at("report.histogram.csv")).rfind("bin_start,bin_end,count\n20,21,", 0) == 0);
  CHECK(slurp(at("report.dudeney.csv")).find("\n6,304,size304\n") != std::string::npos);

  REQUIRE(cli("report --hist-bin-width 0.5 --hist-range 20 43 --analysis " + q(analysis4()) + " --out " +
              q(at("half.md")))
              .code == 0);
  const auto half = slurp(at("half.histogram.csv"));
  CHECK(std::count(half.begin(), half.end(), '\n') == 47);

  const auto narrow =
      cli("report --hist-range 25 43 --analysis " + q(analysis4()) + " --out " + q(at("narrow.md")));
  CHECK(narrow.code == 1);
  CHECK(narrow.err.find("outside") != std::string::npos);

  std::ofstream(at("tampered.jsonl")) << "# magicpath analysis order=4 count=1 local_min_length=9 "
                                         "partial_max_mismatch=3\n{\"index\":1}\n";
  CHECK(cli("report --analysis " + q(at("tampered.jsonl")) + " --out " + q(at("t.md"))).code == 1);
}

TEST_CASE("render") {
  REQUIRE(cli("render --squares " + q(squares4()) + " --index 1 --mode trajectory --out " + q(at("t.svg"))).code == 0);
  CHECK(slurp(at("t.svg")).find("id=\"trajectory\"") != std::string::npos);
  REQUIRE(cli("render --squares " + q(squares4()) + " --index 880 --mode pattern --out " + q(at("p.svg"))).code == 0);
  CHECK(slurp(at("p.svg")).find("id=\"center-line\"") != std::string::npos);

  const auto range = cli("render --squares " + q(squares4()) + " --index 881 --mode pattern --out " + q(at("p.svg")));
  CHECK(range.code == 1);
  CHECK(range.err.find("out of range") != std::string::npos);
  const auto mode = cli("render --squares " + q(squares4()) + " --index 1 --mode heatmap --out " + q(at("p.svg")));
  CHECK(mode.code == 1);
  CHECK(mode.err.find("unknown mode") != std::string::npos);
}

TEST_CASE("sweep") {
  REQUIRE(cli("sweep --analysis " + q(analysis4()) + " --out " + q(at("sweep.csv"))).code == 0);
  const auto csv = slurp(at("sweep.csv"));
  CHECK(csv.rfind("local_min_length,non_reflexive,local,periodic,partial,other,matches_target,closest\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 15);
  CHECK(cli("sweep --analysis " + q(at("nope.jsonl")) + " --out " + q(at("s.csv"))).code == 2);
}
