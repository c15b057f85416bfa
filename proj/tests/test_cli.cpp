#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "commands.hpp"
#include "quiver/io.hpp"

using namespace quiver::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(RunConfig config) {
  std::ostringstream out, err;
  const int code = run_command(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig cfg(const std::string& command, int n = 2) {
  RunConfig c;
  c.command = command;
  c.n = n;
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("mutate") {
  auto c = cfg("mutate");
  c.sequence = "2 1 2";
  const auto r = run(c);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "sequence: (2,1,2)\n"
        "  0 -1 |  0 -1\n"
        "  1  0 | -1  0\n"
        "colors: 1:red 2:red\n"
        "word: x(0,1) x(0,2) x(1,2)\n"
        "sigma: (1 2)\n");

  c.sequence = "";
  CHECK(run(c).out.find("  0  1 |  1  0\n -1  0 |  0  1\n") != std::string::npos);

  c.sequence = "3";
  const auto bad = run(c);
  CHECK(bad.code == 2);
  CHECK(bad.err.find("vertex 3") != std::string::npos);

  c.sequence = "1 two";
  CHECK(run(c).code == 2);
}

TEST_CASE("mutate JSON") {
  auto c = cfg("mutate");
  c.sequence = "2 1 2";
  c.format = Format::Json;
  const auto j = quiver::Json::parse(run(c).out);
  CHECK(j.at("sigma") == "(1 2)");
  CHECK(j.at("colors") == quiver::Json::parse(R"(["red","red"])"));
  CHECK(j.at("state").at("c") == quiver::Json::parse("[[0,-1],[-1,0]]"));
}

TEST_CASE("verify") {
  const auto two = run(cfg("verify"));
  CHECK(two.code == 0);
  CHECK(two.out.find("maximal green sequences: 2 checked, 0 mismatched") != std::string::npos);

  auto three = cfg("verify", 3);
  three.max_depth = 4;
  const auto r3 = run(three);
  CHECK(r3.code == 0);
  CHECK(r3.out.find("9 checked, 0 mismatched") != std::string::npos);
  CHECK(r3.out.find("OK") != std::string::npos);

  auto corrupt = cfg("verify", 3);
  corrupt.corrupt_formula = true;
  const auto bad = run(corrupt);
  CHECK(bad.code == 1);
  CHECK(bad.err.find("mismatch: mgs (2,3,1,3,2)") != std::string::npos);
  CHECK(bad.err.find("mismatch: mgs (3,2,1,2,3)") != std::string::npos);
}

TEST_CASE("check-standard") {
  auto c = cfg("check-standard");
  c.matrix = "[[1,1],[0,-1]]";
  CHECK(run(c).out == "standard\n");
  c.matrix = "[[0,-1],[-1,0]]";
  CHECK(run(c).out == "not standard; factors as (1 2)\xc2\xb7M with M =\n -1  0\n  0 -1\n");
  c.matrix = "[[1,0],[1,1]]";
  CHECK(run(c).out == "not standard; no row permutation of it is standard\n");
  c.matrix = "[[1,0]]";
  CHECK(run(c).code == 2);
  c.matrix = "not json";
  CHECK(run(c).code == 2);
  c.matrix = "[[0,-1],[-1,0]]";
  c.format = Format::Json;
  CHECK(quiver::Json::parse(run(c).out) ==
        quiver::Json::parse(R"j({"standard":false,"factorization":{"rho":"(1 2)","m":[[-1,0],[0,-1]]}})j"));
}

TEST_CASE("census") {
  auto c = cfg("census");
  c.format = Format::Json;
  const auto j = quiver::Json::parse(run(c).out);
  CHECK(j.at("count") == 2);
  CHECK(j.at("lengths") == quiver::Json::parse(R"({"2":1,"3":1})"));
  CHECK(run(cfg("census")).out.find("count: 2") != std::string::npos);
}

TEST_CASE("enumerate") {
  const auto r = run(cfg("enumerate", 3));
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 9);
  auto loops = cfg("enumerate");
  loops.loops = true;
  loops.max_depth = 6;
  lines = 0;
  for (char ch : run(loops).out) lines += ch == '\n';
  CHECK(lines == 30);
}

TEST_CASE("export-dot") {
  const auto r = run(cfg("export-dot", 3));
  CHECK(r.code == 0);
  CHECK(r.out.find("graph exchange_graph") == 0);
}

TEST_CASE("walk is consistent and seeded") {
  auto c = cfg("walk", 4);
  c.max_depth = 40;
  c.seed = 17;
  const auto a = run(c);
  CHECK(a.code == 0);
  CHECK(a.out.find("INCONSISTENT") == std::string::npos);
  CHECK(run(c).out == a.out);
  c.seed = 18;
  CHECK(run(c).out != a.out);
}

TEST_CASE("custom B0 disables formula commands") {
  const auto dir = std::filesystem::temp_directory_path() / "quiver_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "markov.json";
  std::ofstream(path) << "[[0,2,-2],[-2,0,2],[2,-2,0]]";
  for (const char* command : {"verify", "census", "enumerate", "walk"}) {
    auto c = cfg(command, 3);
    c.b0_file = path.string();
    const auto r = run(c);
    CHECK(r.code == 2);
    CHECK(r.err.find("disabled with --b0-file") != std::string::npos);
  }
  auto m = cfg("mutate", 3);
  m.b0_file = path.string();
  m.sequence = "1 2";
  const auto r = run(m);
  CHECK(r.code == 0);
  CHECK(r.out.find("not available for a custom B0") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run(cfg("nonsense")).code == 2);
  CHECK(run(cfg("verify", 0)).code == 2);
  auto c = cfg("walk");
  c.max_depth = -1;
  CHECK(run(c).code == 2);
}

TEST_CASE("binary writes byte-identical output files") {
  const auto dir = std::filesystem::temp_directory_path() / "quiver_cli_test";
  std::filesystem::create_directories(dir);
  const std::string exe = QUIVER_CLI_PATH;
  const auto a = dir / "a.json", b = dir / "b.json";
  for (const auto& p : {a, b}) {
    const std::string cmd = exe + " census --n 4 --format json --workers 2 --out " + p.string();
    REQUIRE(std::system(cmd.c_str()) == 0);
  }
  CHECK(slurp(a) == slurp(b));
  CHECK(quiver::Json::parse(slurp(a)).at("count") == 98);

  const std::string bad = exe + " mutate --n 2 --sequence 3 2>/dev/null >/dev/null";
  const int status = std::system(bad.c_str());
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 2);
}
