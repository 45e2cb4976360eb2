#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "geomkit/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = geomkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(GEOMKIT_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("geomkit_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

int count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("tiling verify accepts the stored layout") {
  const auto r = run({"tiling", "verify", "--tiles", data("seven.tiles"), "--layout", data("seven.json")});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "tiling verify");
  CHECK(j["status"] == "ok");
}

TEST_CASE("exit codes") {
  CHECK(run({"tiling", "search-iso", "--n", "4"}).code == 1);
  CHECK(run({"--expect-infeasible", "tiling", "search-iso", "--n", "4"}).code == 0);
  CHECK(run({"fairpart", "disc", "--ratio", "1:3"}).code == 1);
  CHECK(run({"fairpart", "solve", "--shape", "rect:1x4", "--ratio", "1:3"}).code == 0);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"fairpart", "solve", "--shape", "blob:3"}).code == 2);
  CHECK(run({"tiling", "verify", "--tiles", "/nonexistent/file", "--layout", data("seven.json")}).code == 2);
  CHECK(run({"poly", "compare", "--solids", "cube"}).code == 2);
}

TEST_CASE("malformed tile file reports the line") {
  const auto dir = scratch("bad");
  const auto path = dir / "bad.tiles";
  std::ofstream(path) << "# header\n1 2\n3 x\n";
  const auto r = run({"tiling", "enumerate", "--tiles", path.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::vector<std::string>> cmds{
      {"tiling", "enumerate", "--tiles", data("seven.tiles")},
      {"tiling", "hcn", "--hcn", "60", "--i", "4"},
      {"fairpart", "profile", "--shape", "rect:1x4", "--ratio", "1:3", "--samples", "90"},
      {"shapes", "crossover"},
      {"poly", "compare", "--solids", "rhombicuboctahedron,pseudorhombicuboctahedron"}};
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("layout SVG for the seven tiles") {
  const auto dir = scratch("svg7");
  const auto r = run({"--out", dir.string(), "--svg", "tiling", "verify", "--tiles", data("seven.tiles"), "--layout",
                      data("seven.json")});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(fs::exists(dir / "report.json"));
  const auto svg = slurp(dir / "layout.svg");
  CHECK(svg.find("width=\"480\"") != std::string::npos);
  CHECK(svg.find("height=\"360\"") != std::string::npos);
  CHECK(count(svg, "<rect") == 7);
  fs::remove_all(dir);
}

TEST_CASE("partition SVG for a centre cut of the square") {
  const auto dir = scratch("svgsq");
  const auto r = run({"--out", dir.string(), "--svg", "fairpart", "solve", "--shape", "rect:1x1", "--ratio", "1:1"});
  REQUIRE(r.code == 0);
  CHECK(count(slurp(dir / "partition.svg"), "<polygon") == 2);
  fs::remove_all(dir);
}

TEST_CASE("OBJ output") {
  const auto dir = scratch("obj");
  const auto r = run({"--out", dir.string(), "--obj", "poly", "build", "--solid", "cube"});
  REQUIRE(r.code == 0);
  const auto obj = slurp(dir / "cube.obj");
  CHECK(count(obj, "\nv ") + (obj.rfind("v ", 0) == 0) == 8);
  CHECK(count(obj, "\nf ") == 6);
  fs::remove_all(dir);
}
