#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(AH_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kron = std::string("--quiver ") + AH_DATA_DIR + "/kronecker.json";
const std::string a2 = std::string("--quiver ") + AH_DATA_DIR + "/a2_affine.json";

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("affine_hall_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("reports are deterministic") {
  const fs::path cache = scratch("det");
  const std::string args = "hall-check " + kron + " --q 2,3 --nu 1,1 --nu 2,1 --cache " + cache.string();
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  fs::remove_all(cache);
  const Run c = run(args);
  CHECK(c.code == 0);
  CHECK(c.out == a.out);
  CHECK(run("roots " + a2 + " --nu 2,2,2").out == run("roots " + a2 + " --nu 2,2,2").out);
  fs::remove_all(cache);
}

TEST_CASE("exit codes") {
  CHECK(run("roots " + kron).code == 0);
  CHECK(run("resolution " + a2 + " --nu 2,2,2 --tube-search 1").code == 1);
  CHECK(run("roots --quiver /nonexistent/q.json").code == 2);
  CHECK(run("bogus " + kron).code == 2);
  CHECK(run("roots " + kron + " --nu 1,2,3").code == 2);
  CHECK(run("roots " + kron + " --q 6").code == 2);
  CHECK(run("roots " + kron + " --nu 9,9").code == 2);

  const fs::path dir = scratch("bad");
  const fs::path bad = dir / "cyclic.json";
  {
    std::FILE* f = std::fopen(bad.c_str(), "w");
    std::fputs("{\"vertices\": [\"a\"], \"arrows\": [[0, 0]]", f);
    std::fclose(f);
  }
  CHECK(run("roots --quiver " + bad.string()).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("triangularity at 2 delta") {
  const Run r = run("triangularity " + kron + " --q 2 --nu 2,2");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  const auto& m = j["results"][0]["matrix"];
  REQUIRE(m.size() == 6);
  for (const auto& row : m) CHECK(row.size() == 6);
}

TEST_CASE("resolution at delta, 2 delta, 3 delta") {
  const Run r = run("resolution " + kron + " --q 2 --nu 1,1 --nu 2,2 --nu 3,3 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("resolution") != std::string::npos);
}

TEST_CASE("report file") {
  const fs::path dir = scratch("out");
  const fs::path out = dir / "r.json";
  const Run r = run("strata " + kron + " --nu 1,1 --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(fs::file_size(out) > 0);
  CHECK(nlohmann::json::parse(std::ifstream(out))["pass"] == true);
  fs::remove_all(dir);
}
