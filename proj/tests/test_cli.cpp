#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SWALG_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path scratch() {
  auto d = std::filesystem::temp_directory_path() / "swalg_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("spectrum rows") {
  Run r = run("spectrum --D 2 --n-max 2");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "spectrum");
  CHECK(j["failures"] == 0);
  const auto& lv = j["data"]["levels"];
  REQUIRE(lv.size() == 3);
  CHECK(lv[0]["degeneracy"] == 1);
  CHECK(lv[1]["degeneracy"] == 4);
  CHECK(lv[2]["degeneracy"] == 10);
}

TEST_CASE("summary fields and exit codes") {
  Run r = run("verify-algebra --D 2");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  for (const char* k : {"suite", "checks", "failures", "max-error"}) CHECK(j.contains(k));
  CHECK(run("verify-algebra --D 7").status == 2);
  CHECK(run("spectrum --format yaml").status == 2);
  CHECK(run("spectrum --n-max -1").status == 2);
  CHECK(run("spectrum --no-such-flag 1").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("verify-matrix-elements --D 3").status == 2);
}

TEST_CASE("reports are deterministic and written to --out") {
  auto d = scratch();
  auto a = d / "a.json", b = d / "b.json";
  REQUIRE(run("verify-reduction --omega 2 --out " + a.string()).status == 0);
  REQUIRE(run("verify-reduction --omega 2 --out " + b.string()).status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
}

TEST_CASE("config file is overridden by flags") {
  auto d = scratch();
  auto kv = d / "run.cfg", js = d / "run.json";
  std::ofstream(kv) << "# levels\nD = 3\nn-max = 1\n";
  std::ofstream(js) << R"({"D": 2, "n-max": 3})";
  auto j = nlohmann::json::parse(run("spectrum --config " + kv.string()).out);
  CHECK(j["config"]["D"] == 3);
  CHECK(j["data"]["levels"].size() == 2);
  CHECK(j["data"]["levels"][1]["degeneracy"] == 6);
  j = nlohmann::json::parse(run("spectrum --config " + js.string() + " --n-max 1").out);
  CHECK(j["data"]["levels"].size() == 2);
  std::ofstream(kv) << "bogus = 1\n";
  CHECK(run("spectrum --config " + kv.string()).status == 2);
}

TEST_CASE("text and csv formats") {
  Run t = run("spectrum --n-max 1 --format text");
  CHECK(t.out.find("N=1 E=6 deg=4") != std::string::npos);
  Run c = run("verify-algebra --D 3 --format csv");
  CHECK(c.status == 0);
  CHECK(c.out.rfind("suite,family,checks,failures,max-error,tol\n", 0) == 0);
}
