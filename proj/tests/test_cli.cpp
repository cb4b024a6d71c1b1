#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#ifndef NILREP_CLI_PATH
#error "NILREP_CLI_PATH must point at the nilrep executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" NILREP_CLI_PATH "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kQuick = " --group-trials 50 --rep-trials 50 --pair-trials 50 --grid-functions 2 --grid-n 256";

} // namespace

TEST_CASE("verify exit codes")
{
  CHECK(run("verify --case all" + kQuick).code == 0);
  CHECK(run("verify --case generic --lambda 0").code == 2);
  CHECK(run("verify --case all --grid-n 1000").code == 2);
  CHECK(run("verify --bogus-flag").code == 2);
  CHECK(run("verify --inject-fault nonsense").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);

  auto fault = run("verify --inject-fault omega-sign --format json" + kQuick);
  CHECK(fault.code == 1);
  CHECK(fault.out.find("\"witness\"") != std::string::npos);
  CHECK(fault.out.find("\"verdict\": false") != std::string::npos);
}

TEST_CASE("JSON output is byte-identical for a fixed seed")
{
  auto a = run("verify --case all --seed 7 --format json" + kQuick);
  auto b = run("verify --case all --seed 7 --format json" + kQuick);
  auto env = run("verify --case all --format json" + kQuick, "NILREP_SEED=7");
  auto other = run("verify --case all --seed 8 --format json" + kQuick);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == env.out);
  CHECK(a.out != other.out);
  CHECK(a.out.rfind("{\n  \"version\": 1,\n  \"config\":", 0) == 0);
}

TEST_CASE("--out writes the report to a file")
{
  const std::string path = "nilrep_cli_test_out.json";
  std::remove(path.c_str());
  auto r = run("orbit --alpha 3 --mu 7 --nu 2 --lambda 1 --format json --out " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("\"generic\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("orbit, rep and decompose")
{
  auto o = run("orbit --nu 5");
  CHECK(o.code == 0);
  CHECK(o.out.find("NonGeneric(5)") != std::string::npos);
  CHECK(run("orbit").out.find("Zero") != std::string::npos);
  CHECK(run("orbit --alpha x").code == 2);

  auto r = run("rep --case generic --alpha 0 --lambda 1 --n 1,0,0,0 --k 1,0 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"-1/2\"") != std::string::npos);
  CHECK(run("rep --case trivial --n 1,2,3,4").out.find("f(u) -> f(u)") != std::string::npos);
  CHECK(run("rep --case generic --lambda 1 --n 1,2,3").code == 2);
  CHECK(run("rep --case generic --lambda 1 --n 0,1/3,0,0 --grid").code == 2);
  CHECK(run("rep --case generic --lambda 1 --n 0,1/2,0,0 --grid").code == 0);

  CHECK(run("decompose --case generic --alpha 0 --lambda 1").code == 0);
  CHECK(run("decompose --case nongeneric --nu 0").code == 0);
  CHECK(run("decompose --case generic --lambda 0").code == 2);
}
