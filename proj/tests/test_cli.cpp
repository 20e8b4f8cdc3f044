#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" RECIP_BIN "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args, int expected_code = 0) {
  const CliRun r = run(args + " --json");
  EXPECT_EQ(r.code, expected_code) << r.out;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, MooreExample) {
  const CliRun r = run("moore --a 13 --b 17");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("product +1"), std::string::npos) << r.out;
  const json j = run_json("moore --a 13 --b 17");
  EXPECT_EQ(j["command"], "moore");
  EXPECT_EQ(j["schema"], "v1");
  EXPECT_EQ(j["result"]["product"], 1);
  EXPECT_TRUE(j.contains("certified_precision"));
  EXPECT_EQ(j["config"]["precision"], 64);
  EXPECT_EQ(j["config"]["budget"], 500);
  EXPECT_EQ(j["config"]["seed"], 0);
}

TEST(Cli, Hilbert2Example) {
  const CliRun r = run("hilbert2 --place 5 --a 5 --b 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= -1"), std::string::npos) << r.out;
  const json j = run_json("hilbert2 --place 5 --a 5 --b 2");
  EXPECT_EQ(j["result"]["value"], -1);
  EXPECT_EQ(j["result"]["agree"], true);
  EXPECT_EQ(run_json("hilbert2 --place inf --a -1 --b -1")["result"]["value"], -1);
  EXPECT_EQ(run_json("hilbert2 --place 2 --a -1 --b -1")["result"]["value"], -1);
}

TEST(Cli, LocalCommands) {
  const json t = run_json("--field qp:5 tame --x pi --y pi");
  EXPECT_EQ(t["config"]["field"], "qp:5");
  EXPECT_EQ(run_json("wild-zeta --x 1+p")["result"]["value"]["wild"], 1);
  EXPECT_EQ(run_json("wild-zeta --x z")["result"]["value"]["wild"], 0);
  EXPECT_EQ(run("--field qp:5 norm-oracle --x 2 --y 5 --m 2").code, 0);
  EXPECT_EQ(run_json("--field qp:5 norm-oracle --x 2 --y 5 --m 2")["result"]["trivial"], false);
  const json o = run_json("--field root:3:2 --precision 16 order --m 2 --x pi --brute");
  EXPECT_EQ(o["result"]["index"], "3");
  EXPECT_EQ(o["result"]["brute_force"], "3");
  EXPECT_EQ(o["result"]["x"]["in_order"], false);
  const json m = run_json("--field qp-zeta:3 --precision 32 m0");
  EXPECT_EQ(m["result"]["estimated_m0"], 2);
  EXPECT_EQ(m["result"]["bound"], 4);
  EXPECT_EQ(run("--field qp-zeta:3 hasse-verify").code, 0);
  EXPECT_EQ(run("--field root:3:3 --precision 32 hasse-verify --t 1").code, 0);
}

TEST(Cli, GlobalAndFunctionFieldCommands) {
  const json l = run_json("lattice --p 3 --m 2 --brute");
  EXPECT_EQ(l["result"]["index"], "3");
  EXPECT_EQ(l["result"]["multiplicatively_closed"], true);
  EXPECT_EQ(run("weil --q 3 --f t --g t^2+1").code, 0);
  EXPECT_EQ(run_json("weil --q 4 --f \"t^3+a\" --g \"(t+1)/(t^2+a*t+1)\"")["result"]["ok"], true);
  EXPECT_EQ(run_json("ff-hilbert --q 3 --f t --g t^2+1")["result"]["ok"], true);
  const json r = run_json("residue --q 5 --f \"1/(t^2-t)\" --g t");
  EXPECT_EQ(r["result"]["ok"], true);
  EXPECT_EQ(r["result"]["sum"], "0");
  EXPECT_EQ(run_json("residue --q 5 --f t --g t^5")["result"]["constant_differential"], true);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("moore --a 3").code, 2);
  EXPECT_EQ(run("--precision 4 moore --a 3 --b 5").code, 2);
  EXPECT_EQ(run("lattice --p 11").code, 2);
  EXPECT_EQ(run("hilbert2 --place 9 --a 2 --b 3").code, 2);
  EXPECT_EQ(run("tame --x \"pi+\" --y pi").code, 2);
  EXPECT_EQ(run("--field bogus:3 tame --x pi --y pi").code, 2);
  EXPECT_EQ(run("moore --a 0 --b 3").code, 2);
  EXPECT_EQ(run("--field qp:3 --field-file x.json tame --x pi --y pi").code, 2);
  const json e = run_json("moore --a x --b 3", 2);
  EXPECT_EQ(e["error"]["code"], "BAD_INPUT");
  EXPECT_EQ(e["schema"], "v1");
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, LibraryFailuresExitOne) {
  const json e = run_json("--field qp-zeta:3 --budget 2 m0", 1);
  EXPECT_EQ(e["error"]["code"], "BUDGET_EXCEEDED");
  EXPECT_EQ(run("--field qp:3 wild-zeta --x 1+p").code, 1);
}

TEST(Cli, PrecisionFromEnvironment) {
  EXPECT_EQ(json::parse(run("moore --a 2 --b 3 --json", "RECIP_PRECISION=16").out)["config"]["precision"], 16);
  EXPECT_EQ(json::parse(run("--precision 20 moore --a 2 --b 3 --json", "RECIP_PRECISION=16").out)["config"]["precision"], 20);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::string args : {"moore --a -360 --b 77 --json", "--field qp-zeta:3 --precision 32 m0", "selftest --only 1 --only 11",
                                 "--seed 7 --field qp:5 tame --x 3+pi --y w"}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, SelftestSubset) {
  const CliRun r = run("selftest --only 1 --only 5");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  const json j = run_json("selftest --only 11");
  EXPECT_EQ(j["result"]["all_passed"], true);
  EXPECT_EQ(j["result"]["criteria"].size(), 1u);
}
