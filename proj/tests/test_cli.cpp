#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#include "ponsyz/cli/commands.hpp"
#include "ponsyz/io.hpp"

using namespace ponsyz;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(PONSYZ_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const char* name) { return std::string(PONSYZ_SAMPLES_DIR) + "/systems/" + name; }

void expect_schema(const Json& j) {
  for (const char* key : {"command", "version", "digest", "inputs", "seed", "results", "pass"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["results"].is_array());
  EXPECT_TRUE(j["pass"].is_boolean());
}

}  // namespace

TEST(SystemFile, ParsesCommentsAndHeader) {
  const auto forms = parse_system_text("# degree: 4\n# a comment\nu^4\n\n  u^3 v  \nv^4\n");
  ASSERT_EQ(forms.size(), 3u);
  EXPECT_EQ(to_string(forms[1]), "u^3 v");
}

TEST(SystemFile, ReportsLineNumbers) {
  try {
    (void)parse_system_text("# degree: 4\nu^4\nu^3\n");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW((void)parse_system_text("# only comments\n"), Error);
}

TEST(SystemFile, Params) {
  const auto ps = parse_params("1:0, 0:1,1:-1,-1/2:3");
  ASSERT_EQ(ps.size(), 4u);
  EXPECT_EQ(ps[2].b, -1);
  EXPECT_EQ(ps[3].a, rational(-1, 2));
  EXPECT_THROW((void)parse_params("1:0,"), Error);
  EXPECT_THROW((void)parse_params("0:0"), Error);
  EXPECT_THROW((void)parse_params("1-0"), Error);
}

TEST(Commands, SyzygyReport) {
  const auto out = cli::cmd_syzygy(read_system_file(sample("example_b.txt")), 1);
  expect_schema(out.report);
  EXPECT_EQ(out.report["results"][0]["r"], 1);
  EXPECT_EQ(out.report["results"][0]["basis"][0]["entries"], Json::array({"-v", "u", "0"}));
  EXPECT_EQ(out.exit_code, cli::kPass);
  EXPECT_EQ(cli::cmd_syzygy(read_system_file(sample("example_a.txt")), 1).report["results"][0]["r"], 0);
  EXPECT_EQ(cli::cmd_syzygy(read_system_file(sample("example_b.txt")), 0).report["results"][0]["r"], 0);
}

TEST(Commands, SplittingReport) {
  auto parts_of = [](const char* file) {
    return cli::cmd_splitting(read_system_file(sample(file))).report["results"][0];
  };
  EXPECT_EQ(parts_of("example_b.txt")["parts"], Json::array({1, 3}));
  EXPECT_EQ(parts_of("special_3_5.txt")["parts"], Json::array({1, 1, 3}));
  const Json fixpt = parts_of("fixpt.txt");
  EXPECT_EQ(fixpt["base_degree"], 1);
  EXPECT_EQ(fixpt["parts"][0].get<int>() + fixpt["parts"][1].get<int>(), 3);
}

TEST(Commands, PonceletReport) {
  EXPECT_EQ(cli::cmd_poncelet(read_system_file(sample("example_a.txt"))).report["results"][0]["equation"],
            "x0 x3 - x1 x2");
  EXPECT_EQ(cli::cmd_poncelet(read_system_file(sample("fixpt.txt"))).report["results"][0]["equation"], "x0 x1");
  const MPoly displayed = parse_polynomial_or_matrix(detail::read_file(sample("cayley_matrix.txt")), 4);
  const auto cayley = cli::cmd_poncelet(read_system_file(sample("cayley.txt")), displayed);
  EXPECT_EQ(cayley.report["results"][0]["proportional"], true);
  EXPECT_TRUE(cayley.report["pass"].get<bool>());
}

TEST(Commands, BasepointsReport) {
  const auto out = cli::cmd_basepoints(read_system_file(sample("fixpt.txt")));
  EXPECT_TRUE(out.report["pass"].get<bool>());
  EXPECT_NE(out.text.find("residual: x1"), std::string::npos);
}

TEST(Commands, VerifySuites) {
  const auto dime = cli::cmd_verify_dime(3, 5, 2, 1, 5, 1);
  EXPECT_TRUE(dime.report["pass"].get<bool>());
  EXPECT_EQ(dime.report["results"].size(), 5u);

  const auto teorema = cli::cmd_verify_teorema(5, 2, parse_params("1:0,0:1,1:1,1:-1"), 1);
  EXPECT_TRUE(teorema.report["pass"].get<bool>());

  const auto prozero = cli::cmd_verify_prozero(4, 2, parse_params("1:0,0:1,1:1,1:-1"), 100, 0);
  EXPECT_TRUE(prozero.report["pass"].get<bool>());

  const auto tpenc = cli::cmd_verify_tpenc(5, 2, std::nullopt, 3, 2);
  EXPECT_TRUE(tpenc.report["pass"].get<bool>());
}

TEST(Commands, TextAndJsonCarryTheSameNumbers) {
  const auto out = cli::cmd_splitting(read_system_file(sample("special_3_5.txt")));
  std::string table = "r(d), d = 0..5:";
  for (const auto& r : out.report["results"][0]["r_table"]) table += " " + std::to_string(r.get<int>());
  EXPECT_NE(out.text.find(table), std::string::npos) << out.text;
  EXPECT_NE(out.text.find("parts: (1,1,3)"), std::string::npos);
}

TEST(Binary, JsonIsByteDeterministic) {
  const std::string args = "verify dime -k 3 -n 5 -r 2 -d 1 --trials 3 --seed 9 --format json";
  const RunResult a = run(args);
  const RunResult b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  expect_schema(j);
  EXPECT_EQ(j["seed"], 9);
  for (const auto& trial : j["results"]) {
    EXPECT_EQ(trial["expected_codim"], 2);
    EXPECT_EQ(trial["tangent_codim"], 2);
    EXPECT_EQ(trial["h1_codim"], 2);
  }
}

TEST(Binary, GlobalFlagsBeforeSubcommand) {
  const RunResult r = run("--format json --seed 3 verify tpenc -n 5 -k 3");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(Json::parse(r.out)["seed"], 3);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("syzygy --system " + sample("example_b.txt") + " -d 1").code, 0);
  EXPECT_EQ(run("poncelet --system " + sample("cayley.txt") + " --compare " + sample("cayley_matrix.txt")).code, 0);
  // Comparing against the wrong polynomial is a failed check.
  EXPECT_EQ(run("poncelet --system " + sample("example_a.txt") + " --compare " + sample("cayley_matrix.txt")).code,
            1);
  EXPECT_EQ(run("syzygy --system /nonexistent.txt -d 1").code, 2);
  EXPECT_EQ(run("verify teorema -n 5 -k 2 --points 1:0,0:1").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Binary, TextOutput) {
  const RunResult r = run("verify teorema -n 5 -k 2 --points 1:0,0:1,1:1,1:-1 --seed 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pass: true"), std::string::npos);
  const RunResult p = run("verify prozero -n 4 -k 2 --points 1:0,0:1,1:1,1:-1");
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("pass: true"), std::string::npos);
}
