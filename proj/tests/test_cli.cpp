// Runs the built command-line tool and inspects its exit code and output.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  std::string cmd = std::string(SPLITGEN_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expect_code = 0) {
  Outcome r = run(args + " --format json");
  EXPECT_EQ(r.code, expect_code) << args;
  return json::parse(r.out);
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = std::string(::testing::TempDir()) + name;
  std::ofstream(path) << body;
  return path;
}

std::vector<std::size_t> block_dims(const json& r) {
  std::vector<std::size_t> d;
  for (const auto& b : r["blocks"]) d.push_back(b["dim"].get<std::size_t>());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(Cli, DecomposeExamples) {
  auto q3 = run_json("decompose --preset quadric --p 3");
  EXPECT_EQ(block_dims(q3), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(q3["field_used"], "F_3");
  auto q2 = run_json("decompose --preset quadric --p 2");
  EXPECT_EQ(block_dims(q2), (std::vector<std::size_t>{4}));
  EXPECT_EQ(q2["semisimple"], false);
  auto c1 = run_json("decompose --preset cpn --n 1 --p 0");
  EXPECT_EQ(c1["field"], "Q");
  EXPECT_EQ(block_dims(c1), (std::vector<std::size_t>{1, 1}));
  for (const auto& r : {q3, q2, c1}) EXPECT_TRUE(r.contains("provenance"));
}

TEST(Cli, VerdictExamples) {
  auto v2 = run_json("verdict --preset quadric --edge E --group 'SU(2)' --p 2");
  ASSERT_EQ(v2["blocks"].size(), 1u);
  EXPECT_EQ(v2["blocks"][0]["verdict"], "SplitGenerates");
  EXPECT_EQ(v2["blocks"][0]["nilpotency"], json::array({4}));
  EXPECT_EQ(v2["hom_rank"], 2);
  auto v0 = run_json("verdict --preset quadric --edge E --group 'SU(2)' --p 0 --allow-extension");
  EXPECT_EQ(v0["geometric_blocks"]["SplitGenerates"], 1);
  EXPECT_EQ(v0["geometric_blocks"]["Zero"], 3);
  for (const char* args : {"verdict --preset quadric --edge 1 --shift 0 --p 3",
                           "verdict --preset cpn --n 3 --edge 1 --shift 0 --p 5 --allow-extension"}) {
    auto r = run_json(args);
    for (const auto& b : r["blocks"]) EXPECT_EQ(b["verdict"], "Zero") << args;
    EXPECT_EQ(r["hom_rank"], 0);
  }
}

TEST(Cli, ShiftsDefaultToEdgeDegree) {
  auto a = run_json("verdict --preset quadric --edge E --p 2");
  auto b = run_json("verdict --preset quadric --edge E --shift 2 --p 2");
  EXPECT_EQ(a, b);
}

TEST(Cli, InputDocument) {
  auto path = write_temp("trunc.json", R"({"field":{"p":3},"generators":[{"name":"x","degree":0}],)"
                                       R"("relations":[{"lhs":"x^3","rhs":"x"}]})");
  auto r = run_json("decompose --input " + path);
  EXPECT_EQ(r["field"], "F_3");
  EXPECT_EQ(r["radical_dim"], 0);
  // flags override the document
  auto r2 = run_json("decompose --input " + path + " --p 2");
  EXPECT_EQ(r2["field"], "F_2");
  EXPECT_EQ(block_dims(r2), (std::vector<std::size_t>{1, 2}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("decompose --preset quadric --p 3").code, 0);
  EXPECT_EQ(run("decompose --preset quadric --p 4").code, 1);           // not a prime
  EXPECT_EQ(run("gepner --r 2 --N 4 --p 3").code, 1);                   // roots missing
  EXPECT_EQ(run("decompose").code, 2);                                  // no algebra
  EXPECT_EQ(run("").code, 2);                                           // no subcommand
  EXPECT_EQ(run("decompose --preset quadric --format xml").code, 2);
  EXPECT_EQ(run("example nosuch").code, 2);
  EXPECT_EQ(run("verdict --preset quadric --edge 'E +' --p 2").code, 2);
  EXPECT_EQ(run("verdict --preset quadric --edge E --shift 2 --shift 0 --p 2").code, 2);
  auto bad = write_temp("bad.json", R"({"field":{"p":3},"generators":[{"name":"x"}],"relations":[{"lhs":"x^2"}]})");
  EXPECT_EQ(run("decompose --input " + bad).code, 2);
  auto broken = write_temp("broken.json", "{\"field\":");
  EXPECT_EQ(run("decompose --input " + broken).code, 2);
  EXPECT_EQ(run("decompose --input /nonexistent/file.json").code, 2);
}

TEST(Cli, ParseDiagnosticsNameTheField) {
  auto bad = write_temp("bad2.json", R"({"field":{"p":3},"generators":[{"name":"x"}],)"
                                     R"("relations":[{"lhs":"x^2","rhs":"x"},{"lhs":"x^3","rhs":"y"}]})");
  std::string cmd = std::string(SPLITGEN_CLI) + " decompose --input " + bad + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::array<char, 1024> buf{};
  std::string err;
  while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) err += buf.data();
  pclose(pipe);
  EXPECT_NE(err.find("relations[1]"), std::string::npos) << err;
}

TEST(Cli, ExamplesPass) {
  for (const char* name : {"quadric-table", "cpn", "gepner", "toric", "nonformality-cp1"}) {
    auto r = run_json(std::string("example ") + name);
    EXPECT_EQ(r["status"], "PASS") << name;
    for (const auto& c : r["checks"]) EXPECT_EQ(c["status"], "PASS") << name << ": " << c["check"];
  }
  auto cpn = run_json("example cpn");
  EXPECT_EQ(cpn["detail"]["field_used"].get<std::string>().rfind("F_2^2", 0), 0u);
  EXPECT_EQ(cpn["detail"]["blocks"].size(), 3u);
  auto nf = run_json("example nonformality-cp1");
  bool cited_mu4 = false;
  for (const auto& s : nf["detail"]["nonformality"]["steps"])
    cited_mu4 = cited_mu4 || (s["source"] == "cited" && s["statement"].get<std::string>().find("mu^4") != std::string::npos);
  EXPECT_TRUE(cited_mu4);
}

TEST(Cli, ExampleOptions) {
  // n + 1 = 3 = 3^1: one block of dim 3
  auto r = run_json("example cpn --n 2 --p 3");
  EXPECT_EQ(r["status"], "PASS");
  EXPECT_EQ(r["detail"]["blocks"].size(), 1u);
  // a field too small for the roots is an engine error, not a mismatch
  EXPECT_EQ(run("example cpn --n 5 --p 2 --cap 1").code, 1);
}

TEST(Cli, JsonRoundTripAndDeterminism) {
  for (const char* args : {"decompose --preset quadric --p 3", "verdict --preset quadric --edge E --p 0 --allow-extension",
                           "hh --preset cpn --n 1 --p 2 --length-bound 4", "ext --group 'SU(3)'",
                           "gepner --r 2 --N 4 --p 0", "toric --preset cp1 --p 3", "example gepner"}) {
    Outcome a = run(std::string(args) + " --format json");
    Outcome b = run(std::string(args) + " --format json");
    ASSERT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(json::parse(a.out).dump(2) + "\n", a.out) << args;
    Outcome t1 = run(args), t2 = run(args);
    EXPECT_EQ(t1.out, t2.out) << args;
    EXPECT_FALSE(t1.out.empty());
  }
}

TEST(Cli, OtherCommands) {
  auto hh = run_json("hh --preset cpn --n 1 --p 5");
  EXPECT_EQ(hh["dims"], json::array({2, 0, 0, 0, 0}));
  EXPECT_EQ(hh["nonformality"]["conclusion"], "semisimple - no obstruction");
  auto ext = run_json("ext --group 'SU(4)'");
  EXPECT_EQ(ext["ext_generator_degrees"], json::array({3, 5, 7}));
  EXPECT_EQ(ext["dims"], json::array({1, 3, 3, 1}));
  auto g = run_json("gepner --r 2 --N 4 --p 0");
  EXPECT_EQ(g["distinct_coordinate_images"].size(), 6u);
  auto t = run_json("toric --preset quadric --p 31");
  EXPECT_EQ(t["points"].size(), 3u);
  EXPECT_EQ(t["complete"], true);
}
