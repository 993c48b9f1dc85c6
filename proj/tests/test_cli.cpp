#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hforge/cli.hpp"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hecke-forge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hforge::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("hforge_cli_" + name + ".json");
  std::ofstream(path) << j.dump();
  return path.string();
}

}  // namespace

TEST(Cli, Version) {
  auto r = run({"--version"});
  EXPECT_EQ(r.code, hforge::cli::kExitOk);
  EXPECT_NE(r.out.find("hecke-forge 0.1.0"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"--no-such-flag"}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"sp4", "--q", "3"}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"sp4", "--q", "3", "--twist", "weird"}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"sp4", "--q", "4", "--twist", "sign"}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"sgn", "--q", "5", "--a", "0"}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"suite", "--filter", "nosuchmodule"}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"spinor-norm", "/nonexistent/file.json"}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"hecke", "--type", "Z9", "--check", "braid"}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"help"}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, hforge::cli::kExitOk);
}

TEST(Cli, Sgn) {
  auto r = run({"sgn", "--q", "5", "--a", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.parsed()["sign"], -1);
  r = run({"sgn", "--q", "9", "--a", "[0,1]"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.parsed()["sign"], 1);  // x^2 = -1 and -1 is a square in F_9.
}

TEST(Cli, Sp4Values) {
  for (int q : {3, 5, 7, 9}) {
    auto t = run({"sp4", "--q", std::to_string(q), "--twist", "trivial"});
    ASSERT_EQ(t.code, 0);
    EXPECT_EQ(t.parsed()["value"], q - 1);
    auto s = run({"sp4", "--q", std::to_string(q), "--twist", "sign"});
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(s.parsed()["value"], 0);
    auto e = run({"sp4", "--q", std::to_string(q), "--twist", "sign", "--point", "e", "--N", "4"});
    ASSERT_EQ(e.code, 0);
    EXPECT_EQ(e.parsed()["value"], q % 4 == 1 ? q : -q);
    EXPECT_EQ(e.parsed()["N"], 4);
  }
}

TEST(Cli, SpinorNorm) {
  const json in = {{"field", 3}, {"gram", {{0, 1}, {1, 0}}}, {"matrix", {{-1, 0}, {0, -1}}}};
  auto r = run({"spinor-norm", write_temp("sn", in)});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed()["square_class"], "nonsquare");
  EXPECT_EQ(r.parsed()["sign"], -1);
  const json bad = {{"field", 3}, {"gram", {{0, 1}, {1, 0}}}, {"matrix", {{1, 1}, {0, 1}}}};
  EXPECT_EQ(run({"spinor-norm", write_temp("sn_bad", bad)}).code, hforge::cli::kExitUsage);
  std::ofstream(std::filesystem::temp_directory_path() / "hforge_cli_garbage.json") << "{not json";
  EXPECT_EQ(run({"spinor-norm", (std::filesystem::temp_directory_path() / "hforge_cli_garbage.json").string()}).code,
            hforge::cli::kExitUsage);
}

TEST(Cli, ExtendedSn) {
  const json zeta = {{"base", 0}, {"zeta", 1}};
  const json in = {{"field", 3},
                   {"blocks", {{{"label", "a"}, {"dim", 2}, {"kind", "asym"}}}},
                   {"gram", {{0, 1}, {1, 0}}},
                   {"element", {{zeta, 0}, {0, zeta}}}};
  auto r = run({"extended-sn", write_temp("ext", in)});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed()["member"], true);
  EXPECT_EQ(r.parsed()["value"], "i");

  const json sym = {{"field", 3},
                    {"blocks", {{{"label", "0"}, {"dim", 2}, {"kind", "sym"}}}},
                    {"gram", {{1, 0}, {0, 1}}},
                    {"element", {{zeta, 0}, {0, zeta}}}};
  r = run({"extended-sn", write_temp("ext_sym", sym)});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed()["member"], false);
  EXPECT_TRUE(r.parsed()["value"].is_null());
}

TEST(Cli, Weil) {
  auto r = run({"weil", "--p", "3", "--dim", "2", "--check", "mult"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed()["pass"], true);
  EXPECT_EQ(r.parsed()["cases"], 576);
  r = run({"weil", "--p", "3", "--dim", "2", "--check", "central"});
  EXPECT_EQ(r.code, 0);
  r = run({"weil", "--p", "5", "--dim", "2", "--check", "induction"});
  EXPECT_EQ(r.code, 0);
  r = run({"weil", "--p", "3", "--dim", "6", "--check", "split", "--samples", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"weil", "--p", "9", "--dim", "2", "--check", "mult"}).code, hforge::cli::kExitUsage);
  EXPECT_EQ(run({"weil", "--p", "3", "--dim", "3", "--check", "mult"}).code, hforge::cli::kExitUsage);
}

TEST(Cli, Hecke) {
  for (const char* t : {"A2", "B2", "G2", "A1~"})
    for (const char* c : {"braid", "quadratic", "assoc"}) {
      auto r = run({"hecke", "--type", t, "--check", c, "--samples", "20"});
      ASSERT_EQ(r.code, 0) << t << " " << c << " " << r.err;
      EXPECT_EQ(r.parsed()["pass"], true);
    }
  auto r = run({"hecke", "--type", "B2", "--params", "a,b", "--check", "braid"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed()["params"], json({"a", "b"}));
  EXPECT_EQ(run({"hecke", "--type", "A2", "--params", "a,b", "--check", "braid"}).code, hforge::cli::kExitUsage);

  const json custom = {{"coxeter", {{1, "inf"}, {"inf", 1}}}, {"names", {"s0", "s1"}}};
  r = run({"hecke", "--type", write_temp("cox", custom), "--check", "assoc", "--samples", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.parsed()["type"], "custom");
}

TEST(Cli, SuiteFilterSp4) {
  const auto start = std::chrono::steady_clock::now();
  auto r = run({"suite", "--filter", "sp4oracle"});
  const auto elapsed = std::chrono::steady_clock::now() - start;
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.parsed();
  EXPECT_EQ(j["checks"].size(), 6u);
  EXPECT_EQ(j["pass"], true);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["module"], "sp4oracle");
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 1.0);
  EXPECT_NE(r.err.find("sp4oracle"), std::string::npos);
}

TEST(Cli, Deterministic) {
  for (std::vector<std::string> args : {std::vector<std::string>{"suite", "--filter", "heckealg"},
                                        std::vector<std::string>{"weil", "--p", "7", "--dim", "2", "--check", "mult", "--samples", "30"},
                                        std::vector<std::string>{"sp4", "--q", "9", "--twist", "sign"}}) {
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}
