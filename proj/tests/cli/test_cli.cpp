#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hecke/serialize.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hecke::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

hecke::Json json_of(const Outcome& o) { return hecke::Json::parse(o.out); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::filesystem::path kGolden = std::filesystem::path(HECKE_TESTDATA_DIR) / "golden";

TEST(CliExit, HelpIsSuccess) {
  const auto o = run({"--help"});
  EXPECT_EQ(o.code, hecke::cli::kOk);
  EXPECT_NE(o.out.find("HECKE_PRECISION_BITS"), std::string::npos);
  EXPECT_NE(o.out.find("HECKE_THREADS"), std::string::npos);
}

TEST(CliExit, UsageErrors) {
  EXPECT_EQ(run({}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"gram"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"gram", "--lambda", "1,2"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"gram", "--lambda", "2,1", "--hermitian"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"unitary", "--lambda", "2,1"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"unitary", "--lambda", "2,1", "--c", "3/5"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"unitary", "--lambda", "2,1", "--c", "-1/2"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"unitary", "--lambda", "2,1|1", "--c", "0"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"--format", "xml", "det", "--lambda", "2,1"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"--precision", "8", "det", "--lambda", "2,1"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"element", "--lambda", "2,1", "--which", "y"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"verify", "--n-max", "1"}).code, hecke::cli::kUsage);
  EXPECT_EQ(run({"locus", "--lambda", "2,1", "--bound", "0"}).code, hecke::cli::kUsage);
}

TEST(CliExit, SizeGuard) {
  EXPECT_EQ(run({"gram", "--lambda", "5,4"}).code, hecke::cli::kSizeGuard);
  EXPECT_EQ(run({"verify", "--n-max", "9"}).code, hecke::cli::kSizeGuard);
}

TEST(CliExit, OptionsAfterSubcommand) {
  const auto a = run({"--format", "csv", "det", "--lambda", "2,1"});
  const auto b = run({"det", "--lambda", "2,1", "--format", "csv"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, "e,multiplicity\n3,1\n");
}

TEST(CliUnitary, Examples) {
  auto v = json_of(run({"unitary", "--lambda", "3,1", "--c", "1/4"}));
  EXPECT_EQ(v["status"], "NonzeroUnitary");
  EXPECT_EQ(v["dim_D"], 1);
  v = json_of(run({"unitary", "--lambda", "3,1", "--c", "1/3"}));
  EXPECT_EQ(v["status"], "NonzeroNotUnitary");
  v = json_of(run({"unitary", "--lambda", "1,1", "--c", "1/2"}));
  EXPECT_EQ(v["status"], "NonzeroUnitary");
  v = json_of(run({"unitary", "--lambda", "1,1", "--c", "0"}));
  EXPECT_EQ(v["signature"], hecke::Json::parse("[1,0,0]"));
  v = json_of(run({"unitary", "--lambda", "2", "--c", "1/2"}));
  EXPECT_EQ(v["status"], "Zero");
}

TEST(CliUnitary, MismatchDoesNotChangeExitCode) {
  const auto o = run({"unitary", "--lambda", "4,1", "--c", "2/5"});
  EXPECT_EQ(o.code, hecke::cli::kOk);
  EXPECT_EQ(json_of(o)["status"], "NonzeroUnitary");
}

TEST(CliJantzen, Examples) {
  EXPECT_EQ(json_of(run({"jantzen", "--lambda", "3,1", "--c", "1/4"}))["layers"], hecke::Json::parse("[3,2,0]"));
  EXPECT_EQ(json_of(run({"jantzen", "--lambda", "2,1", "--c", "1/5"}))["layers"], hecke::Json::parse("[2,0]"));
  EXPECT_EQ(json_of(run({"jantzen", "--lambda", "2,1", "--c", "1/3"}))["layers"], hecke::Json::parse("[2,1,0]"));
}

TEST(CliDet, TwoOne) {
  const auto j = json_of(run({"det", "--lambda", "2,1"}));
  ASSERT_EQ(j["factors"].size(), 1u);
  EXPECT_EQ(j["factors"][0]["e"], 3);
  EXPECT_EQ(j["factors"][0]["multiplicity"], 1);
  EXPECT_EQ(j["unit"], hecke::Json::parse(R"({"1":"1"})"));
}

TEST(CliDet, FactorsReassembleTheDeterminant) {
  for (const char* shape : {"3,1", "2,2", "3,2", "3,1,1", "4,2"}) {
    const auto j = json_of(run({"det", "--lambda", shape}));
    hecke::LaurentPoly acc = hecke::laurent_from_json(j["unit"]);
    for (const auto& f : j["factors"])
      for (int i = 0; i < f["multiplicity"].get<int>(); ++i) acc = acc * hecke::LaurentPoly(0, hecke::cyclotomic_polynomial(f["e"].get<int>()));
    EXPECT_EQ(acc, hecke::laurent_from_json(j["det"])) << shape;
  }
}

TEST(CliGram, ColumnShapeIsOne) {
  const auto j = json_of(run({"gram", "--lambda", "1,1,1"}));
  EXPECT_EQ(j["dimension"], 1);
  EXPECT_EQ(j["gram"]["entries"], hecke::Json::parse(R"([[{"0":"1"}]])"));
}

TEST(CliGram, RowShapeHermitianIsOneByOne) {
  const auto o = run({"gram", "--lambda", "2", "--c", "1/3", "--hermitian"});
  EXPECT_EQ(o.code, 0);
  const auto h = json_of(o)["hermitian"];
  EXPECT_EQ(h["rows"], 1);
  EXPECT_EQ(h["cols"], 1);
}

TEST(CliGram, DumpAndOutputFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "hecke_cli_test";
  std::filesystem::create_directories(dir);
  const auto dumpfile = (dir / "g.json").string();
  const auto outfile = (dir / "out.txt").string();
  const auto o = run({"--output", outfile, "gram", "--lambda", "2,1", "--c", "1/3", "--hermitian", "--dump-gram", dumpfile});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(slurp(outfile), slurp(dumpfile));
  EXPECT_EQ(hecke::Json::parse(slurp(dumpfile))["alpha"].is_object(), true);
  std::filesystem::remove_all(dir);
}

TEST(CliElement, SigmaOfMIsMTimesU) {
  for (const char* shape : {"2", "2,1", "3,1", "2,2"}) {
    const auto m = json_of(run({"element", "--lambda", shape, "--which", "m"}));
    const auto sm = json_of(run({"element", "--lambda", shape, "--which", "sigma-m"}));
    const auto u = json_of(run({"element", "--lambda", shape, "--which", "u"}));
    ASSERT_EQ(u["terms"].size(), 1u) << shape;
    EXPECT_EQ(u["terms"][0]["word"], "1");
    const auto scale = hecke::laurent_from_json(u["terms"][0]["coeff"]);
    ASSERT_EQ(m["terms"].size(), sm["terms"].size());
    for (std::size_t i = 0; i < m["terms"].size(); ++i) {
      EXPECT_EQ(m["terms"][i]["word"], sm["terms"][i]["word"]);
      EXPECT_EQ(hecke::laurent_from_json(m["terms"][i]["coeff"]) * scale, hecke::laurent_from_json(sm["terms"][i]["coeff"]));
    }
  }
}

TEST(CliVerify, SmallRankAgrees) {
  const auto o = run({"verify", "--n-max", "3"});
  EXPECT_EQ(o.code, hecke::cli::kOk);
  EXPECT_EQ(json_of(o)["agreement"], true);
}

TEST(CliVerify, RankFiveReportsTheOneDimensionalHeads) {
  const auto o = run({"--format", "pretty", "verify", "--n-max", "5", "--bound", "14"});
  EXPECT_EQ(o.code, hecke::cli::kMismatch);
  EXPECT_NE(o.out.find("(4,1) c = -2/5: predicted not unitary, computed NonzeroUnitary"), std::string::npos);
  EXPECT_NE(o.out.find("(4,1) c = 2/5: predicted not unitary, computed NonzeroUnitary"), std::string::npos);
  EXPECT_EQ(o.out.find("(3,2)"), std::string::npos);
}

TEST(CliLocus, ExitCodeFollowsAgreement) {
  EXPECT_EQ(run({"locus", "--lambda", "3,1", "--bound", "10"}).code, hecke::cli::kOk);
  EXPECT_EQ(run({"locus", "--lambda", "4,1", "--bound", "5"}).code, hecke::cli::kMismatch);
}

TEST(CliLocus, TwoTwoAgrees) {
  const auto o = run({"locus", "--lambda", "2,2", "--bound", "12"});
  EXPECT_EQ(o.code, hecke::cli::kOk);
  EXPECT_EQ(json_of(o)["agreement"], true);
}

TEST(CliLocus, CsvHeader) {
  const auto o = run({"--format", "csv", "locus", "--lambda", "2,1", "--bound", "4"});
  EXPECT_EQ(o.out.rfind(hecke::scan_csv_header(), 0), 0u);
}

TEST(CliDeterminism, ThreadCountDoesNotChangeOutput) {
  for (const char* fmt : {"json", "csv", "pretty"}) {
    const auto one = run({"--threads", "1", "--format", fmt, "verify", "--n-max", "4", "--bound", "9"});
    const auto four = run({"--threads", "4", "--format", fmt, "verify", "--n-max", "4", "--bound", "9"});
    EXPECT_EQ(one.code, four.code);
    EXPECT_EQ(one.out, four.out) << fmt;
    EXPECT_EQ(one.out, run({"--threads", "1", "--format", fmt, "verify", "--n-max", "4", "--bound", "9"}).out);
  }
}

TEST(CliDeterminism, PrecisionDoesNotChangeOutput) {
  const auto lo = run({"--precision", "16", "locus", "--lambda", "3,2", "--bound", "12"});
  const auto hi = run({"--precision", "512", "locus", "--lambda", "3,2", "--bound", "12"});
  EXPECT_EQ(lo.out, hi.out);
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"gram_2_1.json", {"gram", "--lambda", "2,1", "--with-action"}},
      {"gram_3_1_c1_4.json", {"gram", "--lambda", "3,1", "--c", "1/4"}},
      {"hermitian_2_1_c1_3.json", {"gram", "--lambda", "2,1", "--c", "1/3", "--hermitian"}},
      {"element_m_2_1.json", {"element", "--lambda", "2,1", "--which", "m"}},
      {"unitary_3_1_c1_4.json", {"unitary", "--lambda", "3,1", "--c", "1/4"}},
      {"unitary_2_2_c1_3.json", {"unitary", "--lambda", "2,2", "--c", "1/3"}},
      {"jantzen_3_1_c1_4.json", {"jantzen", "--lambda", "3,1", "--c", "1/4"}},
      {"det_3_2.json", {"det", "--lambda", "3,2"}},
      {"locus_2_1_b6.json", {"locus", "--lambda", "2,1", "--bound", "6"}},
      {"locus_2_1_b6.csv", {"--format", "csv", "locus", "--lambda", "2,1", "--bound", "6"}},
      {"verify_n3_b8.json", {"verify", "--n-max", "3", "--bound", "8"}},
  };
  return cases;
}

TEST(CliGolden, OutputsMatch) {
  for (const auto& gc : golden_cases()) {
    const auto path = kGolden / gc.file;
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(run(gc.args).out, slurp(path)) << gc.file;
  }
}

}  // namespace
