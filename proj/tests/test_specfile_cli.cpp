#include "bolalg/cli.hpp"
#include "bolalg/enveloping.hpp"
#include "bolalg/report.hpp"
#include "bolalg/rng.hpp"
#include "bolalg/specfile.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace bolalg;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "bolalg_" + name;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

const char* kV1 = R"json({
  "label": "V-(0,0,1)",
  "dim": 3,
  "bilinear": [{"i": 2, "j": 3, "k": 3, "c": "-1"}, {"i": 3, "j": 2, "k": 3, "c": "1"}],
  "trilinear": [
    {"i": 2, "j": 3, "k": 2, "l": 1, "c": "1"}, {"i": 3, "j": 2, "k": 2, "l": 1, "c": "-1"},
    {"i": 2, "j": 3, "k": 3, "l": 2, "c": "1"}, {"i": 3, "j": 2, "k": 3, "l": 2, "c": "-1"}
  ]
})json";

std::string error_of(const std::string& text) {
  try {
    parse_algebra_file(text);
  } catch (const SpecError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(SpecFile, ParsesFamilyMember) {
  EXPECT_EQ(parse_algebra(kV1), family_bol({Sign::minus, 0, 0, 1}));
  EXPECT_EQ(parse_algebra(kV1).label, "V-(0,0,1)");
}

TEST(SpecFile, EmptyTensorsGiveZeroAlgebra) {
  const Algebra a = parse_algebra(R"({"dim": 3, "bilinear": [], "trilinear": []})");
  EXPECT_EQ(a.dim, 3);
  EXPECT_TRUE(a.bilinear.empty());
  EXPECT_TRUE(a.trilinear.empty());
  EXPECT_EQ(parse_algebra(R"({"dim": 2})"), Algebra(2));
}

TEST(SpecFile, IndexOutOfRange) {
  const std::string e = error_of(R"({"dim": 3, "bilinear": [{"i": 1, "j": 2, "k": 5, "c": "1"}]})");
  EXPECT_NE(e.find("/bilinear/0/k"), std::string::npos) << e;
  EXPECT_NE(e.find("out of range"), std::string::npos) << e;
  EXPECT_NE(error_of(R"({"dim": 3, "trilinear": [{"i": 0, "j": 2, "k": 1, "l": 1, "c": "1"}]})")
                .find("/trilinear/0/i"),
            std::string::npos);
}

TEST(SpecFile, SyntaxErrorCarriesLineAndColumn) {
  const std::string e = error_of("{\n  \"dim\": 3,\n  \"bilinear\": [,]\n}");
  EXPECT_NE(e.find("line 3"), std::string::npos) << e;
  EXPECT_NE(e.find("column 16"), std::string::npos) << e;
}

TEST(SpecFile, SemanticErrors) {
  EXPECT_NE(error_of(R"({"dim": 3, "bilinear": [{"i": 1, "j": 2, "k": 3, "c": "1/0"}]})").find("/bilinear/0/c"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 3, "bilinear": [{"i": 1, "j": 2, "k": 3, "c": 0.5}]})").find("/bilinear/0/c"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 3, "extra": 1})").find("unknown field 'extra'"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 3, "bilinear": [{"i": 1, "j": 2, "k": 3, "c": "1", "w": 2}]})")
                .find("unknown field 'w'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"bilinear": []})").find("missing field 'dim'"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 0})").find("/dim"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "bilinear": [{"i": 1, "j": 2, "k": 1, "c": "1"},
                                             {"i": 1, "j": 2, "k": 1, "c": "2"}]})")
                .find("duplicate"),
            std::string::npos);
  EXPECT_NE(error_of(R"([1, 2])").find("expected an object"), std::string::npos);
}

TEST(SpecFile, RoundTripOnRandomAlgebras) {
  Rng rng(17);
  for (int n = 0; n < 50; ++n) {
    const int dim = static_cast<int>(rng.integer(1, 5));
    Algebra a(dim, "random-" + std::to_string(n));
    for (int e = 0; e < 6; ++e) {
      a.bilinear.set({int(rng.integer(0, dim - 1)), int(rng.integer(0, dim - 1)), int(rng.integer(0, dim - 1))},
                     rng.rational(40, 9));
      a.trilinear.set({int(rng.integer(0, dim - 1)), int(rng.integer(0, dim - 1)),
                       int(rng.integer(0, dim - 1)), int(rng.integer(0, dim - 1))},
                      rng.rational(40, 9));
    }
    const AlgebraFile file = to_file(a);
    const std::string text = emit_algebra_file(file);
    EXPECT_EQ(parse_algebra_file(text), file);
    EXPECT_EQ(emit_algebra_file(parse_algebra_file(text)), text);
    EXPECT_EQ(parse_algebra(text), a);
  }
}

TEST(Report, EmptyFindingsText) {
  RunReport r;
  r.command = "x";
  r.inputs_digest = digest_hex("");
  const std::string text = emit_report(r, ReportFormat::text);
  EXPECT_NE(text.find("findings: []"), std::string::npos);
  EXPECT_TRUE(r.passed());
}

TEST(Report, JsonFieldOrderAndFinding) {
  RunReport r;
  r.command = "audit";
  r.inputs_digest = "0";
  r.verdict("a", true);
  r.findings.push_back({"id", "somewhere", "wrong"});
  r.metric("z", "1");
  r.metric("a", "2");
  const std::string j = emit_report(r, ReportFormat::json);
  EXPECT_LT(j.find("\"command\""), j.find("\"inputs_digest\""));
  EXPECT_LT(j.find("\"verdicts\""), j.find("\"findings\""));
  EXPECT_LT(j.find("\"z\""), j.find("\"a\": \"2\""));
  EXPECT_NE(j.find("\"location\": \"somewhere\""), std::string::npos);
  EXPECT_EQ(j.find("timings"), std::string::npos);
  EXPECT_FALSE(r.passed());
}

TEST(Report, Fnv1aKnownVectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(Cli, ClassifyWorkedExample) {
  const CliRun r = cli({"classify", "--sign", "minus", "--x", "5", "--y", "-2", "--z", "3"});
  EXPECT_EQ(r.code, exit_pass) << r.err;
  EXPECT_NE(r.out.find("class: (0,0,1)"), std::string::npos);
  EXPECT_NE(r.out.find("b=3 f=2 d=-11 eps=+1"), std::string::npos);
}

TEST(Cli, ClassifyXcaseIsAFinding) {
  const CliRun r = cli({"classify", "--sign", "plus", "--x", "2/3", "--y", "0", "--z", "0", "--format", "json"});
  EXPECT_EQ(r.code, exit_failure);
  EXPECT_NE(r.out.find("\"id\": \"iso-list-plus\""), std::string::npos);
}

TEST(Cli, VerifyFamilyFile) {
  const std::string path = temp_path("v1.json");
  write(path, kV1);
  const CliRun r = cli({"verify", path});
  EXPECT_EQ(r.code, exit_pass) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS bol-identity"), std::string::npos);
}

TEST(Cli, VerifyReportsBrokenAlgebra) {
  const std::string path = temp_path("broken.json");
  write(path, R"({"dim": 3, "bilinear": [{"i": 2, "j": 3, "k": 3, "c": "-1"}, {"i": 3, "j": 2, "k": 3, "c": "1"}],
                  "trilinear": [{"i": 2, "j": 3, "k": 2, "l": 1, "c": "1"}]})");
  const CliRun r = cli({"verify", path});
  EXPECT_EQ(r.code, exit_failure);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyLieAndLts) {
  const std::string fam = temp_path("fam.json");
  const CliRun made = cli({"family", "--sign", "plus", "--x", "1", "--y", "1/2", "--z", "0", "--out", fam});
  ASSERT_EQ(made.code, exit_pass) << made.err;
  EXPECT_EQ(cli({"verify", fam}).code, exit_pass);
  const std::string lie = temp_path("lie.json");
  write(lie, R"({"dim": 2, "bilinear": [{"i": 1, "j": 2, "k": 2, "c": "1"}, {"i": 2, "j": 1, "k": 2, "c": "-1"}]})");
  const CliRun r = cli({"verify", lie});
  EXPECT_EQ(r.code, exit_pass);
  EXPECT_NE(r.out.find("PASS jacobi"), std::string::npos);
}

TEST(Cli, FamilyToStdoutParsesBack) {
  const CliRun r = cli({"family", "--sign", "minus", "--x", "1/3", "--y", "0", "--z", "-2"});
  EXPECT_EQ(r.code, exit_pass);
  EXPECT_EQ(parse_algebra(r.out), family_bol({Sign::minus, Rational(1, 3), 0, -2}));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({"bol-check", "--chart", "minus1", "--samples", "0"}).code, exit_usage);
  EXPECT_EQ(cli({}).code, exit_usage);
  EXPECT_EQ(cli({"frobnicate"}).code, exit_usage);
  EXPECT_EQ(cli({"classify", "--sign", "minus", "--x", "1/0", "--y", "0", "--z", "0"}).code, exit_usage);
  EXPECT_EQ(cli({"classify", "--sign", "sideways", "--x", "1", "--y", "0", "--z", "0"}).code, exit_usage);
  EXPECT_EQ(cli({"bol-check", "--chart", "minus7"}).code, exit_usage);
  EXPECT_EQ(cli({"verify", temp_path("does-not-exist.json")}).code, exit_usage);
  EXPECT_EQ(cli({"tangent-check", "--chart", "plus1", "--eps", "1"}).code, exit_usage);
  const CliRun r = cli({"classify", "--format", "yaml", "--sign", "minus", "--x", "1", "--y", "0", "--z", "0"});
  EXPECT_EQ(r.code, exit_usage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(cli({"--help"}).code, exit_pass); }

TEST(Cli, BolCheckReportsResidualAndSamples) {
  const CliRun r = cli({"bol-check", "--chart", "plus2", "--y", "1", "--samples", "50", "--seed", "3"});
  EXPECT_EQ(r.code, exit_pass) << r.out;
  EXPECT_NE(r.out.find("samples: 50"), std::string::npos);
  EXPECT_NE(r.out.find("max_residual: "), std::string::npos);
}

TEST(Cli, DeterministicUnderFixedSeed) {
  const std::vector<std::vector<std::string>> runs = {
      {"bol-check", "--chart", "minus2", "--y", "2", "--samples", "80", "--seed", "11", "--format", "json"},
      {"tangent-check", "--chart", "minus1"},
      {"isotopy-classify", "--sign", "minus", "--x", "1", "--y", "1", "--z", "0"},
      {"web-sample", "--chart", "plus1", "--grid", "2"},
      {"audit", "--samples", "40", "--seed", "5", "--format", "json"}};
  for (const auto& args : runs) {
    const CliRun a = cli(args), b = cli(args);
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_EQ(a.err, b.err) << args[0];
    EXPECT_EQ(a.code, b.code) << args[0];
  }
}

TEST(Cli, ExitZeroImpliesNoFailingVerdict) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"envelope", "--sign", "minus", "--x", "2", "--y", "-1", "--z", "1/2"},
           {"tangent-check", "--chart", "plus2", "--y", "2"},
           {"classify", "--sign", "plus", "--x", "0", "--y", "-3", "--z", "0"}}) {
    const CliRun r = cli(args);
    EXPECT_EQ(r.code, exit_pass) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("findings: []"), std::string::npos);
  }
}

TEST(Cli, AuditFindingsCarryLocations) {
  const CliRun r = cli({"audit", "--samples", "40", "--format", "json"});
  EXPECT_EQ(r.code, exit_failure);
  EXPECT_NE(r.out.find("\"location\": \"list of isomorphism classes, minus type\""), std::string::npos);
  EXPECT_NE(r.out.find("\"name\": \"every-display-matched-or-logged\""), std::string::npos);
}

TEST(Cli, WebSampleToFile) {
  const std::string path = temp_path("web.csv");
  const CliRun r = cli({"web-sample", "--chart", "minus2", "--y", "1", "--grid", "2", "--out", path});
  EXPECT_EQ(r.code, exit_pass) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "a_t,a_u,a_v,b_t,b_u,b_v,ab_t,ab_u,ab_v");
  std::remove(path.c_str());
}
