#include "cli.hpp"
#include "report.hpp"

#include "cxwidths/errors.hpp"
#include "cxwidths/harmonic_basis.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cxw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

std::string last_line(const std::string& s) {
  auto t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

} // namespace

TEST(Cli, DimsCsv) {
  const auto r = call({"dims", "--d", "2", "--lmax", "2", "--grading", "max"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "l,a_l,d_l,cum_dim");
  EXPECT_EQ(last_line(r.out), "2,5,19,27");
}

TEST(Cli, CheckAdditionPasses) {
  const auto r = call({"check", "addition", "--d", "2", "--m", "2", "--n", "1", "--samples", "1000", "--seed", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_LT(j["max_deviation"].get<double>(), 1e-9);
  EXPECT_EQ(j["seed"].get<int>(), 0);
}

TEST(Cli, CheckFailsWhenToleranceTooTight) {
  const auto r = call({"check", "addition", "--d", "2", "--m", "4", "--n", "4", "--samples", "200", "--tol", "1e-300"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"--bogus"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"dims", "--d", "2"}).code, 2);
  EXPECT_EQ(call({"dims", "--d", "2", "--lmax", "3", "--grading", "sum"}).code, 2);
  EXPECT_EQ(call({"check", "addition", "--d", "2", "--m", "1", "--n", "1", "--tol", "0"}).code, 2);
  const auto r = call({"levy", "--d", "2", "--M1", "0", "--M2", "1", "--p", "0.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpListsEverySubcommand) {
  const auto r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* s : {"dims", "basis", "check", "levy", "seq", "widths", "project"}) {
    EXPECT_NE(r.out.find(s), std::string::npos) << s;
  }
  const auto w = call({"widths", "--help"});
  for (const char* s : {"spectrum", "fit", "bounds", "compare-gradings"}) EXPECT_NE(w.out.find(s), std::string::npos) << s;
  const auto c = call({"check", "--help"});
  for (const char* s : {"addition", "gegenbauer", "nikolskii", "dim-bounds"}) EXPECT_NE(c.out.find(s), std::string::npos) << s;
}

TEST(Cli, LevyJsonKeys) {
  const auto r = call({"levy", "--d", "2", "--M1", "0", "--M2", "1", "--family", "exp:gamma=1,r=1", "--p", "4",
                       "--sphere-samples", "50", "--omega-samples", "1000", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  for (const char* k : {"estimate", "stderr", "lower", "upper", "case", "empirical_C", "seed"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["upper"], "unknown-constant");
  EXPECT_EQ(j["case"], "a");
}

TEST(Cli, LevyParsevalPath) {
  const auto r = call({"levy", "--d", "2", "--M1", "0", "--M2", "1", "--family", "exp:gamma=1,r=1", "--omega-samples", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json_of(r)["estimate"].get<double>(), std::exp(-1.0), 1e-15);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> a = {"levy", "--d", "2", "--M1", "1", "--M2", "2", "--family", "sobolev:gamma=1",
                                      "--p", "inf", "--sphere-samples", "30", "--omega-samples", "1000", "--seed", "8"};
  EXPECT_EQ(call(a).out, call(a).out);
}

TEST(Cli, ChunkSizeChangesOnlySamplingNotFormat) {
  const auto r = call({"check", "gegenbauer", "--d", "3", "--k", "4", "--samples", "500", "--chunk", "100"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, SpectrumAndFitRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "cxwidths_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "spec.csv").string();
  const auto s = call({"widths", "spectrum", "--family", "fs:gamma=3,xi=0", "--d", "2", "--nmax", "100000", "--out", path});
  ASSERT_EQ(s.code, 0) << s.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,d_n");
  const auto f = call({"widths", "fit", path, "--model", "power"});
  ASSERT_EQ(f.code, 0) << f.err;
  const auto j = json_of(f);
  for (const char* k : {"model", "slope", "intercept", "residual"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_NEAR(j["slope"].get<double>(), -1.0, 0.1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, FitRejectsMalformedInput) {
  const auto dir = std::filesystem::temp_directory_path() / "cxwidths_cli_bad";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "bad.csv").string();
  std::ofstream(path) << "n,d_n\n0,1\n1,abc\n";
  EXPECT_EQ(call({"widths", "fit", path}).code, 1);
  EXPECT_EQ(call({"widths", "fit", (dir / "missing.csv").string()}).code, 1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, UnwritableOutput) {
  EXPECT_EQ(call({"dims", "--d", "2", "--lmax", "2", "--out", "/nonexistent-dir/x.csv"}).code, 1);
}

TEST(Cli, BoundsAndHypothesisErrors) {
  const auto r = call({"widths", "bounds", "--theorem", "fs-upper", "--d", "2", "--gamma", "3", "--m", "10000"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json_of(r)["upper"].get<double>(), std::sqrt(2.0) * 1e-4, 1e-18);
  const auto h = call({"widths", "bounds", "--theorem", "sobolev-h", "--gamma", "1", "--p", "1", "--q", "3", "--m", "50"});
  EXPECT_EQ(h.code, 2);
  EXPECT_NE(h.err.find("hypothesis"), std::string::npos);
}

TEST(Cli, SeqAndDivergence) {
  const auto r = call({"seq", "--family", "exp:gamma=1,r=1", "--d", "2", "--N", "3", "--eps", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["M"].get<int>(), 8);
  EXPECT_EQ(j["mk"][0], "64");
  EXPECT_EQ(call({"seq", "--family", "id"}).code, 1);
}

TEST(Cli, CompareGradings) {
  const auto r = call({"widths", "compare-gradings", "--family", "exp:gamma=1,r=1", "--d", "2", "--nmax", "200000"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json_of(r)["agree"].get<bool>());
}

TEST(Cli, CheckCommands) {
  EXPECT_EQ(call({"check", "dim-bounds", "--d", "3", "--lmax", "30"}).code, 0);
  EXPECT_EQ(call({"check", "nikolskii", "--d", "2", "--M1", "0", "--M2", "1", "--p", "2", "--samples", "20",
                  "--omega-samples", "2000"}).code, 0);
}

TEST(Cli, ProjectReproducesBasisFunction) {
  const auto r = call({"project", "--d", "2", "--m", "1", "--n", "1", "--j", "2", "--samples", "20000", "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json_of(r)["within_3_stderr"].get<bool>());
  EXPECT_EQ(call({"project", "--d", "2", "--m", "1", "--n", "1", "--j", "3"}).code, 2);
}

TEST(Report, BasisJsonRoundTrip) {
  const auto h = cxw::harmonic_basis::build_harmonic_basis(3, {2, 1});
  const auto j = cxw::report::basis_to_json(h);
  const auto back = cxw::report::basis_from_json(nlohmann::ordered_json::parse(cxw::report::dump_json(j)));
  EXPECT_EQ(back.vectors(), h.vectors());
  EXPECT_EQ(back.sq_norms(), h.sq_norms());
  EXPECT_EQ(j["sq_norms"][0].get<std::string>().find('/') != std::string::npos ||
                j["sq_norms"][0].get<std::string>().find_first_not_of("0123456789") == std::string::npos,
            true);
  EXPECT_THROW(cxw::report::basis_from_json(nlohmann::ordered_json::parse(R"({"d": 2})")), cxw::DataError);
}

TEST(Report, SeventeenSignificantDigits) {
  nlohmann::ordered_json j;
  j["x"] = 0.1;
  EXPECT_NE(cxw::report::dump_json(j).find("0.10000000000000001"), std::string::npos);
  EXPECT_EQ(cxw::report::format_double(0.1), "0.10000000000000001");
}
