#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace cli = ultrafid::cli;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ultrafid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const cli::ParseOutcome parsed = cli::parse(static_cast<int>(argv.size()), argv.data(), out, err);
  if (const int* code = std::get_if<int>(&parsed)) return {*code, out.str(), err.str()};
  const int code = cli::run(std::get<cli::RunConfig>(parsed), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"eval", "--n", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"eval", "--nr", "-1"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"certify", "--r-min", "5", "--r-max", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"density", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_FALSE(invoke({"eval", "--n", "0"}).err.empty());
}

TEST(Cli, HelpExitsZero) {
  const Invocation r = invoke({"--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("certify"), std::string::npos);
}

TEST(Cli, CsvHeaders) {
  EXPECT_EQ(first_line(invoke({"eval", "--nr", "2", "--ntheta", "2"}).out), "re,im,re_g,im_g");
  EXPECT_EQ(first_line(invoke({"invert", "--n", "2", "--nr", "2", "--ntheta", "2"}).out),
            "w_re,w_im,z_re,z_im,residual,steps");
  EXPECT_EQ(first_line(invoke({"phi", "--nr", "2", "--ntheta", "2"}).out), "re,im,phi_re,phi_im");
  EXPECT_EQ(first_line(invoke({"density", "--nx", "5"}).out), "x,value");
  EXPECT_EQ(first_line(invoke({"converge", "--n-list", "1,2", "--nx", "101"}).out), "n,sup_distance");
}

TEST(Cli, EvalRowCount) {
  const Invocation r = invoke({"eval", "--n", "3", "--nr", "3", "--ntheta", "4"});
  EXPECT_EQ(r.code, cli::kExitOk);
  // Full-plane grid: nr radii times 2 * ntheta angles, plus header.
  const auto lines = std::count(r.out.begin(), r.out.end(), '\n');
  EXPECT_GE(lines, 1 + 3 * 4);
}

TEST(Cli, CertifyJsonVerdict) {
  const Invocation r = invoke({"certify", "--n", "2", "--nr", "8", "--ntheta", "8"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_EQ(j.at("n"), 2);
}

TEST(Cli, CertifyRejectsNegativeTolerance) {
  const Invocation r = invoke({"certify", "--n", "1", "--nr", "4", "--ntheta", "4", "--tol", "-1"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, CertifyCsvListsEveryPoint) {
  const Invocation r = invoke({"certify", "--n", "1", "--nr", "3", "--ntheta", "5", "--format", "csv"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(first_line(r.out), "re,im,im_phi");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 16);
}

TEST(Cli, IdentitiesAndBetaCheckPass) {
  const Invocation id = invoke({"identities", "--n", "2"});
  EXPECT_EQ(id.code, cli::kExitOk) << id.out << id.err;
  EXPECT_EQ(id.out.find("fail"), std::string::npos);
  const Invocation beta = invoke({"beta-check", "--n", "4", "--format", "json"});
  EXPECT_EQ(beta.code, cli::kExitOk);
  const auto j = nlohmann::json::parse(beta.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 3u);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"phi", "--n", "3", "--nr", "5", "--ntheta", "6"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> cert{"certify", "--n", "4", "--nr", "6", "--ntheta", "6"};
  EXPECT_EQ(invoke(cert).out, invoke(cert).out);
}

TEST(Cli, WritesFileAtomically) {
  const fs::path dir = fs::temp_directory_path() / "ultrafid_cli_test";
  fs::create_directories(dir);
  const fs::path target = dir / "density.csv";
  const Invocation r = invoke({"density", "--n", "2", "--nx", "11", "--out", target.string()});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(target));
  EXPECT_FALSE(fs::exists(target.string() + ".tmp"));
  const std::string text = slurp(target);
  EXPECT_EQ(first_line(text), "x,value");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 12);
  fs::remove_all(dir);
}

TEST(Cli, UnwritableOutputFails) {
  const Invocation r = invoke({"density", "--nx", "5", "--out", "/nonexistent-dir/x.csv"});
  EXPECT_EQ(r.code, cli::kExitFailed);
}
