#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hgs/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hgs::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& s) {
  const auto end = s.find_last_not_of('\n');
  const auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST(Cli, MembershipFactorial) {
  const Result r = run({"membership", "--f", "1", "--g", "x", "--u0", "1", "--target", "120"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("Yes(5)\n", 0), 0u) << r.out;
  const Result no = run({"membership", "--f", "1", "--g", "x", "--target", "100", "--format", "csv"});
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(no.out.rfind("# hgs membership v1\noutcome,witness,bound_n0,p,terms_checked,seconds\nno,", 0), 0u)
      << no.out;
}

TEST(Cli, AsymmetrySymmetricPair) {
  const Result r = run({"asymmetry", "--f", "(x^4-10*x^2+1)*x^2", "--g", "(x^2-2)*(x^2-3)*(x^2-6)", "--pmax", "10000"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("no asymmetric prime"), std::string::npos);
  EXPECT_NE(r.out.find("0 asymmetric"), std::string::npos);
  const Result a = run({"asymmetry", "--f", "x^2-2", "--g", "x^2-3"});
  EXPECT_NE(a.out.find("p = 7"), std::string::npos);
}

TEST(Cli, Terms) {
  const Result r = run({"terms", "--f", "x+2", "--g", "x+1", "--u0", "1", "--n", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "u_10 = 1/6");
  const Result csv = run({"--format", "csv", "terms", "--f", "x+2", "--g", "x+1", "--n", "10"});
  EXPECT_EQ(last_line(csv.out), "10,1/6");
  EXPECT_EQ(csv.out.rfind("# hgs terms v1\nn,u_n\n", 0), 0u);
}

TEST(Cli, HeightValuationAndDeterminism) {
  const std::vector<std::string> args = {"height", "--f", "x^2-2*x-1", "--g", "x^2-3", "--nmax", "200",
                                         "--stride", "50", "--p", "7", "--format", "csv", "--threads", "3"};
  const Result a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("# hgs height v1\nn,height_float,valuation_p\n0,", 0), 0u) << a.out;
  EXPECT_NE(a.out.find("\n200,"), std::string::npos);
  const Result v = run({"valuation", "--f", "1", "--g", "x", "--p", "2", "--nmax", "8", "--format", "csv"});
  EXPECT_EQ(last_line(v.out), "8,7");
}

TEST(Cli, ValidateRegularizeClassifyEquidistPadic) {
  Result r = run({"validate", "--f", "x+3", "--g", "x-4"});
  EXPECT_NE(r.out.find("g_positive_integer_roots = 4"), std::string::npos);
  r = run({"regularize", "--f", "x+2", "--g", "x+1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("f~ = 1\ng~ = 1\n"), std::string::npos) << r.out;
  r = run({"classify", "--f", "x^2-2*x-1", "--g", "x^2-3"});
  EXPECT_NE(r.out.find("class_C = true"), std::string::npos);
  EXPECT_NE(r.out.find("class_D = true"), std::string::npos);
  EXPECT_NE(r.out.find("delta = 2: condition prime = 7"), std::string::npos) << r.out;
  r = run({"equidist", "--delta", "2", "--plimit", "5000", "--bins", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# hgs equidist v1\nbin_left,bin_right,frequency\n", 0), 0u);
  r = run({"padic", "--poly", "x^2-2", "--p", "7", "--root", "3", "--k", "2"});
  EXPECT_NE(r.out.find("value = 10"), std::string::npos);
  r = run({"padic", "--f", "x^2-2", "--g", "x^2-3", "--p", "23", "--s", "1"});
  EXPECT_NE(r.out.find("direct = "), std::string::npos);
}

TEST(Cli, SpecFile) {
  const std::string path = ::testing::TempDir() + "/hgs_cli_spec.txt";
  {
    std::ofstream out(path);
    out << "f = 1; g = x\nf = x+2; g = x+1; u0 = 4\n";
  }
  const Result r = run({"terms", "--spec", path, "--index", "1", "--n", "2"});
  EXPECT_EQ(last_line(r.out), "u_2 = 2");
  EXPECT_EQ(run({"terms", "--spec", path, "--index", "5"}).code, 1);
}

TEST(Cli, ExitCodes) {
  Result r = run({"terms", "--f", "x", "--g", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: InvalidF: ", 0), 0u) << r.err;
  r = run({"terms", "--f", "x+", "--g", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: ParseError: at position", 0), 0u) << r.err;
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"terms", "--f", "1"}).code, 2);
  EXPECT_EQ(run({"valuation", "--f", "1", "--g", "x"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "terms", "--f", "1", "--g", "x"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"regularize", "--f", "1", "--g", "x^3-2"}).code, 1);
}
