#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "hgs/errors.hpp"
#include "hgs/parse.hpp"
#include "support.hpp"

using namespace hgs;
using namespace hgs::testing;

TEST(ParsePoly, Examples) {
  EXPECT_EQ(parse_poly("(x^2-2)*(x^2-3)"), RatPoly({6, 0, -5, 0, 1}));
  EXPECT_EQ(parse_poly("x"), RatPoly::x());
  const RatPoly r = parse_poly("1/2*x + 1/3");
  EXPECT_EQ(r.coeff(1), Rational(1, 2));
  EXPECT_EQ(r.coeff(0), Rational(1, 3));
  EXPECT_EQ(parse_poly("-3"), RatPoly::constant(-3));
  EXPECT_EQ(parse_poly("5/2"), RatPoly::constant(Rational(5, 2)));
  EXPECT_EQ(parse_poly("-x^2"), RatPoly({0, 0, -1}));
  EXPECT_EQ(parse_poly("2*x^3 - (x+1)^2"), RatPoly({-1, -2, -1, 2}));
}

TEST(ParsePoly, Errors) {
  for (const char* bad : {"", "x +", "(x+1", "x^y", "x^-1", "2 3", "y", "x/(x+1)", "x^5000", "1/0"}) {
    EXPECT_THROW(parse_poly(bad), ParseError) << bad;
  }
  try {
    parse_poly("x + * 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos) << e.what();
  }
}

TEST(ParsePoly, RoundTripFuzz) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 2000; ++i) {
    std::vector<Rational> c;
    const int deg = rng() % 7;
    for (int k = 0; k <= deg; ++k) c.push_back(random_rational(rng, 50, (rng() % 3 == 0) ? 9 : 1));
    const RatPoly p{c};
    const std::string text = p.to_string();
    ASSERT_EQ(parse_poly(text), p) << text;
    ASSERT_EQ(parse_poly(text).to_string(), text);
  }
}

TEST(ParseRational, Examples) {
  EXPECT_EQ(parse_rational("3/5"), Rational(3, 5));
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("a"), ParseError);
  EXPECT_THROW(parse_rational("1/2/3"), ParseError);
}

TEST(SequenceSpec, ParseFormatAndFile) {
  const SequenceSpec s = parse_sequence_spec("f = x + 2; g = x+1; u0 = 3/4");
  EXPECT_EQ(s.f, parse_poly("x+2"));
  EXPECT_EQ(s.g, parse_poly("x+1"));
  EXPECT_EQ(s.u0, Rational(3, 4));
  EXPECT_EQ(parse_sequence_spec("g = x; f = 1").u0, 1);
  EXPECT_THROW(parse_sequence_spec("f = x"), ParseError);
  EXPECT_THROW(parse_sequence_spec("f = x; g = 1; h = 2"), ParseError);

  const HypergeomSeq seq = make_sequence(s.f, s.g, s.u0);
  const SequenceSpec back = parse_sequence_spec(format_sequence_spec(seq));
  EXPECT_EQ(back.f, seq.f());
  EXPECT_EQ(back.g, seq.g());
  EXPECT_EQ(back.u0, seq.u0());

  const std::string path = ::testing::TempDir() + "/hgs_spec.txt";
  {
    std::ofstream out(path);
    out << "# comment\n\nf = 1; g = x\n  f = x^2-2; g = x^2-3; u0 = 2\n";
  }
  const auto all = parse_spec_file(path);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[1].u0, 2);
  std::remove(path.c_str());
  EXPECT_THROW(parse_spec_file("/nonexistent/spec"), InvalidArgument);
  EXPECT_EQ(corpus().size(), corpus_specs().size());
}
