#include <gtest/gtest.h>

#include <cmath>

#include "hgs/errors.hpp"
#include "hgs/hyperseq.hpp"
#include "hgs/parse.hpp"
#include "support.hpp"

using namespace hgs;
using namespace hgs::testing;

namespace {
RatPoly P(const char* s) { return parse_poly(s); }

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Rational naive_term(const RatPoly& f, const RatPoly& g, const Rational& u0, Index n) {
  Rational u = u0;
  for (Index m = 1; m <= n; ++m) u = u * g(Rational(Integer(std::to_string(m)))) / f(Rational(Integer(std::to_string(m))));
  return u;
}
}  // namespace

TEST(MakeSequence, Examples) {
  const HypergeomSeq fact = make_sequence(P("1"), P("x"), 1);
  EXPECT_FALSE(fact.flags().degenerate());
  try {
    make_sequence(P("x-2"), P("x+1"), 1);
    FAIL();
  } catch (const InvalidF& e) {
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos);
  }
  const RatPoly f = P("(x+1)*(x^2-2)"), g = P("(x+1)*(x^2-3)");
  const HypergeomSeq s = make_sequence(f, g, 1);
  EXPECT_EQ(s.f(), P("x^2-2"));
  EXPECT_EQ(s.g(), P("x^2-3"));
  EXPECT_TRUE(s.flags().common_factor_removed);
  for (Index n = 0; n <= 20; ++n) EXPECT_EQ(term(s, n), naive_term(f, g, 1, n));
  EXPECT_THROW(make_sequence(RatPoly(), P("x"), 1), InvalidArgument);
  // a common factor with a nonnegative integer root is divided out first
  EXPECT_NO_THROW(make_sequence(P("x*(x^2-2)"), P("x*(x+1)"), 1));

  const HypergeomSeq deg = make_sequence(P("x+3"), P("x-4"), 1);
  EXPECT_TRUE(deg.flags().degenerate());
  EXPECT_EQ(deg.flags().g_positive_integer_roots, (std::vector<Integer>{4}));
  EXPECT_TRUE(make_sequence(P("1"), P("x"), 0).flags().zero_initial);
}

TEST(Term, Examples) {
  EXPECT_EQ(term(make_sequence(P("1"), P("x"), 1), 5), 120);
  EXPECT_EQ(term(make_sequence(P("x+2"), P("x+1"), 1), 10), Rational(1, 6));
  for (const auto& seq : corpus()) EXPECT_EQ(term(seq, 0), seq.u0());
}

TEST(Term, CursorMatchesScratchAndCheckpoints) {
  std::mt19937_64 rng(51);
  for (const auto& seq : corpus()) {
    TermCursor c(seq);
    for (Index n = 1; n <= 120; ++n) {
      c.advance();
      if (rng() % 10 == 0) {
        ASSERT_EQ(c.value(), term(seq, n));
        TermCursor resumed(seq, n, c.value());
        resumed.advance_to(n + 7);
        ASSERT_EQ(resumed.value(), term(seq, n + 7));
      }
    }
    ASSERT_EQ(c.value(), naive_term(seq.f(), seq.g(), seq.u0(), 120));
  }
}

TEST(TermValuation, Examples) {
  const HypergeomSeq fact = make_sequence(P("1"), P("x"), 1);
  EXPECT_EQ(term_valuation(fact, 8, 2).value(), 7);
  for (unsigned k = 0; k < 20; ++k) EXPECT_EQ(term_valuation(fact, Index(1) << k, 2).value(), (1L << k) - 1);
  EXPECT_TRUE(term_valuation(make_sequence(P("1"), P("x"), 0), 5, 3).is_infinite());
  EXPECT_TRUE(term_valuation(make_sequence(P("1"), P("x-2"), 1), 5, 3).is_infinite());
  EXPECT_EQ(term_valuation(make_sequence(P("1"), P("x-2"), 1), 1, 3).value(), 0);
}

TEST(TermValuation, MatchesExactTermsOnCorpus) {
  std::vector<HypergeomSeq> seqs = corpus();
  std::mt19937_64 rng(52);
  for (int i = 0; i < 10; ++i) seqs.push_back(random_sequence(rng));
  const auto primes = primes_up_to(50);
  for (const auto& seq : seqs) {
    std::vector<std::vector<Valuation>> profiles;
    for (Prime p : primes) profiles.push_back(valuation_profile(seq, p, 500));
    TermCursor c(seq);
    for (Index n = 0; n <= 500; ++n) {
      if (n > 0) c.advance();
      for (std::size_t k = 0; k < primes.size(); ++k) {
        ASSERT_EQ(profiles[k][n], padic_valuation(c.value(), primes[k])) << format_sequence_spec(seq) << " n=" << n;
      }
    }
    for (Prime p : {2, 7, 47}) ASSERT_EQ(term_valuation(seq, 333, p), padic_valuation(term(seq, 333), p));
  }
}

TEST(TermValuation, SerialAndParallelProfilesAgree) {
  set_thread_count(4);
  for (const auto& seq : corpus()) {
    for (Prime p : {2, 3, 23}) {
      EXPECT_EQ(valuation_profile(seq, p, 3000, Exec::serial), valuation_profile(seq, p, 3000, Exec::parallel));
    }
  }
  set_thread_count(0);
}

TEST(Regularize, TelescopingExample) {
  const HypergeomSeq seq = make_sequence(P("x+2"), P("x+1"), 1);
  const RegularizationResult r = regularize(seq);
  EXPECT_EQ(r.regular_seq.f(), P("1"));
  EXPECT_EQ(r.regular_seq.g(), P("1"));
  ASSERT_EQ(r.shift_classes.size(), 1u);
  EXPECT_EQ(r.shift_classes[0].gamma, 0);
  for (Index n = 0; n <= 100; ++n) {
    EXPECT_EQ(r.correction(n), frac(2, n + 2));
    EXPECT_EQ(r.correction.expand()(Rational(n)), frac(2, n + 2));
  }
}

TEST(Regularize, RegularInputIsUnchanged) {
  const HypergeomSeq seq = make_sequence(P("x^2-2"), P("x^2-3"), 1);
  const RegularizationResult r = regularize(seq);
  EXPECT_TRUE(r.correction.is_one());
  EXPECT_EQ(r.regular_seq.f(), seq.f());
  EXPECT_EQ(r.regular_seq.g(), seq.g());
  EXPECT_TRUE(is_regular(seq));
}

TEST(Regularize, SingleClassOfThree) {
  const HypergeomSeq seq = make_sequence(P("(x+1)*(x+3)"), P("(x+2)^2"), 1);
  const RegularizationResult r = regularize(seq);
  ASSERT_EQ(r.shift_classes.size(), 1u);
  EXPECT_EQ(r.shift_classes[0].gamma, 0);
  EXPECT_EQ(r.regular_seq.f(), P("1"));
  EXPECT_EQ(r.regular_seq.g(), P("1"));
  for (Index n = 0; n <= 100; ++n) EXPECT_EQ(term(seq, n), r.correction(n) * term(r.regular_seq, n));
  EXPECT_FALSE(is_regular(seq));
}

TEST(Regularize, IdentityOnCorpus) {
  std::vector<HypergeomSeq> seqs = corpus();
  seqs.push_back(make_sequence(P("(x+1/2)*(x^2+2*x+3)"), P("(x+7/2)*(x^2+2)*(x^2-2*x+3)"), Rational(5, 3)));
  seqs.push_back(make_sequence(P("(x^2+1)^2*(x+4)"), P("((x+3)^2+1)*(x+1)"), 1));
  int regularized = 0;
  for (const auto& seq : seqs) {
    if (seq.flags().degenerate()) {
      if (seq.flags().g_has_positive_integer_root()) EXPECT_THROW(regularize(seq), DegenerateSequence);
      continue;
    }
    RegularizationResult r;
    try {
      r = regularize(seq);
    } catch (const UnsupportedFactorization&) {
      continue;
    }
    ++regularized;
    ASSERT_TRUE(is_regular(r.regular_seq)) << format_sequence_spec(seq);
    ASSERT_EQ(r.regular_seq.u0(), seq.u0());
    TermCursor a(seq), b(r.regular_seq);
    for (Index n = 0; n <= 200; ++n) {
      if (n > 0) {
        a.advance();
        b.advance();
      }
      ASSERT_EQ(a.value(), r.correction(n) * b.value()) << format_sequence_spec(seq) << " n=" << n;
    }
    const RationalFunction q = r.correction.expand();
    for (Index n = 0; n <= 20; ++n) ASSERT_EQ(q(Rational(n)), r.correction(n));
    ASSERT_TRUE(nonnegative_integer_roots(q.denom()).empty());
  }
  EXPECT_GT(regularized, 15);
}

TEST(Regularize, RejectsHigherDegreeFactors) {
  EXPECT_THROW(regularize(make_sequence(P("x^4-10*x^2+1"), P("x+1"), 1)), UnsupportedFactorization);
}

TEST(HeightProfile, Geometric) {
  const HypergeomSeq geo = make_sequence(P("1"), P("2"), 1);
  const HeightProfile prof = height_profile(geo, 300, 1, true);
  ASSERT_EQ(prof.samples.size(), 301u);
  for (const auto& s : prof.samples) {
    Integer two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, s.n);
    EXPECT_EQ(*s.exact, two);
    EXPECT_NEAR(s.height, s.n * std::log(2.0), 1e-9 * (s.n + 1));
  }
  EXPECT_NEAR(prof.growth_constant, std::log(2.0), 1e-12);
}

TEST(HeightProfile, RationalAndFactorial) {
  const HeightProfile r = height_profile(make_sequence(P("x+2"), P("x+1"), 1), 1000, 10);
  for (const auto& s : r.samples)
    if (s.n % 2 == 0) EXPECT_NEAR(s.height, std::log(double(s.n + 2) / 2), 1e-9);
  const HeightProfile fact = height_profile(make_sequence(P("1"), P("x"), 1), 2000, 100);
  for (const auto& s : fact.samples) {
    if (s.n < 2) continue;
    const double n = double(s.n);
    EXPECT_NEAR(s.height, std::lgamma(n + 1), 1e-6 * n);
    EXPECT_GE(s.height, n * std::log(n) - n);
    EXPECT_LE(s.height, n * std::log(n) - n + std::log(n) + 1);
  }
  EXPECT_EQ(fact.samples.back().n, 2000u);
}

TEST(HeightProfile, StrideAndParallelAgree) {
  set_thread_count(4);
  for (const auto& seq : corpus()) {
    const HeightProfile a = height_profile(seq, 777, 7, true, Exec::serial);
    const HeightProfile b = height_profile(seq, 777, 7, true, Exec::parallel);
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
      ASSERT_EQ(a.samples[i].n, b.samples[i].n);
      ASSERT_EQ(*a.samples[i].exact, *b.samples[i].exact);
      ASSERT_EQ(*a.samples[i].exact, weil_height_exact(term(seq, a.samples[i].n)));
    }
    EXPECT_EQ(a.samples.back().n, 777u);
    EXPECT_DOUBLE_EQ(a.growth_constant, b.growth_constant);
  }
  set_thread_count(0);
}

TEST(HeightProfile, SubadditiveAlongRecurrence) {
  for (const auto& seq : corpus()) {
    if (seq.flags().degenerate()) continue;
    TermCursor c(seq);
    for (Index n = 1; n <= 300; ++n) {
      const Integer before = weil_height_exact(c.value());
      c.advance();
      const Rational m(Integer(std::to_string(n)));
      const Integer bound = before * weil_height_exact(seq.g()(m)) * weil_height_exact(seq.f()(m));
      ASSERT_LE(weil_height_exact(c.value()), bound);
    }
  }
}
