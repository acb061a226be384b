#include <gtest/gtest.h>

#include "hgs/errors.hpp"
#include "hgs/membership.hpp"
#include "hgs/parse.hpp"
#include "support.hpp"

using namespace hgs;
using namespace hgs::testing;

namespace {
RatPoly P(const char* s) { return parse_poly(s); }
HypergeomSeq S(const char* f, const char* g, Rational u0 = 1) { return make_sequence(P(f), P(g), u0); }
using Outcome = MembershipVerdict::Outcome;
}  // namespace

TEST(Decide, FactorialExamples) {
  const HypergeomSeq fact = S("1", "x");
  MembershipVerdict v = decide(fact, 120);
  ASSERT_EQ(v.outcome, Outcome::yes);
  EXPECT_EQ(*v.witness, 5u);
  v = decide(fact, 100);
  ASSERT_EQ(v.outcome, Outcome::no);
  ASSERT_TRUE(v.certificate && v.bound_n0);
  EXPECT_NE(v.certificate->p, 2u);
  EXPECT_NE(v.certificate->p, 5u);
  v = decide(fact, 0);
  EXPECT_EQ(v.outcome, Outcome::no);
  v = decide(fact, 1);
  EXPECT_EQ(v.outcome, Outcome::yes);
  EXPECT_EQ(*v.witness, 0u);
  EXPECT_EQ(decide(fact, Rational(1, 2)).outcome, Outcome::no);
}

TEST(Decide, ZeroTarget) {
  EXPECT_EQ(*decide(S("x+3", "x-4"), 0).witness, 4u);
  EXPECT_EQ(*decide(S("1", "x", 0), 0).witness, 0u);
  EXPECT_EQ(decide(S("x^2-2", "x^2-3"), 0).outcome, Outcome::no);
}

TEST(Decide, DegenerateBranch) {
  const HypergeomSeq s = S("x+3", "x-4", 5);
  for (Index n = 0; n < 4; ++n) {
    const auto v = decide(s, term(s, n));
    ASSERT_EQ(v.outcome, Outcome::yes);
    EXPECT_EQ(term(s, *v.witness), term(s, n));
  }
  EXPECT_EQ(decide(s, 17).outcome, Outcome::no);
  EXPECT_EQ(decide(S("1", "x", 0), 3).outcome, Outcome::no);
  MembershipConfig tiny;
  tiny.term_cap = 2;
  EXPECT_EQ(decide(s, 17, tiny).outcome, Outcome::unsupported);
}

TEST(Decide, SymmetricEverywhereIsUnsupported) {
  // x^2 - 2 and x^2 - 8 have the same roots modulo every odd prime
  const auto v = decide(S("x^2-2", "x^2-8"), 5, {1000});
  EXPECT_EQ(v.outcome, Outcome::unsupported);
  EXPECT_NE(v.reason.find("no asymmetric prime"), std::string::npos);
}

TEST(Decide, PlantedWitnesses) {
  std::mt19937_64 rng(81);
  std::vector<HypergeomSeq> seqs = corpus();
  for (int i = 0; i < 8; ++i) seqs.push_back(random_sequence(rng));
  for (const auto& seq : seqs) {
    for (int k = 0; k < 4; ++k) {
      const Index n = rng() % 301;
      const Rational t = term(seq, n);
      const MembershipVerdict v = decide(seq, t);
      if (v.outcome == Outcome::unsupported) {
        EXPECT_FALSE(v.reason.empty());
        continue;
      }
      ASSERT_EQ(v.outcome, Outcome::yes) << format_sequence_spec(seq) << " n=" << n << " " << v.reason;
      ASSERT_EQ(term(seq, *v.witness), t);
      ASSERT_LE(*v.witness, n);
    }
  }
}

TEST(Decide, NoVerdictsSurviveBruteForce) {
  std::mt19937_64 rng(82);
  int nos = 0;
  for (const auto& seq : corpus()) {
    for (int k = 0; k < 3; ++k) {
      const Rational t = random_rational(rng, 400, 30);
      const MembershipVerdict v = decide(seq, t);
      if (v.outcome != Outcome::no || !v.bound_n0) continue;
      ++nos;
      TermCursor c(seq);
      for (Index n = 0; n < 2 * *v.bound_n0; ++n) {
        if (n > 0) c.advance();
        ASSERT_NE(c.value(), t) << format_sequence_spec(seq) << " n=" << n;
      }
    }
  }
  EXPECT_GT(nos, 20);
}

TEST(Decide, ForcedAlternativePrimes) {
  const HypergeomSeq s = S("x^2-2", "x^2-3", 1);
  ScanOptions opts;
  const auto certs = all_asymmetric_primes(s, 2, 200, opts);
  ASSERT_GT(certs.size(), 5u);
  for (Index n : {3u, 40u, 77u}) {
    const Rational t = term(s, n);
    for (const auto& c : certs) {
      MembershipConfig cfg;
      cfg.forced_prime = c.p;
      const auto v = decide(s, t, cfg);
      if (v.outcome == Outcome::unsupported) continue;  // p divides t
      ASSERT_EQ(v.outcome, Outcome::yes) << c.p;
      ASSERT_EQ(term(s, *v.witness), t);
    }
  }
  MembershipConfig bad;
  bad.forced_prime = 23;
  EXPECT_EQ(decide(s, Rational(5, 7), bad).outcome, Outcome::unsupported);
}

TEST(DecideBatch, PositionalAndParallel) {
  EXPECT_TRUE(decide_batch({}).empty());
  const HypergeomSeq fact = S("1", "x");
  std::vector<MembershipQuery> q = {{fact, 120}, {fact, 100}, {S("x^2-2", "x^2-8"), 3}, {fact, 5040}};
  MembershipConfig cfg;
  cfg.prime_cap = 500;
  set_thread_count(4);
  const auto par = decide_batch(q, cfg, Exec::parallel);
  const auto ser = decide_batch(q, cfg, Exec::serial);
  set_thread_count(0);
  ASSERT_EQ(par.size(), 4u);
  EXPECT_EQ(par[0].outcome, Outcome::yes);
  EXPECT_EQ(*par[0].witness, 5u);
  EXPECT_EQ(par[1].outcome, Outcome::no);
  EXPECT_EQ(par[2].outcome, Outcome::unsupported);
  EXPECT_EQ(*par[3].witness, 7u);
  for (std::size_t i = 0; i < q.size(); ++i) EXPECT_EQ(par[i].outcome_name(), ser[i].outcome_name());
}

TEST(Verdict, Format) {
  const auto v = decide(S("1", "x"), 100);
  const std::string text = format_verdict(v);
  EXPECT_EQ(text.rfind("verdict v1\noutcome = no\n", 0), 0u);
  EXPECT_NE(text.find("certificate v1"), std::string::npos);
  EXPECT_NE(text.find("bound_n0 = "), std::string::npos);
}
