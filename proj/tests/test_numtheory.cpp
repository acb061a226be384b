#include <gtest/gtest.h>

#include <cmath>

#include "hgs/errors.hpp"
#include "hgs/numtheory.hpp"
#include "support.hpp"

using namespace hgs;
using namespace hgs::testing;

TEST(Primality, SmallValues) {
  EXPECT_TRUE(is_prime(std::uint64_t{2}));
  EXPECT_FALSE(is_prime(std::uint64_t{1}));
  EXPECT_FALSE(is_prime(std::uint64_t{0}));
  EXPECT_FALSE(is_prime(std::uint64_t{561}));
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), trial_division_prime(n)) << n;
}

TEST(Primality, LargeValues) {
  EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ull}));
  EXPECT_FALSE(is_prime(std::uint64_t{3215031751ull}));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));
  EXPECT_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
}

TEST(Primes, Progressions) {
  EXPECT_EQ(primes_in_progression(1, 4, 30), (std::vector<Prime>{5, 13, 17, 29}));
  EXPECT_EQ(primes_in_progression(0, 1, 10), (std::vector<Prime>{2, 3, 5, 7}));
  EXPECT_EQ(primes_in_progression(2, 4, 100), (std::vector<Prime>{2}));
  for (std::uint64_t q : {3, 8, 10}) {
    for (std::uint64_t a = 0; a < q; ++a) {
      std::vector<Prime> oracle;
      for (std::uint64_t n = 0; n <= 2000; ++n)
        if (n % q == a && trial_division_prime(n)) oracle.push_back(n);
      EXPECT_EQ(primes_in_progression(a, q, 2000), oracle) << a << " mod " << q;
      PrimeIterator it(a, q);
      std::vector<Prime> streamed;
      while (auto p = it.next()) {
        if (*p > 2000) break;
        streamed.push_back(*p);
        if (streamed.size() > oracle.size()) break;
      }
      EXPECT_EQ(streamed, oracle);
    }
  }
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(2, 7), 1);
  EXPECT_EQ(legendre(3, 7), -1);
  EXPECT_EQ(legendre(14, 7), 0);
  EXPECT_THROW(legendre(3, 2), NotOddPrime);
  EXPECT_THROW(legendre(3, 9), NotOddPrime);
}

TEST(Legendre, MatchesSquareTableAndIsMultiplicative) {
  for (Prime p : primes_up_to(200)) {
    if (p == 2) continue;
    for (long a = -30; a <= 30; ++a) ASSERT_EQ(legendre(a, p), brute_force_legendre(a, p)) << a << " " << p;
    for (long a = 1; a < 20; ++a)
      for (long b = 1; b < 20; ++b)
        if ((a * b) % static_cast<long>(p) != 0) ASSERT_EQ(legendre(a * b, p), legendre(a, p) * legendre(b, p));
  }
}

TEST(SqrtMod, Examples) {
  EXPECT_EQ(sqrt_mod(Integer(2), 7), 3u);
  EXPECT_EQ(sqrt_mod(Integer(1), 5), 1u);
  EXPECT_EQ(sqrt_mod(Integer(2), 17), 6u);
  EXPECT_THROW(sqrt_mod(Integer(3), 7), NonResidue);
  EXPECT_THROW(sqrt_mod(Integer(7), 7), NonResidue);
}

TEST(SqrtMod, ExhaustiveUpTo1000) {
  for (Prime p : primes_up_to(1000)) {
    if (p == 2) continue;
    for (std::uint64_t a = 1; a < p; ++a) {
      if (legendre(static_cast<long>(a), p) != 1) continue;
      const std::uint64_t d = sqrt_mod(Integer(std::to_string(a)), p);
      ASSERT_EQ(d * d % p, a);
      ASSERT_LT(2 * d, p);
    }
  }
}

TEST(SquarefreePart, Examples) {
  EXPECT_EQ(squarefree_part(Rational(1, 8)), 2);
  EXPECT_EQ(squarefree_part(Rational(0)), 1);
  EXPECT_EQ(squarefree_part(Rational(-12)), -3);
  EXPECT_EQ(squarefree_part(Rational(9, 25)), 1);
  EXPECT_EQ(squarefree_part(Rational(-5, 12)), -15);
}

TEST(SquarefreePart, Reconstruction) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational r = random_rational(rng, 100000, 100000);
    if (r == 0) continue;
    const Integer d = squarefree_part(r);
    ASSERT_TRUE(is_squarefree(d));
    Rational q2 = r / Rational(d);
    ASSERT_GT(q2, 0);
    Integer n = q2.get_num(), m = q2.get_den();
    ASSERT_TRUE(mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(m.get_mpz_t())) << r.get_str();
  }
}

TEST(Height, Examples) {
  EXPECT_DOUBLE_EQ(weil_height(Rational(3, 2)), std::log(3.0));
  Rational r(6, 4);
  r.canonicalize();
  EXPECT_DOUBLE_EQ(weil_height(r), std::log(3.0));
  EXPECT_EQ(weil_height(Rational(0)), 0.0);
  for (unsigned n = 1; n < 200; ++n) {
    Integer two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, n);
    EXPECT_NEAR(weil_height(Rational(two)), n * std::log(2.0), 1e-9 * n);
  }
}

TEST(Height, Properties) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = random_big_rational(rng, 40);
    const Rational b = random_big_rational(rng, 40);
    // h(ab) <= h(a) + h(b)
    ASSERT_LE(weil_height_exact(a * b), weil_height_exact(a) * weil_height_exact(b));
    // h(a^m) = |m| h(a)
    const unsigned m = 1 + rng() % 6;
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), a.get_num().get_mpz_t(), m);
    mpz_pow_ui(den.get_mpz_t(), a.get_den().get_mpz_t(), m);
    Integer hm;
    mpz_pow_ui(hm.get_mpz_t(), weil_height_exact(a).get_mpz_t(), m);
    Rational am(num, den), inv(den, num);
    am.canonicalize();
    inv.canonicalize();
    ASSERT_EQ(weil_height_exact(am), hm);
    ASSERT_EQ(weil_height_exact(inv), hm);
    // 2 h(a) >= sum_p |nu_p(a)| log p, against the full factorisation
    Integer prod = 1;
    for (const Integer& part : {a.get_num(), a.get_den()}) {
      for (const auto& [q, e] : factor_integer(abs(part))) {
        Integer qe;
        mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), e);
        prod *= qe;
        ASSERT_EQ(padic_valuation(a, q.get_ui()).value(), part == a.get_num() ? long(e) : -long(e));
      }
    }
    const Integer h = weil_height_exact(a);
    ASSERT_GE(h * h, prod);
    ASSERT_NEAR(2 * weil_height(a), 2 * log_abs(h), 1e-9);
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(padic_valuation(Rational(8), 2).value(), 3);
  EXPECT_EQ(padic_valuation(Rational(3, 4), 2).value(), -2);
  EXPECT_TRUE(padic_valuation(Rational(0), 5).is_infinite());
  EXPECT_EQ(padic_valuation(Rational(7, 5), 3).value(), 0);
  EXPECT_TRUE(Valuation::infinity() == Valuation::infinity());
  EXPECT_FALSE(Valuation(3) == Valuation::infinity());
}

TEST(Factor, IntegerFactorisation) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Integer n = random_integer(rng, 2, 1'000'000'000) * random_integer(rng, 1, 1'000'000);
    Integer back = 1;
    for (const auto& [q, e] : factor_integer(n)) {
      ASSERT_TRUE(is_prime(q));
      for (unsigned k = 0; k < e; ++k) back *= q;
    }
    ASSERT_EQ(back, n);
  }
}
