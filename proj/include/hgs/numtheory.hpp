#pragma once

// Exact integer/rational primitives and elementary number theory.

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hgs {

using Integer = mpz_class;
/// Always canonical: gmp keeps num/den coprime with den > 0 after every
/// arithmetic operation, and zero is 0/1.
using Rational = mpq_class;
using Prime = std::uint64_t;
using Index = std::uint64_t;

// ---------------------------------------------------------------------------
// Word-size modular arithmetic
// ---------------------------------------------------------------------------

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Non-negative residue of an arbitrary integer.
inline std::uint64_t residue(const Integer& a, std::uint64_t m) {
  return mpz_fdiv_ui(a.get_mpz_t(), m);
}

Integer to_integer(std::uint64_t v);

// ---------------------------------------------------------------------------
// Primality and primes
// ---------------------------------------------------------------------------

/// Deterministic Miller-Rabin over a witness set valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Probabilistic above 64 bits (error below 2^-128), exact below.
bool is_prime(const Integer& n);

/// Sieve of Eratosthenes; all primes <= limit in increasing order.
std::vector<Prime> primes_up_to(std::uint64_t limit);

/// All primes p <= limit with p = a (mod q), increasing.
std::vector<Prime> primes_in_progression(std::uint64_t a, std::uint64_t q, std::uint64_t limit);

/// Unbounded stream of primes p = a (mod q). If gcd(a, q) > 1 the only
/// possible member is a itself, so the stream has at most one element.
class PrimeIterator {
 public:
  PrimeIterator(std::uint64_t a, std::uint64_t q);

  std::optional<Prime> next();

  std::uint64_t modulus() const { return q_; }
  std::uint64_t residue_class() const { return a_; }

 private:
  std::uint64_t a_;
  std::uint64_t q_;
  std::uint64_t current_;
  bool coprime_;
  bool exhausted_ = false;
};

// ---------------------------------------------------------------------------
// Legendre symbols and square roots
// ---------------------------------------------------------------------------

/// Legendre symbol (a/p) by quadratic reciprocity. Throws NotOddPrime.
int legendre(const Integer& a, Prime p);
int legendre(std::int64_t a, Prime p);

/// D with D^2 = a (mod p) and 0 <= D < p/2, by Tonelli-Shanks.
/// Throws NonResidue if a is zero or a non-residue mod p.
std::uint64_t sqrt_mod(const Integer& a, Prime p);

/// The representative in {0, ..., p-1} of a p-integral rational.
/// Throws BadPrime when p divides the denominator.
std::uint64_t rep(const Rational& r, Prime p);

// ---------------------------------------------------------------------------
// Factorization, square-free parts
// ---------------------------------------------------------------------------

/// Prime factorization of |n| (n != 0) as (prime, exponent), primes increasing.
/// Trial division followed by Pollard-Brent rho.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// All positive divisors of |n|, n != 0, increasing.
std::vector<Integer> divisors(const Integer& n);

/// The unique square-free integer d with r = q^2 d for rational q; 1 for r = 0.
Integer squarefree_part(const Rational& r);

bool is_squarefree(const Integer& n);

// ---------------------------------------------------------------------------
// Heights and valuations
// ---------------------------------------------------------------------------

/// max(log|a|, log|b|) for reduced a/b; 0 for r = 0.
double weil_height(const Rational& r);

/// max(|a|, |b|) for reduced a/b; the exponential of weil_height, kept exact.
Integer weil_height_exact(const Rational& r);

/// Natural log of |n| for arbitrarily large n != 0.
double log_abs(const Integer& n);

/// p-adic valuation with a distinguished infinity for zero.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(long v) : value_(v) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Precondition: finite.
  long value() const;

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  long value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Exponent of p in a nonzero integer.
unsigned long valuation(const Integer& n, Prime p);

Valuation padic_valuation(const Rational& r, Prime p);

}  // namespace hgs
