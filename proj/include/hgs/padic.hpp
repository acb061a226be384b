#pragma once

// Polynomials over prime fields, root counting mod p, Hensel lifting and
// p-adic digit diagnostics.

#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include "hgs/numtheory.hpp"
#include "hgs/polyq.hpp"

namespace hgs {

class HypergeomSeq;

/// Polynomial over F_p with reduced coefficients; empty list is zero.
class ModPoly {
 public:
  explicit ModPoly(Prime p) : p_(p) {}
  ModPoly(Prime p, std::vector<std::uint64_t> coeffs);

  static ModPoly x(Prime p);

  Prime prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  std::uint64_t operator()(std::uint64_t at) const;

  ModPoly derivative() const;
  ModPoly monic() const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

 private:
  void trim();
  Prime p_;
  std::vector<std::uint64_t> c_;
};

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly poly_gcd(const ModPoly& a, const ModPoly& b);
/// base^e mod m
ModPoly pow_mod(const ModPoly& base, std::uint64_t e, const ModPoly& m);

/// Coefficientwise rep(). Throws BadPrime if p divides a denominator.
ModPoly reduce_mod_p(const RatPoly& f, Prime p);

/// Number of distinct roots of f in F_p: deg gcd(f mod p, x^p - x).
/// Throws InvalidArgument if f vanishes identically mod p.
int count_roots_mod_p(const RatPoly& f, Prime p);
int count_roots_mod_p(const ModPoly& f);

/// Roots counted with the multiplicities of f's square-free decomposition over
/// Q: sum_k k * count_roots_mod_p(s_k, p) for f = c * prod s_k^k. At primes
/// where the kernel of f stays square-free this equals the number of roots in
/// F_p counted with multiplicity.
int count_roots_with_multiplicity(const RatPoly& f, Prime p);
int count_roots_with_multiplicity(const std::vector<std::pair<RatPoly, unsigned>>& decomposition, Prime p);

/// Distinct roots of f mod p in increasing order (Cantor-Zassenhaus splitting).
std::vector<std::uint64_t> roots_mod_p(const ModPoly& f);

/// p divides no denominator and not the leading coefficient of f, and f is
/// square-free mod p.
bool is_hensel_prime(const RatPoly& f, Prime p);

/// Hensel prime for the pair (f, g): p divides neither numerator nor
/// denominator of the leading coefficients of f and g, and the square-free
/// kernel of f*g is p-integral and square-free mod p. For square-free f*g this
/// is is_hensel_prime(f*g, p); repeated global factors (such as x^2) are
/// allowed and counted with multiplicity.
bool is_hensel_prime_for_pair(const RatPoly& f, const RatPoly& g, Prime p);

/// A root of a polynomial in Z_p known to precision p^k.
class PadicRoot {
 public:
  PadicRoot(std::shared_ptr<const RatPoly> source, Prime p, unsigned precision, Integer value);

  Prime prime() const { return p_; }
  unsigned precision() const { return precision_; }
  const Integer& value() const { return value_; }
  /// Least significant first, exactly precision() digits.
  const std::vector<std::uint64_t>& digits() const { return digits_; }
  const RatPoly& source() const { return *source_; }
  std::shared_ptr<const RatPoly> source_ptr() const { return source_; }

  /// The same root lifted to a higher precision (a new value).
  PadicRoot extended(unsigned precision) const;

 private:
  std::shared_ptr<const RatPoly> source_;
  Prime p_;
  unsigned precision_;
  Integer value_;
  std::vector<std::uint64_t> digits_;
};

/// Newton lift of a simple root r0 of f mod p to precision p^k.
/// Throws NotSimpleRoot when f'(r0) = 0 mod p, InvalidArgument when
/// f(r0) != 0 mod p, BadPrime on denominators divisible by p.
PadicRoot hensel_lift(const RatPoly& f, Prime p, const Integer& r0, unsigned k);

constexpr unsigned kDefaultPrecisionCap = 1u << 14;

/// Length of the run of zero digits starting at index s. Lifts further
/// (precision doubling) while the run reaches the known precision; throws
/// PrecisionExhausted past `cap` digits.
unsigned zero_run_length(const PadicRoot& root, unsigned s, unsigned cap = kDefaultPrecisionCap);

/// Empirical frequencies of every length-`pattern_length` digit pattern over
/// all windows of the available digits. Index sum_k w_k p^k for pattern w.
std::vector<double> digit_frequency(const PadicRoot& root, unsigned pattern_length);

/// Digits as text: least significant first, one per token, space separated.
void write_digits(std::ostream& os, const PadicRoot& root);

struct PrimePowerValuation {
  long direct = 0;
  long digit_formula = 0;
};

/// nu_p(u_{p^s}) computed by direct summation and by the zero-run digit
/// formula over the p-adic roots of f and g. Requires p to be a Hensel prime
/// for the pair, equal weighted root counts and nu_p(u_0) = 0.
PrimePowerValuation valuation_at_prime_power(const HypergeomSeq& seq, Prime p, unsigned s,
                                             unsigned cap = kDefaultPrecisionCap);

/// Same, adding nu_p(u_0) to the digit side instead of requiring it to vanish.
PrimePowerValuation valuation_at_prime_power_general(const HypergeomSeq& seq, Prime p, unsigned s,
                                                     unsigned cap = kDefaultPrecisionCap);

}  // namespace hgs
