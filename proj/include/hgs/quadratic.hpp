#pragma once

// Discriminant profiles, condition primes and the equidistribution harness
// for roots of quadratic congruences.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgs/asymmetry.hpp"
#include "hgs/hyperseq.hpp"
#include "hgs/parallel.hpp"

namespace hgs {

struct DiscriminantProfile {
  /// distinct square-free parts, increasing
  std::vector<Integer> discs;
  /// Coordinate labels: -1 (present only when some element is negative) and
  /// the primes dividing some element, increasing.
  std::vector<Integer> support;
  /// vectors[i][j] = 1 iff support[j] divides discs[i] (for -1: discs[i] < 0)
  std::vector<std::vector<std::uint8_t>> vectors;

  bool has_negative() const { return !support.empty() && support.front() == -1; }
  /// Index of delta in discs; throws InvalidArgument if absent.
  std::size_t index_of(const Integer& delta) const;
};

/// Builds the profile of an explicit set of square-free integers.
DiscriminantProfile make_profile(std::vector<Integer> discs);

/// Square-free parts of the discriminants of the irreducible quadratic factors
/// of f*g. Throws UnsupportedFactorization on an unsplit factor of degree >= 3.
DiscriminantProfile discriminant_profile(const RatPoly& f, const RatPoly& g);
DiscriminantProfile discriminant_profile(const HypergeomSeq& seq);

/// eps in GF(2)^r with <v(delta), eps> = 0 and <v(D'), eps> = 1 for every other
/// D' of the profile. Exhaustive (smallest eps read as a binary number, bit j =
/// coordinate j) when r <= 20, Gaussian elimination above.
std::optional<std::vector<std::uint8_t>> exists_condition_prime(const DiscriminantProfile& profile,
                                                                const Integer& delta);

/// Smallest odd prime p <= p_max coprime to every element, with (delta/p) = 1
/// and (D'/p) = -1 for the others.
std::optional<Prime> find_condition_prime(const DiscriminantProfile& profile, const Integer& delta, Prime p_max);

/// rep(r + sign * s * D) with D = sqrt_mod(delta, p).
std::uint64_t rep_quadratic(const Rational& r, const Rational& s, const Integer& delta, Prime p, int sign);

struct Bin {
  double left = 0.0;
  double right = 0.0;
  double frequency = 0.0;
};

struct EquidistributionReport {
  Integer delta;
  std::uint64_t q = 1;
  std::uint64_t a = 0;
  std::uint64_t p_limit = 0;
  std::size_t primes_used = 0;
  /// p = 2, p | delta, or p dividing a denominator of r or s
  std::size_t skipped = 0;
  std::size_t samples = 0;
  std::vector<Bin> bins;
  double star_discrepancy = 0.0;
};

/// Both signs pooled. Throws InvalidArgument for s = 0, bin_count < 2 or delta
/// not a positive square-free integer; EmptySampleSet when nothing qualifies.
EquidistributionReport equidistribution_sample(const Integer& delta, std::uint64_t q, std::uint64_t a,
                                               const Rational& r, const Rational& s, std::uint64_t p_limit,
                                               unsigned bin_count, Exec exec = Exec::parallel);

/// Star discrepancy of points in [0, 1); sorts its argument.
double star_discrepancy(std::vector<double>& points);

struct WindowCount {
  /// qualifying primes with rep/p in [alpha, beta) for either sign
  std::size_t count = 0;
  /// all qualifying primes in the window
  std::size_t qualifying = 0;
};

/// Primes N <= p < (1 + window_delta) N with p = a (mod q) and (delta/p) = 1.
WindowCount window_count(const Integer& delta, std::uint64_t q, std::uint64_t a, const Rational& r,
                         const Rational& s, std::uint64_t N, double window_delta, double alpha, double beta);

/// Non-rational with every square-free discriminant part inside
/// {D1, D2, D1*D2} for square-free D1, D2 whose product is square-free.
ClassVerdict class_c_check(const HypergeomSeq& seq);
ClassVerdict class_c_check(const RatPoly& f, const RatPoly& g);
ClassVerdict class_c_check(const DiscriminantProfile& profile);

}  // namespace hgs
