#pragma once

#include <random>
#include <string>
#include <vector>

#include "hgs/hyperseq.hpp"
#include "hgs/parse.hpp"

namespace hgs::testing {

std::vector<SequenceSpec> corpus_specs();
std::vector<HypergeomSeq> corpus();

Integer random_integer(std::mt19937_64& rng, long lo, long hi);
Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound);
/// Random rational with numerator and denominator up to ~2^bits.
Rational random_big_rational(std::mt19937_64& rng, unsigned bits);
RatPoly random_poly(std::mt19937_64& rng, int degree, long coeff_bound);
/// Random valid sequence (f without nonnegative integer roots).
HypergeomSeq random_sequence(std::mt19937_64& rng, int max_degree = 2);

// Oracles independent of the library code paths.
long legendre_sum_of_digits_valuation(Index n, Prime p);
int brute_force_roots(const RatPoly& f, Prime p);
int brute_force_legendre(long a, Prime p);
bool trial_division_prime(std::uint64_t n);

}  // namespace hgs::testing
