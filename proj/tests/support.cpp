#include "support.hpp"

#include "hgs/padic.hpp"

namespace hgs::testing {

std::vector<SequenceSpec> corpus_specs() { return parse_spec_file(HGS_TEST_DATA "/corpus.txt"); }

std::vector<HypergeomSeq> corpus() {
  std::vector<HypergeomSeq> out;
  for (const auto& s : corpus_specs()) out.push_back(make_sequence(s.f, s.g, s.u0));
  return out;
}

Integer random_integer(std::mt19937_64& rng, long lo, long hi) {
  return Integer(std::uniform_int_distribution<long>(lo, hi)(rng));
}

Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  Rational r(random_integer(rng, -num_bound, num_bound), random_integer(rng, 1, den_bound));
  r.canonicalize();
  return r;
}

Rational random_big_rational(std::mt19937_64& rng, unsigned bits) {
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(static_cast<unsigned long>(rng()));
  Integer a = gen.get_z_bits(bits) + 1;
  Integer b = gen.get_z_bits(bits) + 1;
  if (rng() & 1) a = -a;
  Rational r(a, b);
  r.canonicalize();
  return r;
}

RatPoly random_poly(std::mt19937_64& rng, int degree, long coeff_bound) {
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(random_integer(rng, -coeff_bound, coeff_bound));
  Integer lead;
  do lead = random_integer(rng, -coeff_bound, coeff_bound);
  while (lead == 0);
  c.emplace_back(lead);
  return RatPoly(c);
}

HypergeomSeq random_sequence(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  while (true) {
    const RatPoly f = random_poly(rng, deg(rng), 6);
    const RatPoly g = random_poly(rng, deg(rng), 6);
    if (!nonnegative_integer_roots(f).empty() || !positive_integer_roots(g).empty()) continue;
    Rational u0 = random_rational(rng, 9, 9);
    if (u0 == 0) u0 = 1;
    return make_sequence(f, g, u0);
  }
}

long legendre_sum_of_digits_valuation(Index n, Prime p) {
  Index digits = 0;
  for (Index m = n; m > 0; m /= p) digits += m % p;
  return static_cast<long>((n - digits) / (p - 1));
}

int brute_force_roots(const RatPoly& f, Prime p) {
  int count = 0;
  for (Prime a = 0; a < p; ++a) {
    const Rational v = f(Rational(Integer(std::to_string(a))));
    if (mpz_divisible_ui_p(v.get_num().get_mpz_t(), p)) ++count;
  }
  return count;
}

int brute_force_legendre(long a, Prime p) {
  const long r = ((a % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
  if (r == 0) return 0;
  for (Prime x = 1; x < p; ++x)
    if (x * x % p == static_cast<Prime>(r)) return 1;
  return -1;
}

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace hgs::testing
