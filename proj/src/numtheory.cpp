#include "hgs/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hgs/errors.hpp"

namespace hgs {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  // extended Euclid on signed 128-bit to avoid overflow
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) throw InvalidArgument("inv_mod: argument not invertible");
  __int128 res = old_s % static_cast<__int128>(m);
  if (res < 0) res += m;
  return static_cast<std::uint64_t>(res);
}

Integer to_integer(std::uint64_t v) {
  Integer z;
  mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(v));
  return z;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // this witness set is deterministic below 3.3e24
  for (auto a : small) {
    if (!miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  // 65 rounds of Miller-Rabin: error < 4^-65
  return mpz_probab_prime_p(n.get_mpz_t(), 65) != 0;
}

std::vector<Prime> primes_up_to(std::uint64_t limit) {
  std::vector<Prime> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    if (i <= limit / i) {
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
  }
  return out;
}

std::vector<Prime> primes_in_progression(std::uint64_t a, std::uint64_t q, std::uint64_t limit) {
  if (q == 0) throw InvalidArgument("primes_in_progression: modulus must be >= 1");
  if (a >= q) throw InvalidArgument("primes_in_progression: residue must lie in [0, q)");
  std::vector<Prime> out;
  for (Prime p : primes_up_to(limit)) {
    if (p % q == a) out.push_back(p);
  }
  return out;
}

PrimeIterator::PrimeIterator(std::uint64_t a, std::uint64_t q) : a_(a), q_(q), current_(a) {
  if (q == 0) throw InvalidArgument("PrimeIterator: modulus must be >= 1");
  if (a >= q) throw InvalidArgument("PrimeIterator: residue must lie in [0, q)");
  coprime_ = std::gcd(a, q) == 1;
}

std::optional<Prime> PrimeIterator::next() {
  if (exhausted_) return std::nullopt;
  if (!coprime_) {
    // p = a (mod q) and gcd(p, q) > 1 forces p | q, hence p = a (or p = q when a = 0)
    exhausted_ = true;
    std::uint64_t candidate = a_ == 0 ? q_ : a_;
    if (is_prime(candidate) && candidate % q_ == a_) return candidate;
    return std::nullopt;
  }
  while (true) {
    std::uint64_t c = current_;
    current_ += q_;
    if (is_prime(c)) return c;
  }
}

// ---------------------------------------------------------------------------

namespace {

// Jacobi symbol (a/n) for odd n > 0
int jacobi(std::uint64_t a, std::uint64_t n) {
  a %= n;
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      std::uint64_t r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

void require_odd_prime(Prime p) {
  if (p == 2 || !is_prime(p)) throw NotOddPrime("expected an odd prime, got " + std::to_string(p));
}

}  // namespace

int legendre(const Integer& a, Prime p) {
  require_odd_prime(p);
  return jacobi(residue(a, p), p);
}

int legendre(std::int64_t a, Prime p) {
  return legendre(Integer(static_cast<long>(a)), p);
}

std::uint64_t sqrt_mod(const Integer& a_in, Prime p) {
  if (legendre(a_in, p) != 1) throw NonResidue("sqrt_mod: argument is not a nonzero quadratic residue");
  const std::uint64_t a = residue(a_in, p);
  std::uint64_t root;
  if ((p & 3) == 3) {
    root = pow_mod(a, (p + 1) / 4, p);
  } else {
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    std::uint64_t z = 2;
    while (jacobi(z, p) != -1) ++z;
    unsigned m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(a, q, p);
    root = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
      unsigned i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      std::uint64_t b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      root = mul_mod(root, b, p);
    }
  }
  if (2 * static_cast<unsigned __int128>(root) > p) root = p - root;
  return root;
}

std::uint64_t rep(const Rational& r, Prime p) {
  const std::uint64_t den = residue(r.get_den(), p);
  if (den == 0) throw BadPrime("rep: prime " + std::to_string(p) + " divides the denominator");
  return mul_mod(residue(r.get_num(), p), inv_mod(den, p), p);
}

// ---------------------------------------------------------------------------

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = seed % n, c = (seed * 7 + 1) % n, m = 128, g = 1, r = 1, q = 1;
  Integer x, ys;
  auto f = [&](const Integer& v) {
    Integer w = v * v + c;
    mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
    return w;
  };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = f(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Integer i = 0; i < m && i < r - k; ++i) {
        y = f(y);
        Integer diff = abs(x - y);
        q = q * diff % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  unsigned long seed = 2;
  Integer d = n;
  while (d == n) d = pollard_brent(n, seed++);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n_in) {
  if (n_in == 0) throw InvalidArgument("factor_integer: zero has no factorization");
  Integer n = abs(n_in);
  std::vector<Integer> primes;
  for (unsigned long d = 2; d < 10000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      primes.emplace_back(d);
      n /= d;
    }
  }
  if (n > 1) factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1u);
  }
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer squarefree_part(const Rational& r) {
  if (r == 0) return 1;
  Integer d = sgn(r) < 0 ? -1 : 1;
  // a/b = ab / b^2, so the square-free part of a/b is that of ab
  auto accumulate = [&](const Integer& v) {
    if (abs(v) == 1) return;
    for (const auto& [p, e] : factor_integer(v)) {
      if (e % 2 == 1) d *= p;
    }
  };
  accumulate(r.get_num());
  accumulate(r.get_den());
  return d;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  if (abs(n) == 1) return true;
  for (const auto& [p, e] : factor_integer(n)) {
    if (e > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

double log_abs(const Integer& n) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

Integer weil_height_exact(const Rational& r) {
  Integer a = abs(r.get_num());
  const Integer& b = r.get_den();
  return a > b ? a : b;
}

double weil_height(const Rational& r) {
  if (r == 0) return 0.0;
  return log_abs(weil_height_exact(r));
}

long Valuation::value() const {
  if (infinite_) throw InvalidArgument("valuation of zero is infinite");
  return value_;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

unsigned long valuation(const Integer& n, Prime p) {
  if (n == 0) throw InvalidArgument("valuation: zero has infinite valuation");
  Integer rest;
  Integer pz = to_integer(p);
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
}

Valuation padic_valuation(const Rational& r, Prime p) {
  if (r == 0) return Valuation::infinity();
  return Valuation(static_cast<long>(valuation(r.get_num(), p)) -
                   static_cast<long>(valuation(r.get_den(), p)));
}

}  // namespace hgs
