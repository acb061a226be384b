#include "hgs/padic.hpp"

#include <algorithm>
#include <random>

#include "hgs/errors.hpp"
#include "hgs/hyperseq.hpp"

namespace hgs {

ModPoly::ModPoly(Prime p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

ModPoly ModPoly::x(Prime p) { return ModPoly(p, {0, 1}); }

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t ModPoly::operator()(std::uint64_t at) const {
  at %= p_;
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = mul_mod(acc, at, p_) + *it;
    if (acc >= p_) acc -= p_;
  }
  return acc;
}

ModPoly ModPoly::derivative() const {
  std::vector<std::uint64_t> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mul_mod(c_[i], i % p_, p_));
  return ModPoly(p_, std::move(d));
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = inv_mod(c_.back(), p_);
  std::vector<std::uint64_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mul_mod(c_[i], inv, p_);
  return ModPoly(p_, std::move(out));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  const Prime p = a.p_;
  std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = (i < a.c_.size() ? a.c_[i] : 0) + (i < b.c_.size() ? b.c_[i] : 0);
    out[i] = s >= p ? s - p : s;
  }
  return ModPoly(p, std::move(out));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  const Prime p = a.p_;
  std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
    std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
    out[i] = x >= y ? x - y : x + (p - y);
  }
  return ModPoly(p, std::move(out));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  const Prime p = a.p_;
  if (a.is_zero() || b.is_zero()) return ModPoly(p);
  std::vector<std::uint64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] = (out[i + j] + mul_mod(a.c_[i], b.c_[j], p)) % p;
    }
  }
  return ModPoly(p, std::move(out));
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw InvalidArgument("ModPoly division by zero");
  const Prime p = a.prime();
  std::vector<std::uint64_t> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {ModPoly(p), a};
  std::vector<std::uint64_t> q(a.degree() - db + 1, 0);
  const std::uint64_t inv = inv_mod(bc.back(), p);
  for (int i = a.degree(); i >= db; --i) {
    const std::uint64_t c = mul_mod(r[i], inv, p);
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      const std::uint64_t t = mul_mod(c, bc[j], p);
      auto& slot = r[i - db + j];
      slot = slot >= t ? slot - t : slot + (p - t);
    }
  }
  r.resize(db);
  return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly poly_gcd(const ModPoly& a_in, const ModPoly& b_in) {
  ModPoly a = a_in, b = b_in;
  while (!b.is_zero()) {
    ModPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPoly pow_mod(const ModPoly& base, std::uint64_t e, const ModPoly& m) {
  ModPoly result(m.prime(), {1});
  result = divmod(result, m).second;
  ModPoly b = divmod(base, m).second;
  while (e > 0) {
    if (e & 1) result = divmod(result * b, m).second;
    e >>= 1;
    if (e > 0) b = divmod(b * b, m).second;
  }
  return result;
}

ModPoly reduce_mod_p(const RatPoly& f, Prime p) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) c.push_back(rep(q, p));
  return ModPoly(p, std::move(c));
}

namespace {

ModPoly x_pow_p_minus_x(const ModPoly& f) {
  const Prime p = f.prime();
  return pow_mod(ModPoly::x(p), p, f) - ModPoly::x(p);
}

void split_roots(const ModPoly& h, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  const Prime p = h.prime();
  if (h.degree() <= 0) return;
  if (h.degree() == 1) {
    const auto m = h.monic();
    out.push_back(m.coeffs()[0] == 0 ? 0 : p - m.coeffs()[0]);
    return;
  }
  if (p == 2) {
    // square-free with all roots in F_2 and degree 2: x(x+1)
    out.push_back(0);
    out.push_back(1);
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  while (true) {
    ModPoly shifted(p, {dist(rng), 1});
    ModPoly w = pow_mod(shifted, (p - 1) / 2, h) - ModPoly(p, {1});
    ModPoly d = poly_gcd(h, w);
    if (d.degree() > 0 && d.degree() < h.degree()) {
      split_roots(d, rng, out);
      split_roots(divmod(h, d).first, rng, out);
      return;
    }
  }
}

}  // namespace

int count_roots_mod_p(const ModPoly& f) {
  if (f.is_zero()) throw InvalidArgument("count_roots_mod_p: polynomial vanishes mod " + std::to_string(f.prime()));
  if (f.degree() == 0) return 0;
  return poly_gcd(f, x_pow_p_minus_x(f)).degree();
}

int count_roots_mod_p(const RatPoly& f, Prime p) { return count_roots_mod_p(reduce_mod_p(f, p)); }

int count_roots_with_multiplicity(const std::vector<std::pair<RatPoly, unsigned>>& decomposition, Prime p) {
  int total = 0;
  for (const auto& [part, k] : decomposition) total += static_cast<int>(k) * count_roots_mod_p(part, p);
  return total;
}

int count_roots_with_multiplicity(const RatPoly& f, Prime p) {
  if (f.is_zero()) throw InvalidArgument("count_roots_with_multiplicity: zero polynomial");
  return count_roots_with_multiplicity(squarefree_decomposition(f), p);
}

std::vector<std::uint64_t> roots_mod_p(const ModPoly& f) {
  if (f.is_zero()) throw InvalidArgument("roots_mod_p: zero polynomial");
  const Prime p = f.prime();
  std::vector<std::uint64_t> out;
  if (f.degree() <= 0) return out;
  if (p <= 64) {
    for (std::uint64_t a = 0; a < p; ++a) {
      if (f(a) == 0) out.push_back(a);
    }
    return out;
  }
  ModPoly h = poly_gcd(f, x_pow_p_minus_x(f));
  std::mt19937_64 rng(p);
  split_roots(h, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_hensel_prime(const RatPoly& f, Prime p) {
  if (f.is_zero()) throw InvalidArgument("is_hensel_prime: zero polynomial");
  for (const auto& c : f.coeffs()) {
    if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p)) return false;
  }
  if (mpz_divisible_ui_p(f.lead().get_num().get_mpz_t(), p)) return false;
  ModPoly m = reduce_mod_p(f, p);
  if (m.degree() <= 0) return true;
  return poly_gcd(m, m.derivative()).degree() == 0;
}

bool is_hensel_prime_for_pair(const RatPoly& f, const RatPoly& g, Prime p) {
  auto unit = [p](const Rational& c) {
    return !mpz_divisible_ui_p(c.get_num().get_mpz_t(), p) && !mpz_divisible_ui_p(c.get_den().get_mpz_t(), p);
  };
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("is_hensel_prime_for_pair: zero polynomial");
  if (!unit(f.lead()) || !unit(g.lead())) return false;
  return is_hensel_prime(squarefree_kernel(f * g), p);
}

// ---------------------------------------------------------------------------

PadicRoot::PadicRoot(std::shared_ptr<const RatPoly> source, Prime p, unsigned precision, Integer value)
    : source_(std::move(source)), p_(p), precision_(precision), value_(std::move(value)) {
  digits_.reserve(precision_);
  Integer rest = value_;
  for (unsigned i = 0; i < precision_; ++i) {
    digits_.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p_));
  }
}

namespace {

Integer prime_power(Prime p, unsigned k) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, k);
  return out;
}

Integer residue_mod(const Rational& q, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t()) == 0) {
    throw BadPrime("coefficient denominator not invertible modulo the prime power");
  }
  Integer out = q.get_num() * inv;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), m.get_mpz_t());
  return out;
}

Integer eval_mod(const std::vector<Integer>& c, const Integer& at, const Integer& m) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * at + *it;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

// Newton iteration from a root known mod p^from up to p^to.
Integer newton_lift(const RatPoly& f, Prime p, Integer value, unsigned from, unsigned to) {
  const Integer top = prime_power(p, to);
  std::vector<Integer> c, dc;
  for (const auto& q : f.coeffs()) c.push_back(residue_mod(q, top));
  const RatPoly df = f.derivative();
  for (const auto& q : df.coeffs()) dc.push_back(residue_mod(q, top));
  unsigned prec = from;
  while (prec < to) {
    prec = std::min(2 * prec, to);
    const Integer m = prime_power(p, prec);
    std::vector<Integer> cm(c.size()), dcm(dc.size());
    for (std::size_t i = 0; i < c.size(); ++i) cm[i] = c[i] % m;
    for (std::size_t i = 0; i < dc.size(); ++i) dcm[i] = dc[i] % m;
    Integer fx = eval_mod(cm, value, m);
    Integer dfx = eval_mod(dcm, value, m);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m.get_mpz_t()) == 0) {
      throw NotSimpleRoot("derivative vanishes at the root mod p");
    }
    value = value - fx * inv;
    mpz_mod(value.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  }
  return value;
}

PadicRoot lift_checked(std::shared_ptr<const RatPoly> f, Prime p, Integer start, unsigned from, unsigned k) {
  Integer value = newton_lift(*f, p, std::move(start), from, k);
  const Integer m = prime_power(p, k);
  std::vector<Integer> c;
  for (const auto& q : f->coeffs()) c.push_back(residue_mod(q, m));
  if (eval_mod(c, value, m) != 0) throw InvalidArgument("hensel_lift: lifted value is not a root");
  return PadicRoot(std::move(f), p, k, std::move(value));
}

}  // namespace

PadicRoot PadicRoot::extended(unsigned precision) const {
  if (precision <= precision_) {
    Integer v = value_ % prime_power(p_, precision);
    return PadicRoot(source_, p_, precision, v);
  }
  return lift_checked(source_, p_, value_, precision_, precision);
}

PadicRoot hensel_lift(const RatPoly& f, Prime p, const Integer& r0, unsigned k) {
  if (k == 0) throw InvalidArgument("hensel_lift: precision must be >= 1");
  if (!is_prime(p)) throw InvalidArgument("hensel_lift: modulus is not prime");
  const ModPoly m = reduce_mod_p(f, p);
  const std::uint64_t r = residue(r0, p);
  if (m(r) != 0) throw InvalidArgument("hensel_lift: r0 is not a root mod p");
  if (m.derivative()(r) == 0) throw NotSimpleRoot("hensel_lift: derivative vanishes at r0 mod p");
  return lift_checked(std::make_shared<const RatPoly>(f), p, to_integer(r), 1, k);
}

unsigned zero_run_length(const PadicRoot& root, unsigned s, unsigned cap) {
  PadicRoot cur = root;
  unsigned i = s;
  while (true) {
    const auto& d = cur.digits();
    while (i < cur.precision() && d[i] == 0) ++i;
    if (i < cur.precision()) return i - s;
    if (cur.precision() >= cap) {
      throw PrecisionExhausted("zero run from digit " + std::to_string(s) + " exceeds " + std::to_string(cap) +
                               " digits");
    }
    cur = cur.extended(std::min(cap, std::max(2 * cur.precision(), s + 1)));
  }
}

std::vector<double> digit_frequency(const PadicRoot& root, unsigned pattern_length) {
  if (pattern_length == 0) throw InvalidArgument("digit_frequency: pattern length must be >= 1");
  const Prime p = root.prime();
  std::uint64_t size = 1;
  for (unsigned i = 0; i < pattern_length; ++i) {
    if (size > 10'000'000 / p) throw InvalidArgument("digit_frequency: pattern table too large");
    size *= p;
  }
  std::vector<double> freq(size, 0.0);
  const auto& d = root.digits();
  if (d.size() < pattern_length) return freq;
  const std::size_t windows = d.size() - pattern_length + 1;
  for (std::size_t start = 0; start < windows; ++start) {
    std::uint64_t idx = 0;
    for (unsigned k = pattern_length; k-- > 0;) idx = idx * p + d[start + k];
    freq[idx] += 1.0;
  }
  for (auto& f : freq) f /= static_cast<double>(windows);
  return freq;
}

void write_digits(std::ostream& os, const PadicRoot& root) {
  bool first = true;
  for (auto digit : root.digits()) {
    if (!first) os << ' ';
    os << digit;
    first = false;
  }
}

// ---------------------------------------------------------------------------

namespace {

// nu_p(n* - alpha) - s for the unique n* in [1, p^s] congruent to alpha mod p^s.
long extra_valuation(const RatPoly& part, Prime p, std::uint64_t r0, unsigned s, unsigned cap) {
  const PadicRoot alpha = hensel_lift(part, p, to_integer(r0), s + 1);
  const Integer ps = prime_power(p, s);
  if (s > 0 && alpha.value() % ps != 0) return zero_run_length(alpha, s, cap);
  // n* = p^s: look at the root alpha - p^s of part(x + p^s)
  const RatPoly shifted = part.shift(Rational(ps));
  Integer start = to_integer(r0) - ps;
  const PadicRoot beta = hensel_lift(shifted, p, start, s + 1);
  return zero_run_length(beta, s, cap);
}

long digit_side(const std::vector<std::pair<RatPoly, unsigned>>& decomposition, Prime p, unsigned s, unsigned cap) {
  long total = 0;
  for (const auto& [part, k] : decomposition) {
    for (auto r : roots_mod_p(reduce_mod_p(part, p))) total += static_cast<long>(k) * extra_valuation(part, p, r, s, cap);
  }
  return total;
}

PrimePowerValuation valuation_at_prime_power_impl(const HypergeomSeq& seq, Prime p, unsigned s, unsigned cap,
                                                  bool general) {
  if (!is_prime(p)) throw InvalidArgument("valuation_at_prime_power: modulus is not prime");
  if (seq.u0() == 0) throw InvalidArgument("valuation_at_prime_power: zero sequence");
  if (!is_hensel_prime_for_pair(seq.f(), seq.g(), p)) {
    throw NotHenselPrime(std::to_string(p) + " is not a Hensel prime for f*g");
  }
  const auto df = squarefree_decomposition(seq.f());
  const auto dg = squarefree_decomposition(seq.g());
  if (count_roots_with_multiplicity(df, p) != count_roots_with_multiplicity(dg, p)) {
    throw InvalidArgument("valuation_at_prime_power: sequence is not p-symmetric");
  }
  const long v0 = padic_valuation(seq.u0(), p).value();
  if (!general && v0 != 0) throw InvalidArgument("valuation_at_prime_power: nu_p(u0) must be 0");

  Index n = 1;
  for (unsigned i = 0; i < s; ++i) {
    if (n > (Index{1} << 40) / p) throw InvalidArgument("valuation_at_prime_power: p^s too large");
    n *= p;
  }
  const Valuation direct = term_valuation(seq, n, p);
  if (direct.is_infinite()) throw DegenerateSequence("u_{p^s} vanishes");

  PrimePowerValuation out;
  out.direct = direct.value();
  out.digit_formula = v0 + digit_side(dg, p, s, cap) - digit_side(df, p, s, cap);
  return out;
}

}  // namespace

PrimePowerValuation valuation_at_prime_power(const HypergeomSeq& seq, Prime p, unsigned s, unsigned cap) {
  return valuation_at_prime_power_impl(seq, p, s, cap, false);
}

PrimePowerValuation valuation_at_prime_power_general(const HypergeomSeq& seq, Prime p, unsigned s, unsigned cap) {
  return valuation_at_prime_power_impl(seq, p, s, cap, true);
}

}  // namespace hgs
