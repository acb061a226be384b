#include "hgs/polyq.hpp"

#include <algorithm>
#include <sstream>

#include "hgs/errors.hpp"

namespace hgs {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::x() { return RatPoly(std::vector<Rational>{0, 1}); }

RatPoly RatPoly::linear_root(const Rational& root) { return RatPoly(std::vector<Rational>{-root, 1}); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

const Rational& RatPoly::lead() const {
  if (coeffs_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational RatPoly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly result = constant(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

RatPoly RatPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
  return RatPoly(std::move(out));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  RatPoly r = *this;
  r *= Rational(1) / lead();
  return r;
}

RatPoly RatPoly::shift(const Rational& d) const {
  RatPoly result;
  const RatPoly step(std::vector<Rational>{d, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result *= step;
    result += constant(*it);
  }
  return result;
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

bool canonical_less(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  }
  return false;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(a.degree() - b.degree() + 1, Rational(0));
  const Rational inv_lead = Rational(1) / b.lead();
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] * inv_lead;
    quo[i - b.degree()] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= q * b.coeffs()[j];
  }
  rem.resize(b.degree());
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd(0, 0) is undefined");
  RatPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

PrimitiveForm primitive_form(const RatPoly& p) {
  PrimitiveForm out;
  if (p.is_zero()) {
    out.scale = 1;
    return out;
  }
  Integer den = 1, num = 0;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  for (const auto& c : p.coeffs()) num = gcd(num, c.get_num() * (den / c.get_den()));
  for (const auto& c : p.coeffs()) out.coeffs.push_back(c.get_num() * (den / c.get_den()) / num);
  out.scale = Rational(den, num);
  out.scale.canonicalize();
  return out;
}

Integer eval(const std::vector<Integer>& coeffs, const Integer& at) {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw InvalidArgument("square-free decomposition of the zero polynomial");
  std::vector<std::pair<RatPoly, unsigned>> out;
  if (p.degree() == 0) return out;
  RatPoly f = p.monic();
  RatPoly fp = f.derivative();
  RatPoly b = poly_gcd(f, fp);
  RatPoly c = divmod(f, b).first;
  RatPoly d = divmod(fp, b).first - c.derivative();
  unsigned k = 1;
  while (c.degree() > 0) {
    RatPoly a = d.is_zero() ? c.monic() : poly_gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, k);
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
    ++k;
  }
  return out;
}

RatPoly squarefree_kernel(const RatPoly& p) {
  if (p.is_zero()) throw InvalidArgument("square-free kernel of the zero polynomial");
  if (p.degree() == 0) return RatPoly::constant(1);
  return divmod(p.monic(), poly_gcd(p, p.derivative())).first.monic();
}

namespace {

// Strip the factor x^k from an integer coefficient list.
std::vector<Integer> strip_zero_roots(std::vector<Integer> c, bool& had_zero) {
  had_zero = false;
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  if (k > 0) {
    had_zero = true;
    c.erase(c.begin(), c.begin() + static_cast<long>(k));
  }
  return c;
}

// Cauchy bound: every root r satisfies |r| <= 1 + max |a_i / a_n|.
Integer cauchy_bound(const std::vector<Integer>& c) {
  Integer m = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, Integer(abs(c[i])));
  Integer lead = abs(c.back());
  return 1 + (m + lead - 1) / lead;
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& p) {
  if (p.is_zero()) throw InvalidArgument("rational roots of the zero polynomial");
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  bool had_zero = false;
  auto c = strip_zero_roots(primitive_form(p).coeffs, had_zero);
  if (had_zero) out.emplace_back(0);
  if (c.size() > 1) {
    const RatPoly stripped = [&] {
      std::vector<Rational> rc(c.begin(), c.end());
      return RatPoly(std::move(rc));
    }();
    for (const auto& a : divisors(c.front())) {
      for (const auto& b : divisors(c.back())) {
        for (int sign : {1, -1}) {
          Rational cand(a * sign, b);
          cand.canonicalize();
          if (stripped(cand) == 0) out.push_back(cand);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Integer> nonnegative_integer_roots(const RatPoly& p) {
  if (p.is_zero()) throw InvalidArgument("integer roots of the zero polynomial");
  std::vector<Integer> out;
  if (p.degree() <= 0) return out;
  bool had_zero = false;
  auto c = strip_zero_roots(primitive_form(p).coeffs, had_zero);
  if (had_zero) out.emplace_back(0);
  if (c.size() > 1) {
    const Integer bound = cauchy_bound(c);
    for (const auto& r : divisors(c.front())) {
      if (r > bound) break;
      if (eval(c, r) == 0) out.push_back(r);
    }
  }
  return out;
}

std::vector<Integer> positive_integer_roots(const RatPoly& p) {
  auto roots = nonnegative_integer_roots(p);
  if (!roots.empty() && roots.front() == 0) roots.erase(roots.begin());
  return roots;
}

Rational discriminant_quadratic(const RatPoly& p) {
  if (p.degree() != 2) throw InvalidArgument("discriminant_quadratic expects a degree-2 polynomial");
  const auto& c = p.coeffs();
  return c[1] * c[1] - 4 * c[2] * c[0];
}

std::optional<Integer> shift_equivalent(const RatPoly& h, const RatPoly& h2) {
  if (!h.is_monic() || !h2.is_monic()) throw InvalidArgument("shift_equivalent expects monic polynomials");
  if (h.degree() != h2.degree() || h.degree() < 1)
    throw InvalidArgument("shift_equivalent expects equal degrees >= 1");
  const int n = h.degree();
  // h2(x + d) has x^{n-1} coefficient h2_{n-1} + n d
  Rational d = (h.coeff(n - 1) - h2.coeff(n - 1)) / n;
  if (d.get_den() != 1) return std::nullopt;
  if (h2.shift(d) != h) return std::nullopt;
  return d.get_num();
}

// ---------------------------------------------------------------------------

bool FactoredPoly::certified() const {
  return std::all_of(factors.begin(), factors.end(), [](const Factor& f) { return f.certified_irreducible; });
}

bool FactoredPoly::quadratic_complete() const {
  return certified() &&
         std::all_of(factors.begin(), factors.end(), [](const Factor& f) { return f.poly.degree() <= 2; });
}

RatPoly FactoredPoly::expand() const {
  RatPoly out = RatPoly::constant(unit);
  for (const auto& f : factors) out *= f.poly.pow(f.multiplicity);
  return out;
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(RatPoly numer, RatPoly denom) {
  if (denom.is_zero()) throw InvalidArgument("rational function with zero denominator");
  if (numer.is_zero()) {
    numer_ = RatPoly();
    denom_ = RatPoly::constant(1);
    return;
  }
  RatPoly g = poly_gcd(numer, denom);
  numer_ = divmod(numer, g).first;
  denom_ = divmod(denom, g).first;
  const Rational scale = Rational(1) / denom_.lead();
  numer_ *= scale;
  denom_ *= scale;
}

int RationalFunction::degree() const { return std::max(numer_.degree(), denom_.degree()); }

Rational RationalFunction::operator()(const Rational& at) const {
  Rational d = denom_(at);
  if (d == 0) throw InvalidArgument("rational function evaluated at a pole");
  return numer_(at) / d;
}

std::string RationalFunction::to_string() const {
  if (denom_.degree() == 0) return "(" + numer_.to_string() + ")";
  return "(" + numer_.to_string() + ")/(" + denom_.to_string() + ")";
}

}  // namespace hgs
