#pragma once

// Dense univariate polynomials over the rationals.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgs/numtheory.hpp"

namespace hgs {

/// coeffs()[i] is the coefficient of x^i. The leading coefficient is nonzero
/// unless the polynomial is zero, which has an empty coefficient list.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly x();
  /// x - root
  static RatPoly linear_root(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && lead() == 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& lead() const;

  Rational operator()(const Rational& at) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator-(RatPoly a) { return a *= Rational(-1); }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  RatPoly pow(unsigned e) const;
  RatPoly derivative() const;
  RatPoly monic() const;
  /// p(x + d)
  RatPoly shift(const Rational& d) const;

  /// Canonical text form, e.g. "x^4 - 5*x^2 + 6" or "1/2*x + 1/3"; reparses
  /// to the same polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Canonical ordering: by degree, then coefficients from the constant term up.
bool canonical_less(const RatPoly& a, const RatPoly& b);

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd; gcd(0, 0) is rejected.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/// Integer polynomial c * p with c > 0 chosen so the coefficients are coprime
/// integers. Returns (coefficients, c).
struct PrimitiveForm {
  std::vector<Integer> coeffs;
  Rational scale;
};
PrimitiveForm primitive_form(const RatPoly& p);

Integer eval(const std::vector<Integer>& coeffs, const Integer& at);

/// Yun's square-free decomposition of a nonzero polynomial: monic, pairwise
/// coprime s_k with p = lead(p) * prod s_k^k. Only nonconstant parts are
/// returned, ordered by multiplicity.
std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& p);

/// Product of the distinct monic irreducible factors of p.
RatPoly squarefree_kernel(const RatPoly& p);

/// All rational roots of a nonzero polynomial, without multiplicity, increasing.
std::vector<Rational> rational_roots(const RatPoly& p);

/// All integer roots n >= 0, increasing.
std::vector<Integer> nonnegative_integer_roots(const RatPoly& p);

/// All integer roots n >= 1, increasing.
std::vector<Integer> positive_integer_roots(const RatPoly& p);

/// b^2 - 4ac. Throws InvalidArgument unless deg p = 2.
Rational discriminant_quadratic(const RatPoly& p);

/// d with h(x) = h2(x + d), if any. Both must be monic of the same degree >= 1.
std::optional<Integer> shift_equivalent(const RatPoly& h, const RatPoly& h2);

// ---------------------------------------------------------------------------

struct Factor {
  RatPoly poly;  // monic
  unsigned multiplicity = 1;
  /// False only for residual factors of degree >= 3 that the pipeline could
  /// not split further; those may or may not be irreducible.
  bool certified_irreducible = true;
};

struct FactoredPoly {
  Rational unit;
  std::vector<Factor> factors;  // canonical order

  /// True when every factor is certified irreducible.
  bool certified() const;
  /// Certified and every factor has degree <= 2.
  bool quadratic_complete() const;
  RatPoly expand() const;
};

/// Factorization over Q, complete when every irreducible factor has degree
/// <= 2. Residual factors of higher degree come back as one factor flagged
/// non-certified.
FactoredPoly factor(const RatPoly& p);

// ---------------------------------------------------------------------------

/// numer / denom with coprime parts and monic denominator.
class RationalFunction {
 public:
  RationalFunction() : numer_(RatPoly::constant(0)), denom_(RatPoly::constant(1)) {}
  RationalFunction(RatPoly numer, RatPoly denom);

  const RatPoly& numer() const { return numer_; }
  const RatPoly& denom() const { return denom_; }
  /// max(deg numer, deg denom)
  int degree() const;
  /// Throws InvalidArgument on a pole.
  Rational operator()(const Rational& at) const;
  std::string to_string() const;

 private:
  RatPoly numer_;
  RatPoly denom_;
};

}  // namespace hgs
