// Factorization over Q restricted to irreducible factors of degree <= 2.
//
// Pipeline per square-free part: strip rational roots (rational root theorem),
// then look for quadratic factors by pairing numerically approximated complex
// roots. A pair (r_i, r_j) proposes x^2 - (r_i + r_j) x + r_i r_j; for a
// primitive integer polynomial with leading coefficient L, any quadratic
// factor has L*(r_i + r_j) and L*r_i*r_j integral, so rounding gives an exact
// candidate that is then verified by exact division.

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "hgs/errors.hpp"
#include "hgs/polyq.hpp"

namespace hgs {

namespace {

std::vector<std::complex<double>> approximate_roots(const RatPoly& monic) {
  const int n = monic.degree();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -monic.coeffs()[i].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  if (solver.info() != Eigen::Success) return roots;
  for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()[i]);
  return roots;
}

Rational nearest_over(double value, const Integer& denom) {
  Integer num(std::round(value * denom.get_d()));
  Rational r(num, denom);
  r.canonicalize();
  return r;
}

// Splits a square-free monic polynomial without rational roots into quadratic
// factors where possible; whatever cannot be split is returned as residual.
void split_quadratics(RatPoly residual, std::vector<RatPoly>& quadratics, RatPoly& rest) {
  while (residual.degree() > 2) {
    const Integer lead = abs(primitive_form(residual).coeffs.back());
    const auto roots = approximate_roots(residual);
    bool found = false;
    for (std::size_t i = 0; i < roots.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < roots.size() && !found; ++j) {
        const std::complex<double> sum = roots[i] + roots[j];
        const std::complex<double> prod = roots[i] * roots[j];
        const double tol = 1e-6 * (1.0 + std::abs(sum) + std::abs(prod));
        if (std::abs(sum.imag()) > tol || std::abs(prod.imag()) > tol) continue;
        RatPoly cand(std::vector<Rational>{nearest_over(prod.real(), lead), -nearest_over(sum.real(), lead), 1});
        auto [q, r] = divmod(residual, cand);
        if (r.is_zero()) {
          quadratics.push_back(cand);
          residual = q.monic();
          found = true;
        }
      }
    }
    if (!found) break;
  }
  if (residual.degree() == 2) {
    quadratics.push_back(residual);
    residual = RatPoly::constant(1);
  }
  rest = residual;
}

}  // namespace

FactoredPoly factor(const RatPoly& p) {
  if (p.is_zero()) throw InvalidArgument("factor: zero polynomial");
  FactoredPoly out;
  out.unit = p.lead();
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    RatPoly residual = part;
    for (const auto& root : rational_roots(part)) {
      RatPoly lin = RatPoly::linear_root(root);
      residual = divmod(residual, lin).first;
      out.factors.push_back({lin, mult, true});
    }
    residual = residual.monic();
    std::vector<RatPoly> quadratics;
    RatPoly rest;
    split_quadratics(residual, quadratics, rest);
    for (auto& q : quadratics) out.factors.push_back({q, mult, true});
    if (rest.degree() > 0) out.factors.push_back({rest, mult, false});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return canonical_less(a.poly, b.poly);
  });
  return out;
}

}  // namespace hgs
