#pragma once

// p-symmetry, asymmetric-prime search and the certified valuation envelope.

#include <optional>
#include <string>
#include <vector>

#include "hgs/hyperseq.hpp"
#include "hgs/parallel.hpp"
#include "hgs/polyq.hpp"

namespace hgs {

/// Root counts are weighted by the multiplicities of the square-free
/// decomposition over Q (see count_roots_with_multiplicity).
struct AsymmetryCertificate {
  Prime p = 0;
  int m_f = 0;
  int m_g = 0;
  /// (m_g - m_f) / (p - 1)
  Rational slope;
  /// L(n) = A n - C (log_p(B n^d) + 2) - |nu_p(u0)|
  Rational envelope_A;
  Rational envelope_B;
  int envelope_C = 0;
  int envelope_d = 0;
  long u0_valuation = 0;
};

std::string format_certificate(const AsymmetryCertificate& cert);
/// Inverse of format_certificate. Throws ParseError.
AsymmetryCertificate parse_certificate(const std::string& text);

struct PrimeReport {
  Prime p = 0;
  bool hensel = false;
  int m_f = 0;
  int m_g = 0;
};

/// Precomputed square-free data of a pair (f, g) for repeated per-prime work.
class PairData {
 public:
  PairData(const RatPoly& f, const RatPoly& g);

  const RatPoly& f() const { return f_; }
  const RatPoly& g() const { return g_; }
  PrimeReport analyze(Prime p) const;
  int degree() const;
  /// max over primitive integer square-free components S of sum |coeffs|
  Integer coefficient_bound() const;

 private:
  RatPoly f_, g_, kernel_;
  std::vector<std::pair<RatPoly, unsigned>> df_, dg_;
};

/// Throws NotHenselPrime.
bool is_p_symmetric(const RatPoly& f, const RatPoly& g, Prime p);
bool is_p_symmetric(const HypergeomSeq& seq, Prime p);

struct ScanSummary {
  Prime p_min = 0;
  Prime p_max = 0;
  std::size_t primes_scanned = 0;
  std::size_t non_hensel = 0;
  /// excluded because p divides u0 or an avoided integer
  std::size_t excluded = 0;
  std::size_t symmetric = 0;
  std::size_t asymmetric = 0;

  std::string to_string() const;
};

struct ScanOptions {
  /// Primes dividing any of these are skipped.
  std::vector<Integer> avoid;
  Exec exec = Exec::parallel;
};

struct ScanResult {
  std::optional<AsymmetryCertificate> certificate;
  ScanSummary summary;
};

/// Smallest Hensel prime in [p_min, p_max] where the weighted root counts
/// differ, skipping primes dividing u0.
ScanResult find_asymmetric_prime(const HypergeomSeq& seq, Prime p_min, Prime p_max, const ScanOptions& opts = {});
/// Pair-only variant (no u0, so u0_valuation = 0).
ScanResult find_asymmetric_prime(const RatPoly& f, const RatPoly& g, Prime p_min, Prime p_max,
                                 const ScanOptions& opts = {});

/// Every asymmetric prime of the range, increasing.
std::vector<AsymmetryCertificate> all_asymmetric_primes(const HypergeomSeq& seq, Prime p_min, Prime p_max,
                                                        const ScanOptions& opts, ScanSummary* summary = nullptr);

class Envelope {
 public:
  explicit Envelope(const AsymmetryCertificate& cert);
  /// Lower bound for |nu_p(u_n)|, n >= 1. Nonpositive values are vacuous.
  double operator()(Index n) const;
  const AsymmetryCertificate& certificate() const { return cert_; }
  /// Smallest n >= 1 such that L(m) > threshold for every m >= n, or nullopt
  /// if that n exceeds cap.
  std::optional<Index> crossing(double threshold, Index cap) const;

 private:
  AsymmetryCertificate cert_;
  long double a_, log_b_, log_p_;
};

/// Fills the envelope fields of a certificate for seq at p.
AsymmetryCertificate make_certificate(const HypergeomSeq& seq, Prime p);

Envelope certified_envelope(const AsymmetryCertificate& cert, const HypergeomSeq& seq);

struct SlopeFit {
  double slope = 0.0;
  double expected = 0.0;
  double max_log_deviation = 0.0;
};

/// Least squares slope of nu_p(u_n) against n over [n_max/2, n_max].
SlopeFit slope_fit(const HypergeomSeq& seq, Prime p, Index n_max, Exec exec = Exec::parallel);

struct ClassVerdict {
  bool supported = true;
  bool value = false;
  std::string note;
};

/// Compares the parameter fields of f and g root by root: each linear factor
/// contributes Q, each irreducible quadratic two copies of Q(sqrt d) keyed by
/// the square-free part d of its discriminant. In the class iff non-rational
/// and the multisets differ.
ClassVerdict class_d_quadratic_check(const HypergeomSeq& seq);
ClassVerdict class_d_quadratic_check(const RatPoly& f, const RatPoly& g);

}  // namespace hgs
