#pragma once

// First-order hypergeometric recurrences f(n) u_n = g(n) u_{n-1}.

#include <optional>
#include <string>
#include <vector>

#include "hgs/numtheory.hpp"
#include "hgs/parallel.hpp"
#include "hgs/polyq.hpp"

namespace hgs {

struct SequenceFlags {
  /// Always true for a constructed sequence; construction rejects the rest.
  bool f_no_nonnegative_integer_roots = true;
  bool coprime = true;
  /// A common factor of f and g was divided out during construction.
  bool common_factor_removed = false;
  bool zero_initial = false;
  std::vector<Integer> g_positive_integer_roots;

  bool g_has_positive_integer_root() const { return !g_positive_integer_roots.empty(); }
  /// u_n is eventually zero.
  bool degenerate() const { return zero_initial || g_has_positive_integer_root(); }
};

class HypergeomSeq {
 public:
  const RatPoly& f() const { return f_; }
  const RatPoly& g() const { return g_; }
  const Rational& u0() const { return u0_; }
  const SequenceFlags& flags() const { return flags_; }

  /// Primitive integer forms: f = f_int().scale^-1 * F.
  const PrimitiveForm& f_int() const { return fi_; }
  const PrimitiveForm& g_int() const { return gi_; }

  /// g(m) / f(m)
  Rational ratio(Index m) const;

 private:
  friend HypergeomSeq make_sequence(const RatPoly& f, const RatPoly& g, const Rational& u0);
  RatPoly f_, g_;
  Rational u0_;
  SequenceFlags flags_;
  PrimitiveForm fi_, gi_;
};

/// Divides out gcd(f, g) and validates. Throws InvalidF when f has a root in
/// {0, 1, 2, ...}, InvalidArgument when f or g is zero.
HypergeomSeq make_sequence(const RatPoly& f, const RatPoly& g, const Rational& u0);

/// Streams u_0, u_1, ... keeping the running value reduced.
class TermCursor {
 public:
  explicit TermCursor(const HypergeomSeq& seq);
  /// Resume from a known checkpoint value u_n.
  TermCursor(const HypergeomSeq& seq, Index n, Rational value);

  Index index() const { return n_; }
  const Rational& value() const { return value_; }

  void advance();
  void advance_to(Index n);

  /// Start tracking nu_p of the running value (computed from the current
  /// value once, then updated incrementally).
  void track_prime(Prime p);
  Valuation valuation(Prime p) const;

 private:
  struct Tracked {
    Prime p;
    Valuation v;
  };
  const HypergeomSeq* seq_;
  Index n_ = 0;
  Rational value_;
  std::vector<Tracked> tracked_;
};

Rational term(const HypergeomSeq& seq, Index n);

/// nu_p(u_n) without forming u_n; infinite when u_0 = 0 or g(m) = 0 for some
/// 1 <= m <= n.
Valuation term_valuation(const HypergeomSeq& seq, Index n, Prime p);

/// nu_p(u_n) for n = 0..n_max.
std::vector<Valuation> valuation_profile(const HypergeomSeq& seq, Prime p, Index n_max, Exec exec = Exec::parallel);

struct HeightSample {
  Index n = 0;
  /// max(|num|, |den|); kept only on request.
  std::optional<Integer> exact;
  double height = 0.0;
};

struct HeightProfile {
  std::vector<HeightSample> samples;
  /// min h(u_n)/n over n_max/2 <= n <= n_max, n >= 1
  double growth_constant = 0.0;
};

/// Heights at n = 0, stride, 2*stride, ... and at n_max.
HeightProfile height_profile(const HypergeomSeq& seq, Index n_max, Index stride, bool keep_exact = false,
                             Exec exec = Exec::parallel);

// ---------------------------------------------------------------------------
// Regularization

/// member(x) = representative(x - shift), shift >= 0.
struct ShiftMember {
  RatPoly poly;
  Integer shift;
  bool from_g = false;
  unsigned multiplicity = 1;
};

struct ShiftClass {
  RatPoly representative;
  std::vector<ShiftMember> members;
  /// weighted count of g members minus f members
  long gamma = 0;
};

/// constant * prod poly(n)^exponent
class Correction {
 public:
  struct Term {
    RatPoly poly;
    long exponent;
  };

  Correction() = default;
  Correction(Rational constant, std::vector<Term> terms);

  const Rational& constant() const { return constant_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_one() const { return constant_ == 1 && terms_.empty(); }

  Rational operator()(Index n) const;
  RationalFunction expand() const;
  std::string to_string() const;

 private:
  Rational constant_ = 1;
  std::vector<Term> terms_;
};

struct RegularizationResult {
  HypergeomSeq regular_seq;
  Correction correction;
  std::vector<ShiftClass> shift_classes;
};

/// u_n = correction(n) * regular_seq term n. Throws UnsupportedFactorization
/// unless f and g factor completely into degree <= 2 factors, and
/// DegenerateSequence when g has a positive integer root.
RegularizationResult regularize(const HypergeomSeq& seq);

/// No two irreducible factors of f*g differ by a nonzero integer shift.
bool is_regular(const HypergeomSeq& seq);

}  // namespace hgs
