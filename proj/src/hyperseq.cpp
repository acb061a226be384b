#include "hgs/hyperseq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <omp.h>

#include "hgs/errors.hpp"

namespace hgs {

Rational HypergeomSeq::ratio(Index m) const {
  const Integer x = to_integer(m);
  Rational r(eval(gi_.coeffs, x) * fi_.scale.get_num() * gi_.scale.get_den(),
             eval(fi_.coeffs, x) * fi_.scale.get_den() * gi_.scale.get_num());
  r.canonicalize();
  return r;
}

HypergeomSeq make_sequence(const RatPoly& f_in, const RatPoly& g_in, const Rational& u0) {
  if (f_in.is_zero()) throw InvalidArgument("f must be nonzero");
  if (g_in.is_zero()) throw InvalidArgument("g must be nonzero");
  HypergeomSeq s;
  const RatPoly common = poly_gcd(f_in, g_in);
  if (common.degree() > 0) {
    s.f_ = divmod(f_in, common).first;
    s.g_ = divmod(g_in, common).first;
    s.flags_.common_factor_removed = true;
  } else {
    s.f_ = f_in;
    s.g_ = g_in;
  }
  const auto bad = nonnegative_integer_roots(s.f_);
  if (!bad.empty()) {
    std::string list;
    for (const auto& r : bad) list += (list.empty() ? "" : ", ") + r.get_str();
    throw InvalidF("f has nonnegative integer roots: " + list);
  }
  s.u0_ = u0;
  s.flags_.zero_initial = u0 == 0;
  s.flags_.g_positive_integer_roots = positive_integer_roots(s.g_);
  s.fi_ = primitive_form(s.f_);
  s.gi_ = primitive_form(s.g_);
  return s;
}

// ---------------------------------------------------------------------------

namespace {

// nu_p(g(m)/f(m)) from the integer forms; infinite when g(m) = 0.
struct RatioValuation {
  RatioValuation(const HypergeomSeq& seq, Prime p) : seq_(seq), p_(p), pz_(to_integer(p)) {
    offset_ = padic_valuation(seq.f_int().scale, p).value() - padic_valuation(seq.g_int().scale, p).value();
    for (const auto& c : seq.f_int().coeffs) fr_.push_back(residue(c, p));
    for (const auto& c : seq.g_int().coeffs) gr_.push_back(residue(c, p));
  }

  Valuation operator()(Index m) const {
    const long vg = part(seq_.g_int().coeffs, gr_, m);
    if (vg < 0) return Valuation::infinity();
    return Valuation(vg - part(seq_.f_int().coeffs, fr_, m) + offset_);
  }

 private:
  // -1 encodes a zero value
  long part(const std::vector<Integer>& c, const std::vector<std::uint64_t>& cr, Index m) const {
    const std::uint64_t x = m % p_;
    std::uint64_t acc = 0;
    for (auto it = cr.rbegin(); it != cr.rend(); ++it) acc = (mul_mod(acc, x, p_) + *it) % p_;
    if (acc != 0) return 0;
    Integer v = eval(c, to_integer(m));
    if (v == 0) return -1;
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), pz_.get_mpz_t()));
  }

  const HypergeomSeq& seq_;
  Prime p_;
  Integer pz_;
  long offset_ = 0;
  std::vector<std::uint64_t> fr_, gr_;
};

Valuation add(Valuation a, Valuation b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(a.value() + b.value());
}

}  // namespace

TermCursor::TermCursor(const HypergeomSeq& seq) : seq_(&seq), value_(seq.u0()) {}

TermCursor::TermCursor(const HypergeomSeq& seq, Index n, Rational value) : seq_(&seq), n_(n), value_(std::move(value)) {}

void TermCursor::advance() {
  ++n_;
  if (value_ == 0) return;
  const Rational r = seq_->ratio(n_);
  value_ *= r;
  for (auto& t : tracked_) t.v = add(t.v, padic_valuation(r, t.p));
}

void TermCursor::advance_to(Index n) {
  if (n < n_) throw InvalidArgument("TermCursor cannot move backwards");
  while (n_ < n) advance();
}

void TermCursor::track_prime(Prime p) {
  for (const auto& t : tracked_) {
    if (t.p == p) return;
  }
  tracked_.push_back({p, padic_valuation(value_, p)});
}

Valuation TermCursor::valuation(Prime p) const {
  for (const auto& t : tracked_) {
    if (t.p == p) return t.v;
  }
  throw InvalidArgument("prime " + std::to_string(p) + " is not tracked");
}

Rational term(const HypergeomSeq& seq, Index n) {
  TermCursor c(seq);
  c.advance_to(n);
  return c.value();
}

Valuation term_valuation(const HypergeomSeq& seq, Index n, Prime p) {
  if (!is_prime(p)) throw InvalidArgument("term_valuation: modulus is not prime");
  Valuation v = padic_valuation(seq.u0(), p);
  if (v.is_infinite()) return v;
  const RatioValuation rv(seq, p);
  long acc = v.value();
  for (Index m = 1; m <= n; ++m) {
    const Valuation d = rv(m);
    if (d.is_infinite()) return d;
    acc += d.value();
  }
  return Valuation(acc);
}

std::vector<Valuation> valuation_profile(const HypergeomSeq& seq, Prime p, Index n_max, Exec exec) {
  if (!is_prime(p)) throw InvalidArgument("valuation_profile: modulus is not prime");
  std::vector<Valuation> out(n_max + 1);
  out[0] = padic_valuation(seq.u0(), p);
  const RatioValuation rv(seq, p);
  if (exec == Exec::parallel) {
    const auto n = static_cast<std::int64_t>(n_max);
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t m = 1; m <= n; ++m) out[m] = rv(static_cast<Index>(m));
  } else {
    for (Index m = 1; m <= n_max; ++m) out[m] = rv(m);
  }
  for (Index m = 1; m <= n_max; ++m) out[m] = add(out[m - 1], out[m]);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool sampled(Index n, Index n_max, Index stride) { return n % stride == 0 || n == n_max; }

HeightSample sample_of(Index n, const Rational& v, bool keep_exact) {
  HeightSample s;
  s.n = n;
  s.height = weil_height(v);
  if (keep_exact) s.exact = weil_height_exact(v);
  return s;
}

struct ShardResult {
  std::vector<HeightSample> samples;
  double growth = std::numeric_limits<double>::infinity();
};

// Streams u_{lo..hi} from the checkpoint u_{lo-1} = start.
void stream_shard(const HypergeomSeq& seq, Index lo, Index hi, Rational start, Index n_max, Index stride,
                  bool keep_exact, ShardResult& out) {
  const Index half = std::max<Index>(1, (n_max + 1) / 2);
  TermCursor c(seq, lo - 1, std::move(start));
  while (c.index() < hi) {
    c.advance();
    const Index n = c.index();
    const bool want_sample = sampled(n, n_max, stride);
    if (!want_sample && n < half) continue;
    const double h = weil_height(c.value());
    if (n >= half) out.growth = std::min(out.growth, h / static_cast<double>(n));
    if (want_sample) out.samples.push_back(sample_of(n, c.value(), keep_exact));
  }
}

}  // namespace

HeightProfile height_profile(const HypergeomSeq& seq, Index n_max, Index stride, bool keep_exact, Exec exec) {
  if (n_max < 1) throw InvalidArgument("height_profile: n_max must be >= 1");
  if (stride < 1) throw InvalidArgument("height_profile: stride must be >= 1");
  HeightProfile out;
  out.samples.push_back(sample_of(0, seq.u0(), keep_exact));

  const int threads = exec == Exec::parallel ? thread_count() : 1;
  const Index shards = std::min<Index>(static_cast<Index>(threads), n_max);
  std::vector<ShardResult> results(shards);
  if (shards <= 1) {
    stream_shard(seq, 1, n_max, seq.u0(), n_max, stride, keep_exact, results[0]);
  } else {
    std::vector<Index> lo(shards), hi(shards);
    for (Index s = 0; s < shards; ++s) {
      lo[s] = 1 + s * n_max / shards;
      hi[s] = (s + 1) * n_max / shards;
    }
    // product of the ratios per shard, then prefix products as checkpoints
    std::vector<Rational> prod(shards, Rational(1));
    const auto count = static_cast<std::int64_t>(shards);
#pragma omp parallel for schedule(static, 1) num_threads(threads)
    for (std::int64_t s = 0; s < count; ++s) {
      Rational acc = 1;
      for (Index m = lo[s]; m <= hi[s] && acc != 0; ++m) acc *= seq.ratio(m);
      prod[s] = acc;
    }
    std::vector<Rational> start(shards);
    start[0] = seq.u0();
    for (Index s = 1; s < shards; ++s) start[s] = start[s - 1] * prod[s - 1];
#pragma omp parallel for schedule(static, 1) num_threads(threads)
    for (std::int64_t s = 0; s < count; ++s) {
      stream_shard(seq, lo[s], hi[s], start[s], n_max, stride, keep_exact, results[s]);
    }
  }
  double growth = std::numeric_limits<double>::infinity();
  for (auto& r : results) {
    growth = std::min(growth, r.growth);
    for (auto& s : r.samples) out.samples.push_back(std::move(s));
  }
  out.growth_constant = growth;
  return out;
}

}  // namespace hgs
