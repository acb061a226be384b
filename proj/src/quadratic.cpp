#include "hgs/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hgs/errors.hpp"

namespace hgs {

std::size_t DiscriminantProfile::index_of(const Integer& delta) const {
  auto it = std::find(discs.begin(), discs.end(), delta);
  if (it == discs.end()) throw InvalidArgument(delta.get_str() + " is not in the discriminant set");
  return static_cast<std::size_t>(it - discs.begin());
}

DiscriminantProfile make_profile(std::vector<Integer> discs) {
  DiscriminantProfile out;
  std::sort(discs.begin(), discs.end());
  discs.erase(std::unique(discs.begin(), discs.end()), discs.end());
  std::set<Integer> primes;
  bool negative = false;
  for (const auto& d : discs) {
    if (d == 0 || !is_squarefree(d)) throw InvalidArgument(d.get_str() + " is not a square-free integer");
    if (d < 0) negative = true;
    if (abs(d) == 1) continue;
    for (const auto& [p, e] : factor_integer(d)) primes.insert(p);
  }
  if (negative) out.support.emplace_back(-1);
  out.support.insert(out.support.end(), primes.begin(), primes.end());
  for (const auto& d : discs) {
    std::vector<std::uint8_t> v;
    for (const auto& label : out.support) {
      v.push_back(label == -1 ? d < 0 : mpz_divisible_p(d.get_mpz_t(), label.get_mpz_t()) != 0);
    }
    out.vectors.push_back(std::move(v));
  }
  out.discs = std::move(discs);
  return out;
}

DiscriminantProfile discriminant_profile(const RatPoly& f, const RatPoly& g) {
  std::vector<Integer> discs;
  for (const auto* p : {&f, &g}) {
    const FactoredPoly fp = factor(*p);
    if (!fp.quadratic_complete()) {
      throw UnsupportedFactorization("factorization has an unsplit factor of degree >= 3");
    }
    for (const auto& fac : fp.factors) {
      if (fac.poly.degree() == 2) discs.push_back(squarefree_part(discriminant_quadratic(fac.poly)));
    }
  }
  return make_profile(std::move(discs));
}

DiscriminantProfile discriminant_profile(const HypergeomSeq& seq) { return discriminant_profile(seq.f(), seq.g()); }

// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<std::uint8_t>> solve_exhaustive(const std::vector<std::vector<std::uint8_t>>& rows,
                                                          const std::vector<std::uint8_t>& rhs, std::size_t r) {
  std::vector<std::uint32_t> masks;
  for (const auto& row : rows) {
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < r; ++j) m |= static_cast<std::uint32_t>(row[j]) << j;
    masks.push_back(m);
  }
  for (std::uint32_t eps = 0; eps < (1u << r); ++eps) {
    bool ok = true;
    for (std::size_t i = 0; i < masks.size() && ok; ++i) {
      ok = (__builtin_popcount(masks[i] & eps) & 1) == rhs[i];
    }
    if (ok) {
      std::vector<std::uint8_t> out(r);
      for (std::size_t j = 0; j < r; ++j) out[j] = (eps >> j) & 1;
      return out;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::uint8_t>> solve_elimination(std::vector<std::vector<std::uint8_t>> rows,
                                                           std::vector<std::uint8_t> rhs, std::size_t r) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < r && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !rows[sel][col]) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    std::swap(rhs[sel], rhs[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i][col]) {
        for (std::size_t j = 0; j < r; ++j) rows[i][j] ^= rows[rank][j];
        rhs[i] ^= rhs[rank];
      }
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (rhs[i]) return std::nullopt;
  }
  std::vector<std::uint8_t> out(r, 0);
  for (std::size_t i = 0; i < rank; ++i) out[pivot_col[i]] = rhs[i];
  return out;
}

}  // namespace

std::optional<std::vector<std::uint8_t>> exists_condition_prime(const DiscriminantProfile& profile,
                                                                const Integer& delta) {
  const std::size_t target = profile.index_of(delta);
  const std::size_t r = profile.support.size();
  std::vector<std::uint8_t> rhs;
  for (std::size_t i = 0; i < profile.discs.size(); ++i) rhs.push_back(i == target ? 0 : 1);
  if (r <= 20) return solve_exhaustive(profile.vectors, rhs, r);
  return solve_elimination(profile.vectors, rhs, r);
}

std::optional<Prime> find_condition_prime(const DiscriminantProfile& profile, const Integer& delta, Prime p_max) {
  const std::size_t target = profile.index_of(delta);
  for (Prime p : primes_up_to(p_max)) {
    if (p == 2) continue;
    bool ok = true;
    for (std::size_t i = 0; i < profile.discs.size() && ok; ++i) {
      const int want = i == target ? 1 : -1;
      ok = legendre(profile.discs[i], p) == want;
    }
    if (ok) return p;
  }
  return std::nullopt;
}

std::uint64_t rep_quadratic(const Rational& r, const Rational& s, const Integer& delta, Prime p, int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("rep_quadratic: sign must be +1 or -1");
  const std::uint64_t d = sqrt_mod(delta, p);
  const std::uint64_t rr = rep(r, p);
  std::uint64_t sd = mul_mod(rep(s, p), d, p);
  if (sign < 0 && sd != 0) sd = p - sd;
  const std::uint64_t out = rr + sd;
  return out >= p ? out - p : out;
}

// ---------------------------------------------------------------------------

double star_discrepancy(std::vector<double>& x) {
  if (x.empty()) return 0.0;
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d = std::max(d, std::max((static_cast<double>(i) + 1) / n - x[i], x[i] - static_cast<double>(i) / n));
  }
  return d;
}

namespace {

void validate_delta(const Integer& delta) {
  if (delta <= 0 || !is_squarefree(delta)) {
    throw InvalidArgument("delta must be a positive square-free integer, got " + delta.get_str());
  }
}

bool denominators_ok(const Rational& r, const Rational& s, Prime p) {
  return !mpz_divisible_ui_p(r.get_den().get_mpz_t(), p) && !mpz_divisible_ui_p(s.get_den().get_mpz_t(), p);
}

// -1 = not qualifying, 0 = skipped, 1 = sampled
int sample_prime(const Integer& delta, const Rational& r, const Rational& s, Prime p, double& lo, double& hi) {
  if (p == 2) return 0;
  const int leg = legendre(delta, p);
  if (leg == 0) return 0;
  if (leg != 1) return -1;
  if (!denominators_ok(r, s, p)) return 0;
  const double pd = static_cast<double>(p);
  lo = static_cast<double>(rep_quadratic(r, s, delta, p, 1)) / pd;
  hi = static_cast<double>(rep_quadratic(r, s, delta, p, -1)) / pd;
  return 1;
}

}  // namespace

EquidistributionReport equidistribution_sample(const Integer& delta, std::uint64_t q, std::uint64_t a,
                                               const Rational& r, const Rational& s, std::uint64_t p_limit,
                                               unsigned bin_count, Exec exec) {
  if (s == 0) throw InvalidArgument("equidistribution_sample: s must be nonzero");
  if (bin_count < 2) throw InvalidArgument("equidistribution_sample: need at least 2 bins");
  validate_delta(delta);
  const auto primes = primes_in_progression(a, q, p_limit);
  const auto n = static_cast<std::int64_t>(primes.size());
  std::vector<double> values(2 * primes.size());
  std::vector<int> status(primes.size());
  std::vector<std::size_t> hist(bin_count, 0);
  std::size_t* h = hist.data();
  auto body = [&](std::int64_t i, std::size_t* local) {
    double x = 0, y = 0;
    status[i] = sample_prime(delta, r, s, primes[i], x, y);
    if (status[i] != 1) return;
    values[2 * i] = x;
    values[2 * i + 1] = y;
    ++local[std::min<std::size_t>(bin_count - 1, static_cast<std::size_t>(x * bin_count))];
    ++local[std::min<std::size_t>(bin_count - 1, static_cast<std::size_t>(y * bin_count))];
  };
  if (exec == Exec::parallel) {
#pragma omp parallel num_threads(thread_count())
    {
      std::vector<std::size_t> local(bin_count, 0);
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < n; ++i) body(i, local.data());
#pragma omp critical
      for (unsigned b = 0; b < bin_count; ++b) h[b] += local[b];
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i, h);
  }

  EquidistributionReport out;
  out.delta = delta;
  out.q = q;
  out.a = a;
  out.p_limit = p_limit;
  std::vector<double> pts;
  for (std::int64_t i = 0; i < n; ++i) {
    if (status[i] == 0) ++out.skipped;
    if (status[i] != 1) continue;
    ++out.primes_used;
    pts.push_back(values[2 * i]);
    pts.push_back(values[2 * i + 1]);
  }
  if (pts.empty()) throw EmptySampleSet("no qualifying primes up to " + std::to_string(p_limit));
  out.samples = pts.size();
  for (unsigned b = 0; b < bin_count; ++b) {
    out.bins.push_back({static_cast<double>(b) / bin_count, static_cast<double>(b + 1) / bin_count,
                        static_cast<double>(hist[b]) / static_cast<double>(out.samples)});
  }
  out.star_discrepancy = star_discrepancy(pts);
  return out;
}

WindowCount window_count(const Integer& delta, std::uint64_t q, std::uint64_t a, const Rational& r,
                         const Rational& s, std::uint64_t N, double window_delta, double alpha, double beta) {
  if (!(0 <= alpha && alpha < beta && beta <= 1)) throw InvalidArgument("window_count: need 0 <= alpha < beta <= 1");
  if (!(window_delta > 0)) throw InvalidArgument("window_count: window_delta must be positive");
  if (s == 0) throw InvalidArgument("window_count: s must be nonzero");
  validate_delta(delta);
  const auto upper = static_cast<std::uint64_t>(std::ceil((1.0 + window_delta) * static_cast<double>(N)));
  WindowCount out;
  for (Prime p : primes_in_progression(a, q, upper)) {
    if (p < N || static_cast<double>(p) >= (1.0 + window_delta) * static_cast<double>(N)) continue;
    double x = 0, y = 0;
    if (sample_prime(delta, r, s, p, x, y) != 1) continue;
    ++out.qualifying;
    if ((x >= alpha && x < beta) || (y >= alpha && y < beta)) ++out.count;
  }
  return out;
}

// ---------------------------------------------------------------------------

ClassVerdict class_c_check(const DiscriminantProfile& profile) {
  ClassVerdict v;
  const auto& d = profile.discs;
  if (d.empty()) {
    v.note = "all parameters rational";
    return v;
  }
  if (d.size() > 3) {
    v.note = std::to_string(d.size()) + " distinct quadratic fields";
    return v;
  }
  std::vector<Integer> cand{Integer(1), Integer(-1)};
  for (const auto& x : d) {
    cand.push_back(x);
    for (const auto& y : d) cand.push_back(squarefree_part(Rational(x * y)));
  }
  for (const auto& d1 : cand) {
    for (const auto& d2 : cand) {
      if (gcd(d1, d2) != 1) continue;
      const Integer d12 = d1 * d2;
      const bool covers = std::all_of(d.begin(), d.end(), [&](const Integer& x) { return x == d1 || x == d2 || x == d12; });
      if (covers) {
        v.value = true;
        v.note = "D1 = " + d1.get_str() + ", D2 = " + d2.get_str();
        if (profile.has_negative()) v.note += "; negative discriminant part present";
        return v;
      }
    }
  }
  v.note = "no square-free D1, D2 with square-free product cover the fields";
  return v;
}

ClassVerdict class_c_check(const RatPoly& f, const RatPoly& g) {
  ClassVerdict v;
  try {
    return class_c_check(discriminant_profile(f, g));
  } catch (const UnsupportedFactorization& e) {
    v.supported = false;
    v.note = e.what();
    return v;
  }
}

ClassVerdict class_c_check(const HypergeomSeq& seq) { return class_c_check(seq.f(), seq.g()); }

}  // namespace hgs
