#include "hgs/asymmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hgs/errors.hpp"
#include "hgs/padic.hpp"

namespace hgs {

std::string format_certificate(const AsymmetryCertificate& c) {
  std::ostringstream os;
  os << "certificate v1\n"
     << "p = " << c.p << "\n"
     << "m_f = " << c.m_f << "\n"
     << "m_g = " << c.m_g << "\n"
     << "slope = " << c.slope.get_str() << "\n"
     << "envelope_A = " << c.envelope_A.get_str() << "\n"
     << "envelope_B = " << c.envelope_B.get_str() << "\n"
     << "envelope_C = " << c.envelope_C << "\n"
     << "envelope_d = " << c.envelope_d << "\n"
     << "u0_valuation = " << c.u0_valuation << "\n";
  return os.str();
}

AsymmetryCertificate parse_certificate(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "certificate v1") throw ParseError("missing 'certificate v1' header");
  std::map<std::string, std::string> kv;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) throw ParseError("malformed certificate line: " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 3);
  }
  auto get = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("certificate field missing: " + key);
    return it->second;
  };
  auto rational = [&](const std::string& key) {
    Rational r;
    if (r.set_str(get(key), 10) != 0) throw ParseError("bad rational in field " + key);
    r.canonicalize();
    return r;
  };
  try {
    AsymmetryCertificate c;
    c.p = std::stoull(get("p"));
    c.m_f = std::stoi(get("m_f"));
    c.m_g = std::stoi(get("m_g"));
    c.slope = rational("slope");
    c.envelope_A = rational("envelope_A");
    c.envelope_B = rational("envelope_B");
    c.envelope_C = std::stoi(get("envelope_C"));
    c.envelope_d = std::stoi(get("envelope_d"));
    c.u0_valuation = std::stol(get("u0_valuation"));
    return c;
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("bad integer in certificate: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

PairData::PairData(const RatPoly& f, const RatPoly& g)
    : f_(f), g_(g), kernel_(squarefree_kernel(f * g)), df_(squarefree_decomposition(f)),
      dg_(squarefree_decomposition(g)) {}

PrimeReport PairData::analyze(Prime p) const {
  PrimeReport r;
  r.p = p;
  auto unit = [p](const Rational& c) {
    return !mpz_divisible_ui_p(c.get_num().get_mpz_t(), p) && !mpz_divisible_ui_p(c.get_den().get_mpz_t(), p);
  };
  r.hensel = unit(f_.lead()) && unit(g_.lead()) && is_hensel_prime(kernel_, p);
  if (!r.hensel) return r;
  r.m_f = count_roots_with_multiplicity(df_, p);
  r.m_g = count_roots_with_multiplicity(dg_, p);
  return r;
}

int PairData::degree() const { return std::max(f_.degree(), g_.degree()); }

Integer PairData::coefficient_bound() const {
  Integer best = 1;
  for (const auto* parts : {&df_, &dg_}) {
    for (const auto& [s, k] : *parts) {
      Integer sum = 0;
      for (const auto& c : primitive_form(s).coeffs) sum += abs(c);
      best = std::max(best, sum);
    }
  }
  return best;
}

bool is_p_symmetric(const RatPoly& f, const RatPoly& g, Prime p) {
  if (!is_prime(p)) throw InvalidArgument("is_p_symmetric: modulus is not prime");
  const PrimeReport r = PairData(f, g).analyze(p);
  if (!r.hensel) throw NotHenselPrime(std::to_string(p) + " is not a Hensel prime for f*g");
  return r.m_f == r.m_g;
}

bool is_p_symmetric(const HypergeomSeq& seq, Prime p) { return is_p_symmetric(seq.f(), seq.g(), p); }

std::string ScanSummary::to_string() const {
  std::ostringstream os;
  os << "range [" << p_min << ", " << p_max << "]: " << primes_scanned << " primes, " << non_hensel
     << " not Hensel, " << excluded << " excluded, " << symmetric << " symmetric, " << asymmetric << " asymmetric";
  return os.str();
}

namespace {

bool divides_any(Prime p, const std::vector<Integer>& values) {
  for (const auto& v : values) {
    if (v != 0 && mpz_divisible_ui_p(v.get_mpz_t(), p)) return true;
  }
  return false;
}

enum class Status { excluded, non_hensel, symmetric, asymmetric };

struct Scanner {
  const PairData& data;
  std::vector<Integer> avoid;

  Status classify(Prime p, PrimeReport& r) const {
    if (divides_any(p, avoid)) return Status::excluded;
    r = data.analyze(p);
    if (!r.hensel) return Status::non_hensel;
    return r.m_f == r.m_g ? Status::symmetric : Status::asymmetric;
  }
};

void tally(ScanSummary& s, Status st) {
  ++s.primes_scanned;
  switch (st) {
    case Status::excluded: ++s.excluded; break;
    case Status::non_hensel: ++s.non_hensel; break;
    case Status::symmetric: ++s.symmetric; break;
    case Status::asymmetric: ++s.asymmetric; break;
  }
}

void classify_block(const Scanner& sc, const std::vector<Prime>& primes, std::size_t lo, std::size_t hi,
                    std::vector<Status>& st, std::vector<PrimeReport>& rep, Exec exec) {
  const auto a = static_cast<std::int64_t>(lo), b = static_cast<std::int64_t>(hi);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count())
    for (std::int64_t i = a; i < b; ++i) st[i] = sc.classify(primes[i], rep[i]);
  } else {
    for (std::int64_t i = a; i < b; ++i) st[i] = sc.classify(primes[i], rep[i]);
  }
}

AsymmetryCertificate certificate_from(const PairData& data, const PrimeReport& r, long u0_valuation) {
  AsymmetryCertificate c;
  c.p = r.p;
  c.m_f = r.m_f;
  c.m_g = r.m_g;
  c.slope = Rational(r.m_g - r.m_f, static_cast<long>(r.p - 1));
  c.slope.canonicalize();
  c.envelope_A = abs(c.slope);
  c.envelope_B = Rational(data.coefficient_bound());
  c.envelope_C = r.m_f + r.m_g;
  c.envelope_d = data.degree();
  c.u0_valuation = u0_valuation;
  return c;
}

std::vector<Prime> primes_in(Prime p_min, Prime p_max) {
  std::vector<Prime> out;
  for (Prime p : primes_up_to(p_max)) {
    if (p >= p_min) out.push_back(p);
  }
  return out;
}

ScanResult scan_first(const PairData& data, std::vector<Integer> avoid, Prime p_min, Prime p_max, Exec exec,
                      const Rational* u0) {
  if (p_min < 2) p_min = 2;
  ScanResult out;
  out.summary.p_min = p_min;
  out.summary.p_max = p_max;
  const auto primes = primes_in(p_min, p_max);
  const Scanner sc{data, std::move(avoid)};
  std::vector<Status> st(primes.size());
  std::vector<PrimeReport> rep(primes.size());
  constexpr std::size_t kBlock = 256;
  for (std::size_t lo = 0; lo < primes.size(); lo += kBlock) {
    const std::size_t hi = std::min(primes.size(), lo + kBlock);
    classify_block(sc, primes, lo, hi, st, rep, exec);
    for (std::size_t i = lo; i < hi; ++i) {
      tally(out.summary, st[i]);
      if (st[i] == Status::asymmetric) {
        const long v0 = u0 ? padic_valuation(*u0, primes[i]).value() : 0;
        out.certificate = certificate_from(data, rep[i], v0);
        return out;
      }
    }
  }
  return out;
}

std::vector<Integer> with_u0(const HypergeomSeq& seq, std::vector<Integer> avoid) {
  avoid.push_back(seq.u0().get_num());
  avoid.push_back(seq.u0().get_den());
  return avoid;
}

}  // namespace

ScanResult find_asymmetric_prime(const HypergeomSeq& seq, Prime p_min, Prime p_max, const ScanOptions& opts) {
  if (seq.u0() == 0) throw DegenerateSequence("zero sequence has no valuation certificate");
  const PairData data(seq.f(), seq.g());
  return scan_first(data, with_u0(seq, opts.avoid), p_min, p_max, opts.exec, &seq.u0());
}

ScanResult find_asymmetric_prime(const RatPoly& f, const RatPoly& g, Prime p_min, Prime p_max,
                                 const ScanOptions& opts) {
  const PairData data(f, g);
  return scan_first(data, opts.avoid, p_min, p_max, opts.exec, nullptr);
}

std::vector<AsymmetryCertificate> all_asymmetric_primes(const HypergeomSeq& seq, Prime p_min, Prime p_max,
                                                        const ScanOptions& opts, ScanSummary* summary) {
  if (seq.u0() == 0) throw DegenerateSequence("zero sequence has no valuation certificate");
  if (p_min < 2) p_min = 2;
  const PairData data(seq.f(), seq.g());
  const auto primes = primes_in(p_min, p_max);
  const Scanner sc{data, with_u0(seq, opts.avoid)};
  std::vector<Status> st(primes.size());
  std::vector<PrimeReport> rep(primes.size());
  classify_block(sc, primes, 0, primes.size(), st, rep, opts.exec);
  ScanSummary s;
  s.p_min = p_min;
  s.p_max = p_max;
  std::vector<AsymmetryCertificate> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    tally(s, st[i]);
    if (st[i] == Status::asymmetric) out.push_back(certificate_from(data, rep[i], 0));
  }
  if (summary) *summary = s;
  return out;
}

AsymmetryCertificate make_certificate(const HypergeomSeq& seq, Prime p) {
  if (!is_prime(p)) throw InvalidArgument("make_certificate: modulus is not prime");
  if (seq.u0() == 0) throw DegenerateSequence("zero sequence has no valuation certificate");
  const PairData data(seq.f(), seq.g());
  const PrimeReport r = data.analyze(p);
  if (!r.hensel) throw NotHenselPrime(std::to_string(p) + " is not a Hensel prime for f*g");
  if (r.m_f == r.m_g) throw InvalidArgument("sequence is " + std::to_string(p) + "-symmetric");
  return certificate_from(data, r, padic_valuation(seq.u0(), p).value());
}

// ---------------------------------------------------------------------------

Envelope::Envelope(const AsymmetryCertificate& cert) : cert_(cert) {
  a_ = static_cast<long double>(cert.envelope_A.get_d());
  log_b_ = std::log(static_cast<long double>(cert.envelope_B.get_d()));
  log_p_ = std::log(static_cast<long double>(cert.p));
}

double Envelope::operator()(Index n) const {
  const long double x = static_cast<long double>(n);
  const long double logp_term = (log_b_ + cert_.envelope_d * std::log(x)) / log_p_;
  return static_cast<double>(a_ * x - cert_.envelope_C * (logp_term + 2) - std::labs(cert_.u0_valuation));
}

std::optional<Index> Envelope::crossing(double threshold, Index cap) const {
  if (a_ <= 0) return std::nullopt;
  // L is convex in n; its real minimum is at C d / (A ln p)
  const long double trough = cert_.envelope_C * cert_.envelope_d / (a_ * log_p_);
  Index lo = std::max<Index>(1, static_cast<Index>(std::floor(trough)));
  if ((*this)(lo + 1) < (*this)(lo)) ++lo;
  if ((*this)(lo) > threshold) return Index{1};
  Index hi = lo;
  while ((*this)(hi) <= threshold) {
    if (hi > cap) return std::nullopt;
    lo = hi;
    hi = 2 * hi + 1;
  }
  // L(lo) <= threshold < L(hi) with L increasing on [lo, hi]
  while (hi - lo > 1) {
    const Index mid = lo + (hi - lo) / 2;
    if ((*this)(mid) > threshold)
      hi = mid;
    else
      lo = mid;
  }
  if (hi > cap) return std::nullopt;
  return hi;
}

Envelope certified_envelope(const AsymmetryCertificate& cert, const HypergeomSeq& seq) {
  const AsymmetryCertificate fresh = make_certificate(seq, cert.p);
  if (fresh.m_f != cert.m_f || fresh.m_g != cert.m_g || fresh.envelope_B != cert.envelope_B ||
      fresh.envelope_d != cert.envelope_d || fresh.u0_valuation != cert.u0_valuation) {
    throw InvalidArgument("certificate does not match the sequence");
  }
  return Envelope(fresh);
}

// ---------------------------------------------------------------------------

SlopeFit slope_fit(const HypergeomSeq& seq, Prime p, Index n_max, Exec exec) {
  if (n_max < 4) throw InvalidArgument("slope_fit: n_max must be >= 4");
  const auto prof = valuation_profile(seq, p, n_max, exec);
  SlopeFit out;
  const PrimeReport r = PairData(seq.f(), seq.g()).analyze(p);
  out.expected = r.hensel ? static_cast<double>(r.m_g - r.m_f) / static_cast<double>(p - 1) : std::nan("");
  const Index lo = n_max / 2;
  long double sx = 0, sy = 0, sxx = 0, sxy = 0, k = 0;
  for (Index n = lo; n <= n_max; ++n) {
    if (prof[n].is_infinite()) throw DegenerateSequence("sequence vanishes; valuations are infinite");
    const long double x = n, y = prof[n].value();
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    k += 1;
  }
  out.slope = static_cast<double>((k * sxy - sx * sy) / (k * sxx - sx * sx));
  for (Index n = std::max<Index>(lo, 2); n <= n_max; ++n) {
    const double dev = std::fabs(prof[n].value() - out.slope * static_cast<double>(n)) / std::log(static_cast<double>(n));
    out.max_log_deviation = std::max(out.max_log_deviation, dev);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// nullopt when the factorization is not complete in degree <= 2
std::optional<std::map<Integer, long>> field_labels(const RatPoly& p, bool& irrational) {
  std::map<Integer, long> labels;
  const FactoredPoly fp = factor(p);
  if (!fp.quadratic_complete()) return std::nullopt;
  for (const auto& fac : fp.factors) {
    if (fac.poly.degree() == 1) {
      labels[Integer(1)] += fac.multiplicity;
    } else {
      irrational = true;
      labels[squarefree_part(discriminant_quadratic(fac.poly))] += 2 * static_cast<long>(fac.multiplicity);
    }
  }
  return labels;
}

}  // namespace

ClassVerdict class_d_quadratic_check(const RatPoly& f, const RatPoly& g) {
  ClassVerdict v;
  bool irrational = false;
  const auto lf = field_labels(f, irrational);
  const auto lg = field_labels(g, irrational);
  if (!lf || !lg) {
    v.supported = false;
    v.note = "factorization has an unsplit factor of degree >= 3";
    return v;
  }
  if (!irrational) {
    v.note = "all parameters rational";
    return v;
  }
  v.value = *lf != *lg;
  auto show = [](const std::map<Integer, long>& m) {
    std::string s = "{";
    bool first = true;
    for (const auto& [d, k] : m) {
      for (long i = 0; i < k; ++i) {
        s += (first ? "" : ",") + d.get_str();
        first = false;
      }
    }
    return s + "}";
  };
  v.note = "fields of f " + show(*lf) + ", fields of g " + show(*lg);
  return v;
}

ClassVerdict class_d_quadratic_check(const HypergeomSeq& seq) { return class_d_quadratic_check(seq.f(), seq.g()); }

}  // namespace hgs
