#include "hgs/membership.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "hgs/errors.hpp"

namespace hgs {

std::string MembershipVerdict::outcome_name() const {
  switch (outcome) {
    case Outcome::yes: return "yes";
    case Outcome::no: return "no";
    case Outcome::unsupported: return "unsupported";
  }
  return "unsupported";
}

namespace {

using Outcome = MembershipVerdict::Outcome;

MembershipVerdict unsupported(std::string reason) {
  MembershipVerdict v;
  v.outcome = Outcome::unsupported;
  v.reason = std::move(reason);
  return v;
}

// Compare u_0 .. u_{end-1} against t.
void scan_prefix(const HypergeomSeq& seq, const Rational& t, Index end, std::optional<Prime> filter,
                 MembershipVerdict& v) {
  TermCursor c(seq);
  Valuation vt;
  if (filter) {
    c.track_prime(*filter);
    vt = padic_valuation(t, *filter);
  }
  for (Index n = 0; n < end; ++n) {
    if (n > 0) c.advance();
    ++v.terms_checked;
    if (filter && !(c.valuation(*filter) == vt)) continue;
    if (c.value() == t) {
      v.outcome = Outcome::yes;
      v.witness = n;
      return;
    }
  }
}

MembershipVerdict decide_degenerate(const HypergeomSeq& seq, const Rational& t, const MembershipConfig& config) {
  MembershipVerdict v;
  if (seq.u0() == 0) {
    v.outcome = Outcome::no;
    v.reason = "u0 = 0, every term is zero";
    return v;
  }
  const Integer& first_zero = seq.flags().g_positive_integer_roots.front();
  if (first_zero > Integer(std::to_string(config.term_cap))) {
    return unsupported("nonzero prefix of length " + first_zero.get_str() + " exceeds the term cap");
  }
  const Index end = first_zero.get_ui();
  scan_prefix(seq, t, end, std::nullopt, v);
  if (v.outcome != Outcome::yes) {
    v.outcome = Outcome::no;
    v.reason = "u_n = 0 for n >= " + first_zero.get_str() + "; prefix checked exhaustively";
  }
  return v;
}

struct Candidate {
  AsymmetryCertificate cert;
  Index n0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.cert.envelope_A != b.cert.envelope_A) return a.cert.envelope_A > b.cert.envelope_A;
  if (a.n0 != b.n0) return a.n0 < b.n0;
  return a.cert.p < b.cert.p;
}

}  // namespace

MembershipVerdict decide(const HypergeomSeq& seq, const Rational& t, const MembershipConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](MembershipVerdict v) {
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return v;
  };

  if (t == 0) {
    MembershipVerdict v;
    if (seq.u0() == 0) {
      v.outcome = Outcome::yes;
      v.witness = 0;
    } else if (seq.flags().g_has_positive_integer_root()) {
      const Integer& n = seq.flags().g_positive_integer_roots.front();
      if (!mpz_fits_ulong_p(n.get_mpz_t())) return finish(unsupported("first zero index does not fit"));
      v.outcome = Outcome::yes;
      v.witness = n.get_ui();
    } else {
      v.outcome = Outcome::no;
      v.reason = "u0 != 0 and g has no positive integer root, so no term vanishes";
    }
    return finish(v);
  }
  if (seq.flags().degenerate()) return finish(decide_degenerate(seq, t, config));

  ScanOptions opts;
  opts.avoid = {t.get_num(), t.get_den()};
  std::vector<AsymmetryCertificate> certs;
  ScanSummary summary;
  if (config.forced_prime) {
    const Prime p = *config.forced_prime;
    if (mpz_divisible_ui_p(t.get_num().get_mpz_t(), p) || mpz_divisible_ui_p(t.get_den().get_mpz_t(), p) ||
        mpz_divisible_ui_p(seq.u0().get_num().get_mpz_t(), p) || mpz_divisible_ui_p(seq.u0().get_den().get_mpz_t(), p)) {
      return finish(unsupported("forced prime " + std::to_string(p) + " divides u0 or the target"));
    }
    try {
      certs.push_back(make_certificate(seq, p));
    } catch (const Error& e) {
      return finish(unsupported("forced prime " + std::to_string(p) + ": " + e.what()));
    }
  } else {
    certs = all_asymmetric_primes(seq, 2, config.prime_cap, opts, &summary);
    if (certs.empty()) return finish(unsupported("no asymmetric prime found; " + summary.to_string()));
  }

  std::optional<Candidate> best;
  for (const auto& c : certs) {
    const Envelope env(c);
    const double threshold = static_cast<double>(std::labs(padic_valuation(t, c.p).value()));
    const auto n0 = env.crossing(threshold, config.term_cap);
    if (!n0) continue;
    Candidate cand{c, *n0};
    if (!best || better(cand, *best)) best = cand;
  }
  if (!best) return finish(unsupported("every certificate needs more than " + std::to_string(config.term_cap) + " terms"));

  MembershipVerdict v;
  v.certificate = best->cert;
  v.bound_n0 = best->n0;
  scan_prefix(seq, t, best->n0, best->cert.p, v);
  if (v.outcome != Outcome::yes) {
    v.outcome = Outcome::no;
    v.reason = "valuation envelope excludes n >= n0; prefix checked exhaustively";
  }
  return finish(v);
}

std::vector<MembershipVerdict> decide_batch(const std::vector<MembershipQuery>& queries, const MembershipConfig& config,
                                            Exec exec) {
  std::vector<MembershipVerdict> out(queries.size());
  const auto n = static_cast<std::int64_t>(queries.size());
  auto one = [&](std::int64_t i) {
    try {
      out[i] = decide(queries[i].seq, queries[i].target, config);
    } catch (const std::exception& e) {
      out[i] = unsupported(e.what());
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (std::int64_t i = 0; i < n; ++i) one(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) one(i);
  }
  return out;
}

std::string format_verdict(const MembershipVerdict& v) {
  std::ostringstream os;
  os << "verdict v1\n";
  os << "outcome = " << v.outcome_name() << "\n";
  if (v.witness) os << "witness = " << *v.witness << "\n";
  if (v.bound_n0) os << "bound_n0 = " << *v.bound_n0 << "\n";
  os << "terms_checked = " << v.terms_checked << "\n";
  if (!v.reason.empty()) os << "reason = " << v.reason << "\n";
  os << "seconds = " << v.seconds << "\n";
  if (v.certificate) os << format_certificate(*v.certificate);
  return os.str();
}

}  // namespace hgs
