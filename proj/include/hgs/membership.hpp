#pragma once

// Deciding whether a target value occurs in a hypergeometric sequence.

#include <optional>
#include <string>
#include <vector>

#include "hgs/asymmetry.hpp"
#include "hgs/hyperseq.hpp"
#include "hgs/parallel.hpp"

namespace hgs {

struct MembershipConfig {
  Prime prime_cap = 10'000;
  /// Refuse certificates whose search bound n0 exceeds this.
  Index term_cap = 10'000'000;
  /// Use this prime instead of searching (must be an asymmetric Hensel prime
  /// coprime to u0 and t).
  std::optional<Prime> forced_prime;
};

struct MembershipVerdict {
  enum class Outcome { yes, no, unsupported };

  Outcome outcome = Outcome::unsupported;
  /// Yes: u_witness = t
  std::optional<Index> witness;
  std::optional<AsymmetryCertificate> certificate;
  /// |nu_p(u_n)| > |nu_p(t)| for every n >= bound_n0
  std::optional<Index> bound_n0;
  std::size_t terms_checked = 0;
  std::string reason;
  double seconds = 0.0;

  std::string outcome_name() const;
};

MembershipVerdict decide(const HypergeomSeq& seq, const Rational& t, const MembershipConfig& config = {});

struct MembershipQuery {
  HypergeomSeq seq;
  Rational target;
};

/// Independent verdicts in input order; failures become Unsupported items.
std::vector<MembershipVerdict> decide_batch(const std::vector<MembershipQuery>& queries,
                                            const MembershipConfig& config = {}, Exec exec = Exec::parallel);

std::string format_verdict(const MembershipVerdict& v);

}  // namespace hgs
