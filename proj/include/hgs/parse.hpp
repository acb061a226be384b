#pragma once

// Text forms: polynomial expressions, rationals, sequence spec records.

#include <string>
#include <string_view>
#include <vector>

#include "hgs/hyperseq.hpp"
#include "hgs/polyq.hpp"

namespace hgs {

/// Grammar: rational literals (-3, 5/2), the variable x, + - * ^ with the
/// usual precedence, parentheses; exponents are nonnegative integer literals.
/// Throws ParseError with the offending position.
RatPoly parse_poly(std::string_view text);

/// "3", "-5/2", "0". Throws ParseError.
Rational parse_rational(std::string_view text);

/// One record: "f = <poly>; g = <poly>; u0 = <rational>". Fields may appear in
/// any order; u0 defaults to 1.
struct SequenceSpec {
  RatPoly f;
  RatPoly g;
  Rational u0 = 1;
};

SequenceSpec parse_sequence_spec(std::string_view line);
std::string format_sequence_spec(const HypergeomSeq& seq);

/// Non-blank lines not starting with '#'.
std::vector<SequenceSpec> parse_spec_file(const std::string& path);

}  // namespace hgs
