#include "hgs/parse.hpp"

#include <cctype>
#include <fstream>

#include "hgs/errors.hpp"

namespace hgs {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  RatPoly parse() {
    RatPoly out = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("at position " + std::to_string(i_) + ": " + what);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RatPoly expr() {
    RatPoly acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RatPoly term() {
    RatPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = i_;
        RatPoly d = unary();
        if (d.degree() != 0) {
          i_ = at;
          fail("division by a non-constant");
        }
        acc *= Rational(1) / d.lead();
      } else {
        return acc;
      }
    }
  }

  RatPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatPoly power() {
    RatPoly base = atom();
    if (accept('^')) {
      skip();
      const std::size_t at = i_;
      const Integer e = integer();
      if (e > kMaxExponent) {
        i_ = at;
        fail("exponent exceeds " + std::to_string(kMaxExponent));
      }
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer integer() {
    skip();
    const std::size_t begin = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (begin == i_) fail("expected an integer");
    return Integer(std::string(s_.substr(begin, i_ - begin)));
  }

  RatPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == 'x') {
      ++i_;
      return RatPoly::x();
    }
    if (c == '(') {
      ++i_;
      RatPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatPoly::constant(Rational(integer()));
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

RatPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

Rational parse_rational(std::string_view text) {
  const std::string s(trim(text));
  if (s.empty()) throw ParseError("empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  const std::size_t digits_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_begin) throw ParseError("at position " + std::to_string(i) + ": expected digits");
  Integer num(s.substr(digits_begin, i - digits_begin));
  if (s[0] == '-') num = -num;
  Integer den = 1;
  if (i < s.size()) {
    if (s[i] != '/') throw ParseError("at position " + std::to_string(i) + ": unexpected '" + s[i] + "'");
    const std::size_t b = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == b || i != s.size()) throw ParseError("at position " + std::to_string(i) + ": bad denominator");
    den = Integer(s.substr(b));
    if (den == 0) throw ParseError("zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

SequenceSpec parse_sequence_spec(std::string_view line) {
  SequenceSpec out;
  bool have_f = false, have_g = false;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t end = line.find(';', pos);
    if (end == std::string_view::npos) end = line.size();
    const std::string_view field = trim(line.substr(pos, end - pos));
    pos = end + 1;
    if (field.empty()) continue;
    const std::size_t eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError("spec field without '=': " + std::string(field));
    const std::string_view key = trim(field.substr(0, eq));
    const std::string_view value = field.substr(eq + 1);
    if (key == "f") {
      out.f = parse_poly(value);
      have_f = true;
    } else if (key == "g") {
      out.g = parse_poly(value);
      have_g = true;
    } else if (key == "u0") {
      out.u0 = parse_rational(value);
    } else {
      throw ParseError("unknown spec field '" + std::string(key) + "'");
    }
  }
  if (!have_f || !have_g) throw ParseError("spec needs both f and g");
  return out;
}

std::string format_sequence_spec(const HypergeomSeq& seq) {
  return "f = " + seq.f().to_string() + "; g = " + seq.g().to_string() + "; u0 = " + seq.u0().get_str();
}

std::vector<SequenceSpec> parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open spec file " + path);
  std::vector<SequenceSpec> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(parse_sequence_spec(t));
  }
  return out;
}

}  // namespace hgs
