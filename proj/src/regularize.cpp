// Shift-class regularization.
//
// Every irreducible factor of f and g is grouped with the factors that differ
// from it by an integer shift. Within a class the representative h is the
// member whose roots sit furthest left, so every member is h(x - e) with
// e >= 0 and
//
//   prod_{m=1}^{n} h(m - e) / h(m) = prod_{j=1-e}^{0} h(j) / prod_{i=0}^{e-1} h(n - i).
//
// Collecting these per member gives the correction q(n) with u_n = q(n) v_n,
// where v solves the recurrence built from the representatives alone.

#include <algorithm>
#include <map>

#include "hgs/errors.hpp"
#include "hgs/hyperseq.hpp"

namespace hgs {

Correction::Correction(Rational constant, std::vector<Term> terms)
    : constant_(std::move(constant)), terms_(std::move(terms)) {}

Rational Correction::operator()(Index n) const {
  const Rational at(to_integer(n));
  Rational num = constant_, den = 1;
  for (const auto& t : terms_) {
    Rational v = t.poly(at);
    for (long i = 0; i < std::abs(t.exponent); ++i) (t.exponent > 0 ? num : den) *= v;
  }
  if (den == 0) throw InvalidArgument("correction evaluated at a pole");
  return num / den;
}

RationalFunction Correction::expand() const {
  RatPoly num = RatPoly::constant(constant_), den = RatPoly::constant(1);
  for (const auto& t : terms_) {
    if (t.exponent > 0)
      num *= t.poly.pow(static_cast<unsigned>(t.exponent));
    else
      den *= t.poly.pow(static_cast<unsigned>(-t.exponent));
  }
  return RationalFunction(num, den);
}

std::string Correction::to_string() const { return expand().to_string(); }

namespace {

struct Item {
  RatPoly poly;
  unsigned mult;
  bool from_g;
};

struct PolyLess {
  bool operator()(const RatPoly& a, const RatPoly& b) const { return canonical_less(a, b); }
};

std::vector<Item> factor_items(const HypergeomSeq& seq) {
  std::vector<Item> items;
  for (bool from_g : {false, true}) {
    const FactoredPoly fp = factor(from_g ? seq.g() : seq.f());
    if (!fp.quadratic_complete()) {
      throw UnsupportedFactorization(std::string(from_g ? "g" : "f") +
                                     " has a factor of degree >= 3 that could not be split");
    }
    for (const auto& fac : fp.factors) items.push_back({fac.poly, fac.multiplicity, from_g});
  }
  return items;
}

// Partition into shift classes, keeping each class's members with their
// offsets d relative to the first member: member(x) = first(x + d).
std::vector<std::vector<std::pair<Item, Integer>>> group(const std::vector<Item>& items) {
  std::vector<std::vector<std::pair<Item, Integer>>> classes;
  for (const auto& it : items) {
    bool placed = false;
    for (auto& cls : classes) {
      const RatPoly& base = cls.front().first.poly;
      if (base.degree() != it.poly.degree()) continue;
      if (auto d = shift_equivalent(it.poly, base)) {
        cls.emplace_back(it, *d);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({{it, Integer(0)}});
  }
  return classes;
}

}  // namespace

RegularizationResult regularize(const HypergeomSeq& seq) {
  if (seq.flags().g_has_positive_integer_root()) {
    throw DegenerateSequence("g has a positive integer root; the sequence is eventually zero");
  }
  const auto classes = group(factor_items(seq));

  RatPoly ft = RatPoly::constant(seq.f().lead());
  RatPoly gt = RatPoly::constant(seq.g().lead());
  Rational constant = 1;
  std::map<RatPoly, long, PolyLess> exponents;
  std::vector<ShiftClass> shift_classes;

  for (const auto& cls : classes) {
    Integer dmax = cls.front().second;
    const RatPoly* rep = &cls.front().first.poly;
    for (const auto& [item, d] : cls) {
      if (d > dmax || (d == dmax && canonical_less(item.poly, *rep))) {
        dmax = d;
        rep = &item.poly;
      }
    }
    ShiftClass sc;
    sc.representative = *rep;
    for (const auto& [item, d] : cls) {
      const Integer e = dmax - d;
      sc.members.push_back({item.poly, e, item.from_g, item.mult});
      sc.gamma += item.from_g ? static_cast<long>(item.mult) : -static_cast<long>(item.mult);

      const unsigned long shift = e.get_ui();
      if (shift == 0) continue;
      Rational c = 1;
      for (long j = 1 - static_cast<long>(shift); j <= 0; ++j) c *= sc.representative(Rational(j));
      const long sign = item.from_g ? 1 : -1;
      for (unsigned k = 0; k < item.mult; ++k) {
        if (sign > 0)
          constant *= c;
        else
          constant /= c;
      }
      for (unsigned long i = 0; i < shift; ++i) {
        exponents[sc.representative.shift(-Rational(static_cast<long>(i)))] -= sign * static_cast<long>(item.mult);
      }
    }
    if (sc.gamma > 0) gt *= sc.representative.pow(static_cast<unsigned>(sc.gamma));
    if (sc.gamma < 0) ft *= sc.representative.pow(static_cast<unsigned>(-sc.gamma));
    shift_classes.push_back(std::move(sc));
  }

  std::vector<Correction::Term> terms;
  for (auto& [poly, ex] : exponents) {
    if (ex != 0) terms.push_back({poly, ex});
  }
  return RegularizationResult{make_sequence(ft, gt, seq.u0()), Correction(constant, std::move(terms)),
                              std::move(shift_classes)};
}

bool is_regular(const HypergeomSeq& seq) {
  std::vector<RatPoly> polys;
  for (const auto* p : {&seq.f(), &seq.g()}) {
    for (const auto& fac : factor(*p).factors) polys.push_back(fac.poly);
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (polys[i].degree() != polys[j].degree()) continue;
      auto d = shift_equivalent(polys[i], polys[j]);
      if (d && *d != 0) return false;
    }
  }
  return true;
}

}  // namespace hgs
