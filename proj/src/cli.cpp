#include "hgs/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>

#include <CLI11.hpp>

#include "hgs/asymmetry.hpp"
#include "hgs/errors.hpp"
#include "hgs/hyperseq.hpp"
#include "hgs/membership.hpp"
#include "hgs/padic.hpp"
#include "hgs/parallel.hpp"
#include "hgs/parse.hpp"
#include "hgs/quadratic.hpp"

namespace hgs::cli {

namespace {

enum class Format { human, csv, text };

struct SeqArgs {
  std::string f, g, u0 = "1", spec;
  std::size_t index = 0;
};

void add_seq_options(CLI::App* sub, SeqArgs& a) {
  sub->add_option("--f", a.f, "polynomial f in f(n) u_n = g(n) u_{n-1}");
  sub->add_option("--g", a.g, "polynomial g");
  sub->add_option("--u0", a.u0, "initial value (rational)");
  sub->add_option("--spec", a.spec, "file of records 'f = ...; g = ...; u0 = ...'");
  sub->add_option("--index", a.index, "record index within --spec");
}

SequenceSpec load_spec(const SeqArgs& a) {
  if (!a.spec.empty()) {
    const auto records = parse_spec_file(a.spec);
    if (a.index >= records.size()) throw InvalidArgument("spec file has no record " + std::to_string(a.index));
    return records[a.index];
  }
  if (a.f.empty() || a.g.empty()) throw CLI::ValidationError("--f and --g (or --spec) are required");
  SequenceSpec s;
  s.f = parse_poly(a.f);
  s.g = parse_poly(a.g);
  s.u0 = parse_rational(a.u0);
  return s;
}

HypergeomSeq load_seq(const SeqArgs& a) {
  const SequenceSpec s = load_spec(a);
  return make_sequence(s.f, s.g, s.u0);
}

void header(std::ostream& out, Format fmt, const std::string& what) {
  if (fmt == Format::csv) out << "# hgs " << what << " v1\n";
  if (fmt == Format::text) out << what << " v1\n";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// --- subcommands -----------------------------------------------------------

void cmd_validate(const SeqArgs& a, Format fmt, std::ostream& out) {
  const HypergeomSeq s = load_seq(a);
  const auto& fl = s.flags();
  std::string roots;
  for (const auto& r : fl.g_positive_integer_roots) roots += (roots.empty() ? "" : " ") + r.get_str();
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"f", s.f().to_string()},
      {"g", s.g().to_string()},
      {"u0", s.u0().get_str()},
      {"f_no_nonnegative_integer_roots", yes_no(fl.f_no_nonnegative_integer_roots)},
      {"coprime", yes_no(fl.coprime)},
      {"common_factor_removed", yes_no(fl.common_factor_removed)},
      {"zero_initial", yes_no(fl.zero_initial)},
      {"g_positive_integer_roots", roots.empty() ? "none" : roots},
      {"regular", yes_no(is_regular(s))},
  };
  header(out, fmt, "validate");
  if (fmt == Format::csv) out << "key,value\n";
  for (const auto& [k, v] : rows) {
    if (fmt == Format::csv)
      out << k << "," << v << "\n";
    else
      out << k << " = " << v << "\n";
  }
}

void cmd_terms(const SeqArgs& a, Index n, Format fmt, std::ostream& out) {
  const HypergeomSeq s = load_seq(a);
  header(out, fmt, "terms");
  if (fmt == Format::csv) out << "n,u_n\n";
  TermCursor c(s);
  for (Index i = 0; i <= n; ++i) {
    if (i > 0) c.advance();
    if (fmt == Format::csv)
      out << i << "," << c.value().get_str() << "\n";
    else
      out << "u_" << i << " = " << c.value().get_str() << "\n";
  }
}

void cmd_height(const SeqArgs& a, Index n_max, Index stride, Prime p, Format fmt, std::ostream& out) {
  const HypergeomSeq s = load_seq(a);
  const HeightProfile prof = height_profile(s, n_max, stride);
  const auto vals = valuation_profile(s, p, n_max);
  out << std::setprecision(12);
  header(out, fmt, "height");
  if (fmt == Format::csv) out << "n,height_float,valuation_p\n";
  for (const auto& smp : prof.samples) {
    std::ostringstream v;
    v << vals[smp.n];
    if (fmt == Format::csv)
      out << smp.n << "," << smp.height << "," << v.str() << "\n";
    else
      out << "n = " << smp.n << "  h = " << smp.height << "  nu_" << p << " = " << v.str() << "\n";
  }
  out << (fmt == Format::csv ? "# " : "") << "growth_constant = " << prof.growth_constant << "\n";
}

void cmd_valuation(const SeqArgs& a, Prime p, Index n_max, Format fmt, std::ostream& out) {
  const HypergeomSeq s = load_seq(a);
  const auto vals = valuation_profile(s, p, n_max);
  header(out, fmt, "valuation");
  if (fmt == Format::csv) out << "n,valuation_p\n";
  for (Index n = 0; n <= n_max; ++n) {
    if (fmt == Format::csv)
      out << n << "," << vals[n] << "\n";
    else
      out << "nu_" << p << "(u_" << n << ") = " << vals[n] << "\n";
  }
}

void cmd_regularize(const SeqArgs& a, Format fmt, std::ostream& out) {
  const HypergeomSeq s = load_seq(a);
  const RegularizationResult r = regularize(s);
  header(out, fmt, "regularize");
  out << "f~ = " << r.regular_seq.f().to_string() << "\n";
  out << "g~ = " << r.regular_seq.g().to_string() << "\n";
  out << "u0 = " << r.regular_seq.u0().get_str() << "\n";
  out << "q = " << r.correction.to_string() << "\n";
  for (std::size_t i = 0; i < r.shift_classes.size(); ++i) {
    const auto& c = r.shift_classes[i];
    out << "class " << i << ": h = " << c.representative.to_string() << ", gamma = " << c.gamma << ", members =";
    for (const auto& m : c.members) {
      out << " [" << (m.from_g ? "g" : "f") << " " << m.poly.to_string() << " shift " << m.shift.get_str()
          << " mult " << m.multiplicity << "]";
    }
    out << "\n";
  }
}

void cmd_asymmetry(const SeqArgs& a, Prime p_min, Prime p_max, Format fmt, std::ostream& out) {
  const SequenceSpec spec = load_spec(a);
  ScanResult res;
  try {
    const HypergeomSeq s = make_sequence(spec.f, spec.g, spec.u0);
    res = find_asymmetric_prime(s, p_min, p_max);
  } catch (const InvalidF& e) {
    out << "note = f is not a valid recurrence polynomial (" << e.what() << "); analysing the pair only\n";
    res = find_asymmetric_prime(spec.f, spec.g, p_min, p_max);
  }
  if (res.certificate) {
    if (fmt == Format::human) {
      const auto& c = *res.certificate;
      out << "asymmetric prime p = " << c.p << ": m_f = " << c.m_f << ", m_g = " << c.m_g
          << ", slope = " << c.slope.get_str() << "\n";
    }
    out << format_certificate(*res.certificate);
  } else {
    out << "no asymmetric prime\n";
  }
  out << "scan = " << res.summary.to_string() << "\n";
}

void cmd_classify(const SeqArgs& a, Prime p_max, std::ostream& out) {
  const SequenceSpec spec = load_spec(a);
  auto show = [&](const std::string& name, const ClassVerdict& v) {
    out << name << " = " << (v.supported ? yes_no(v.value) : "unsupported") << "  (" << v.note << ")\n";
  };
  show("class_C", class_c_check(spec.f, spec.g));
  show("class_D", class_d_quadratic_check(spec.f, spec.g));
  DiscriminantProfile prof;
  try {
    prof = discriminant_profile(spec.f, spec.g);
  } catch (const UnsupportedFactorization&) {
    return;
  }
  for (const auto& d : prof.discs) {
    out << "delta = " << d.get_str() << ": ";
    const auto eps = exists_condition_prime(prof, d);
    if (!eps) {
      out << "no condition prime (parity system unsolvable)\n";
      continue;
    }
    const auto p = find_condition_prime(prof, d, p_max);
    out << "condition prime = " << (p ? std::to_string(*p) : "none <= " + std::to_string(p_max)) << "\n";
  }
}

void cmd_membership(const SeqArgs& a, const std::string& target, const MembershipConfig& cfg, Format fmt,
                    std::ostream& out) {
  const HypergeomSeq s = load_seq(a);
  const MembershipVerdict v = decide(s, parse_rational(target), cfg);
  if (fmt == Format::csv) {
    out << "# hgs membership v1\noutcome,witness,bound_n0,p,terms_checked,seconds\n";
    out << v.outcome_name() << "," << (v.witness ? std::to_string(*v.witness) : "") << ","
        << (v.bound_n0 ? std::to_string(*v.bound_n0) : "") << ","
        << (v.certificate ? std::to_string(v.certificate->p) : "") << "," << v.terms_checked << "," << v.seconds
        << "\n";
    return;
  }
  if (fmt == Format::human) {
    if (v.outcome == MembershipVerdict::Outcome::yes)
      out << "Yes(" << *v.witness << ")\n";
    else if (v.outcome == MembershipVerdict::Outcome::no)
      out << "No\n";
    else
      out << "Unsupported\n";
  }
  out << format_verdict(v);
}

struct EquidistArgs {
  std::string delta = "2", r = "0", s = "1";
  std::uint64_t q = 1, a = 0, p_limit = 100000;
  unsigned bins = 10;
};

void cmd_equidist(const EquidistArgs& e, std::ostream& out) {
  const Integer delta(e.delta);
  const auto rep = equidistribution_sample(delta, e.q, e.a, parse_rational(e.r), parse_rational(e.s), e.p_limit, e.bins);
  out << std::setprecision(10);
  out << "# hgs equidist v1\nbin_left,bin_right,frequency\n";
  for (const auto& b : rep.bins) out << b.left << "," << b.right << "," << b.frequency << "\n";
  out << "# delta=" << rep.delta.get_str() << " q=" << rep.q << " a=" << rep.a << " p_limit=" << rep.p_limit
      << " primes=" << rep.primes_used << " samples=" << rep.samples << " skipped=" << rep.skipped
      << " star_discrepancy=" << rep.star_discrepancy << "\n";
}

struct PadicArgs {
  std::string poly;
  Prime p = 0;
  std::string root;
  unsigned k = 20;
  unsigned freq = 0;
  int s = -1;
};

void cmd_padic(const SeqArgs& a, const PadicArgs& pa, std::ostream& out) {
  if (pa.s >= 0) {
    const HypergeomSeq seq = load_seq(a);
    const auto v = valuation_at_prime_power_general(seq, pa.p, static_cast<unsigned>(pa.s));
    out << "direct = " << v.direct << "\ndigit_formula = " << v.digit_formula << "\n";
    return;
  }
  if (pa.poly.empty()) throw CLI::ValidationError("--poly is required unless --s is given");
  const RatPoly f = parse_poly(pa.poly);
  std::vector<Integer> starts;
  if (!pa.root.empty()) {
    starts.emplace_back(pa.root);
  } else {
    for (auto r : roots_mod_p(reduce_mod_p(f, pa.p))) starts.push_back(to_integer(r));
  }
  for (const auto& r0 : starts) {
    const PadicRoot root = hensel_lift(f, pa.p, r0, pa.k);
    out << "root " << r0.get_str() << " mod " << pa.p << ": value = " << root.value().get_str() << "\ndigits = ";
    write_digits(out, root);
    out << "\n";
    if (pa.freq > 0) {
      const auto fr = digit_frequency(root, pa.freq);
      out << "frequencies =";
      for (double x : fr) out << " " << x;
      out << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hypergeometric sequence toolkit", "hgs"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  std::string format = "human";
  app.add_option("--threads", threads, "threads for parallel kernels (default HGS_THREADS or all)");
  app.add_option("--format", format, "human | csv | text")->check(CLI::IsMember({"human", "csv", "text"}));
  std::function<void(Format)> action;

  SeqArgs sa;
  Index n = 10, n_max = 100, stride = 1;
  Prime p = 2, p_min = 2, p_max = 10000;
  std::string target;
  MembershipConfig mcfg;
  Prime forced = 0;
  EquidistArgs ea;
  PadicArgs pa;

  auto* validate = app.add_subcommand("validate", "print validation flags");
  add_seq_options(validate, sa);
  validate->callback([&] { action = [&](Format f) { cmd_validate(sa, f, out); }; });

  auto* terms = app.add_subcommand("terms", "stream u_0 .. u_n");
  add_seq_options(terms, sa);
  terms->add_option("--n", n, "last index");
  terms->callback([&] { action = [&](Format f) { cmd_terms(sa, n, f, out); }; });

  auto* height = app.add_subcommand("height", "Weil height profile");
  add_seq_options(height, sa);
  height->add_option("--nmax", n_max);
  height->add_option("--stride", stride)->check(CLI::PositiveNumber);
  height->add_option("--p", p, "prime for the valuation column");
  height->callback([&] { action = [&](Format f) { cmd_height(sa, n_max, stride, p, f, out); }; });

  auto* valuation = app.add_subcommand("valuation", "p-adic valuations of u_0 .. u_nmax");
  add_seq_options(valuation, sa);
  valuation->add_option("--p", p)->required();
  valuation->add_option("--nmax", n_max);
  valuation->callback([&] { action = [&](Format f) { cmd_valuation(sa, p, n_max, f, out); }; });

  auto* reg = app.add_subcommand("regularize", "regular recurrence and correction factor");
  add_seq_options(reg, sa);
  reg->callback([&] { action = [&](Format f) { cmd_regularize(sa, f, out); }; });

  auto* asym = app.add_subcommand("asymmetry", "search for an asymmetric prime");
  add_seq_options(asym, sa);
  asym->add_option("--pmin", p_min);
  asym->add_option("--pmax", p_max);
  asym->callback([&] { action = [&](Format f) { cmd_asymmetry(sa, p_min, p_max, f, out); }; });

  auto* classify = app.add_subcommand("classify", "class C / class D checks and condition primes");
  add_seq_options(classify, sa);
  classify->add_option("--pmax", p_max, "bound for condition-prime search");
  classify->callback([&] { action = [&](Format) { cmd_classify(sa, p_max, out); }; });

  auto* member = app.add_subcommand("membership", "decide whether the target occurs");
  add_seq_options(member, sa);
  member->add_option("--target", target)->required();
  member->add_option("--prime-cap", mcfg.prime_cap);
  member->add_option("--term-cap", mcfg.term_cap);
  member->add_option("--prime", forced, "use this certificate prime");
  member->callback([&] {
    action = [&](Format f) {
      if (forced != 0) mcfg.forced_prime = forced;
      cmd_membership(sa, target, mcfg, f, out);
    };
  });

  auto* equi = app.add_subcommand("equidist", "histogram of rep(r +- s sqrt(delta)) / p");
  equi->add_option("--delta", ea.delta);
  equi->add_option("--q", ea.q);
  equi->add_option("--a", ea.a);
  equi->add_option("--r", ea.r);
  equi->add_option("--s", ea.s);
  equi->add_option("--plimit", ea.p_limit);
  equi->add_option("--bins", ea.bins);
  equi->callback([&] { action = [&](Format) { cmd_equidist(ea, out); }; });

  auto* padic = app.add_subcommand("padic", "Hensel lifts and digits, or the prime-power valuation identity");
  add_seq_options(padic, sa);
  padic->add_option("--poly", pa.poly);
  padic->add_option("--p", pa.p)->required();
  padic->add_option("--root", pa.root, "root mod p to lift (default: all)");
  padic->add_option("--k", pa.k, "digits");
  padic->add_option("--freq", pa.freq, "pattern length for digit frequencies");
  padic->add_option("--s", pa.s, "compare nu_p(u_{p^s}) with the digit formula");
  padic->callback([&] { action = [&](Format) { cmd_padic(sa, pa, out); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (threads > 0) set_thread_count(threads);
  const Format fmt = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::human;
  try {
    action(fmt);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hgs::cli
