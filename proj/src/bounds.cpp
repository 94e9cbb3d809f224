#include "lctlab/bounds.hpp"

#include "lctlab/numeric.hpp"
#include "lctlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace lctlab::bounds {

namespace {

CheckResult make_result(std::string name, ExtRat lhs, ExtRat rhs, Verdict verdict,
                        ExtRat margin) {
  CheckResult r;
  r.name = std::move(name);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.verdict = verdict;
  r.margin = std::move(margin);
  return r;
}

const CkEntry& last_ck(const InvariantTable& t) {
  if (t.n < 2 || t.ck.empty()) throw std::invalid_argument("table needs n >= 2");
  return t.ck.back();
}

}  // namespace

ExtRat theorem_rhs(const Rat& c_nm1, const Rat& e_n, const Rat& e_1, std::size_t n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  if (e_1 < 0 || e_n < 0) throw std::invalid_argument("masses must be nonnegative");
  if (e_1 == 0) return ExtRat::inf();
  if (e_n == 0) throw std::invalid_argument("inconsistent table: e_1 > 0 with e_n = 0");
  if (c_nm1 <= 0) throw std::invalid_argument("c_{n-1} must be positive");
  const unsigned nm1 = static_cast<unsigned>(n - 1);
  const Rat gain = rat_pow(Rat(nm1), nm1) / (rat_pow(c_nm1, nm1) * e_n);
  return ExtRat::of(c_nm1 + gain);
}

Rat openness_gain(const Rat& c, std::size_t n, const Rat& e_n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  if (c <= 0 || e_n <= 0) throw std::invalid_argument("inputs must be positive");
  const unsigned nm1 = static_cast<unsigned>(n - 1);
  return rat_pow(Rat(nm1), nm1) / (rat_pow(c, nm1) * e_n);
}

Rat f_lemma21(const Rat& t1, const Rat& t2, std::size_t n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  if (t1 <= 0 || t2 <= 0) throw std::invalid_argument("f is evaluated on positive inputs");
  const unsigned nm1 = static_cast<unsigned>(n - 1);
  return 1 / t1 + rat_pow(Rat(nm1), nm1) * rat_pow(t1, nm1) / t2;
}

bool in_domain_d(const Rat& t1, const Rat& t2, std::size_t n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  if (t1 < 0 || t2 < 0) return false;
  return rat_pow(Rat(static_cast<unsigned>(n - 1)), static_cast<unsigned>(n)) *
             rat_pow(t1, static_cast<unsigned>(n)) <=
         t2;
}

CheckResult check_main(const InvariantTable& t) {
  const CkEntry& cnm1 = last_ck(t);
  const Rat& e1 = t.e[1];
  const Rat& en = t.e[t.n];

  if (e1 == 0 || t.c.infinite) {
    // Theorem's first clause: c = +inf exactly when e_1 = 0.
    const bool ok = (e1 == 0) == t.c.infinite;
    return make_result("main_inequality", t.c, e1 == 0 ? ExtRat::inf() : ExtRat::of(Rat(0)),
                       ok ? Verdict::Holds : Verdict::Fails, ExtRat::of(Rat(0)));
  }

  if (cnm1.exact) {
    const ExtRat rhs = theorem_rhs(cnm1.value, en, e1, t.n);
    const bool ok = t.c >= rhs;
    return make_result("main_inequality", t.c, rhs, ok ? Verdict::Holds : Verdict::Fails,
                       ExtRat::of(t.c.value - rhs.value));
  }

  // Lower-bound mode. On D the right side increases in c_{n-1}, so the bound
  // substitutes soundly; outside D clamp to the domain edge, where the right
  // side is n / e_n^{1/n} and the comparison cross-powers exactly.
  if (in_domain_d(1 / cnm1.value, en, t.n)) {
    const ExtRat rhs = theorem_rhs(cnm1.value, en, e1, t.n);
    const bool ok = t.c >= rhs;
    return make_result("main_inequality", t.c, rhs,
                       ok ? Verdict::HoldsWithLowerBound : Verdict::Fails,
                       ExtRat::of(t.c.value - rhs.value));
  }
  const Rat lhs_pow = rat_pow(t.c.value, static_cast<unsigned>(t.n)) * en;
  const Rat rhs_pow = rat_pow(Rat(static_cast<unsigned>(t.n)), static_cast<unsigned>(t.n));
  const bool ok = lhs_pow >= rhs_pow;
  return make_result("main_inequality", ExtRat::of(lhs_pow), ExtRat::of(rhs_pow),
                     ok ? Verdict::HoldsWithLowerBound : Verdict::Fails,
                     ExtRat::of(lhs_pow - rhs_pow));
}

CheckResult fem_chain_check(const InvariantTable& t) {
  const CkEntry& cnm1 = last_ck(t);
  const unsigned n = static_cast<unsigned>(t.n);
  const Rat& enm1 = t.e[t.n - 1];
  const Rat& en = t.e[t.n];

  // Root chain (n-1)/e_{n-1}^{1/(n-1)} >= (n-1)/e_n^{1/n}, cross-powered.
  const bool roots_ok = rat_pow(enm1, n) <= rat_pow(en, n - 1);

  if (cnm1.exact) {
    // c_{n-1}^{n-1} e_{n-1} >= (n-1)^{n-1}, cross-powered first link.
    const Rat lhs = rat_pow(cnm1.value, n - 1) * enm1;
    const Rat rhs = rat_pow(Rat(n - 1), n - 1);
    const bool ok = lhs >= rhs && roots_ok;
    return make_result("fem_chain", ExtRat::of(lhs), ExtRat::of(rhs),
                       ok ? Verdict::Holds : Verdict::Fails, ExtRat::of(lhs - rhs));
  }
  // With only a lower bound for c_{n-1} the first link can neither be
  // certified nor refuted; certify the root chain and report lb-qualified.
  const Rat lhs = rat_pow(en, n - 1);
  const Rat rhs = rat_pow(enm1, n);
  return make_result("fem_chain", ExtRat::of(lhs), ExtRat::of(rhs),
                     roots_ok ? Verdict::HoldsWithLowerBound : Verdict::Fails,
                     ExtRat::of(lhs - rhs));
}

CheckResult upper_bound_check(const InvariantTable& t) {
  const CkEntry& cnm1 = last_ck(t);
  if (t.c.infinite) {
    return make_result("upper_bound", t.c, ExtRat::inf(), Verdict::Fails, ExtRat::of(Rat(0)));
  }
  if (cnm1.exact) {
    const Rat rhs = Rat(static_cast<unsigned>(t.n)) / Rat(static_cast<unsigned>(t.n - 1)) *
                    cnm1.value;
    const bool ok = t.c.value <= rhs;
    return make_result("upper_bound", t.c, ExtRat::of(rhs),
                       ok ? Verdict::Holds : Verdict::Fails, ExtRat::of(rhs - t.c.value));
  }
  // Iterated form through the deepest exact entry: c <= (n/k) c_k. Exactly
  // checkable even when c_{n-1} is only bounded below.
  std::size_t k = 0;
  for (std::size_t i = t.ck.size(); i > 0; --i) {
    if (t.ck[i - 1].exact) {
      k = i;
      break;
    }
  }
  if (k == 0) throw std::invalid_argument("table has no exact restricted threshold");
  const Rat rhs = Rat(static_cast<unsigned>(t.n)) / Rat(static_cast<unsigned>(k)) *
                  t.ck[k - 1].value;
  const bool ok = t.c.value <= rhs;
  return make_result("upper_bound", t.c, ExtRat::of(rhs),
                     ok ? Verdict::HoldsWithLowerBound : Verdict::Fails,
                     ExtRat::of(rhs - t.c.value));
}

CheckResult concavity_check(const InvariantTable& t) {
  if (t.n < 2) throw std::invalid_argument("table needs n >= 2");
  for (const auto& entry : t.ck) {
    if (!entry.exact) {
      throw ValidationError("a lower bound cannot certify concavity of the c_k sequence");
    }
  }
  if (t.c.infinite) throw ValidationError("concavity check needs a finite threshold");
  // Differences of 0 = c_0, c_1, ..., c_{n-1}, c_n = c must be nonincreasing.
  std::vector<Rat> c_seq;
  c_seq.push_back(Rat(0));
  for (const auto& entry : t.ck) c_seq.push_back(entry.value);
  c_seq.push_back(t.c.value);
  bool ok = true;
  bool have = false;
  Rat worst_lhs, worst_rhs;
  for (std::size_t k = 2; k < c_seq.size(); ++k) {
    const Rat next = c_seq[k] - c_seq[k - 1];
    const Rat prev = c_seq[k - 1] - c_seq[k - 2];
    if (!have || next - prev > worst_lhs - worst_rhs) {
      worst_lhs = next;
      worst_rhs = prev;
      have = true;
    }
    if (next > prev) ok = false;
  }
  return make_result("concavity", ExtRat::of(worst_lhs), ExtRat::of(worst_rhs),
                     ok ? Verdict::Holds : Verdict::Fails,
                     ExtRat::of(worst_rhs - worst_lhs));
}

CheckResult dh14_2d_check(const InvariantTable& t) {
  if (t.n != 2) throw std::invalid_argument("the DH14 check is two-dimensional");
  const CkEntry& c1 = t.ck.front();
  if (!c1.exact) throw ValidationError("DH14 derivation needs an exact c_1");
  if (t.c.infinite) throw ValidationError("DH14 check needs a finite threshold");
  const Rat& e1 = t.e[1];
  const Rat& e2 = t.e[2];

  // Derivation chain: 1/c_1 <= e_1, both points in D, f monotone between
  // them, and finally c >= f(e_1, e_2) = 1/e_1 + e_1/e_2.
  bool chain = (1 / c1.value <= e1);
  chain = chain && in_domain_d(1 / c1.value, e2, 2) && in_domain_d(e1, e2, 2);
  chain = chain && f_lemma21(1 / c1.value, e2, 2) >= f_lemma21(e1, e2, 2);
  const Rat bound = 1 / e1 + e1 / e2;
  const bool ok = chain && t.c.value >= bound;
  return make_result("dh14_dimension2", t.c, ExtRat::of(bound),
                     ok ? Verdict::Holds : Verdict::Fails,
                     ExtRat::of(t.c.value - bound));
}

double lemma23_rhs(double t, const LemmaParams& p) {
  if (!(t > 0)) throw std::invalid_argument("t must be positive");
  if (!(p.energy_bound > 0)) throw std::invalid_argument("energy bound must be positive");
  const double n = static_cast<double>(p.n);
  const double u = std::pow(t, (n + 1) / n) * std::pow(p.energy_bound, -1.0 / n);
  return p.c_n_const * std::pow(p.diameter, 2.0 * n) * std::pow(1.0 + u, n - 1) *
         std::exp(-2.0 * n * u);
}

Rat jn_integral(std::size_t n) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  // int_0^inf (1+2x)^{n-1} e^{-2nx} dx expanded termwise.
  Rat total(0);
  for (unsigned j = 0; j < n; ++j) {
    total += rat_binomial(static_cast<unsigned>(n - 1), j) * rat_pow(Rat(2), j) *
             rat_factorial(j) / rat_pow(Rat(2 * static_cast<unsigned>(n)), j + 1);
  }
  return total;
}

double lemma24_rhs(const LemmaParams& p) {
  const double n = static_cast<double>(p.n);
  const double c = p.c;
  const double lambda = p.lambda;
  if (!(c > 0)) throw std::invalid_argument("c must be positive");
  if (!(lambda > c) || !(lambda < c + c / n)) {
    throw std::invalid_argument("lambda must lie strictly inside (c, c + c/n)");
  }
  const double a = p.energy_bound;
  const double expo = std::exp(2.0 * (lambda - c) * a * std::pow(c, n) * std::pow(n, -n));
  const double d2n = p.c_n_const * std::pow(p.diameter, 2.0 * n);
  double total = p.volume;
  total += p.slice_bound / (2.0 * (lambda - c)) * expo;
  total += 0.5 * d2n *
           std::pow(1.0 + std::pow(2.0, n + 1) * a * std::pow(lambda, n + 1) *
                              std::pow(n, -n - 1),
                    n - 1) /
           ((n + 1) * c / n - lambda) * expo;
  total += d2n * n * n / (lambda * (n + 2)) * to_double(jn_integral(p.n));
  return total;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::HoldsWithLowerBound:
      return "holds-with-lower-bound";
  }
  return "fails";
}

CheckReport report(const SingularityModel& m, const ReportOptions& opt) {
  CheckReport rep;
  rep.table = invariant_table(m);
  if (opt.inject_c) rep.table.c = ExtRat::of(*opt.inject_c);
  const InvariantTable& t = rep.table;

  // Cross-powered mass chain e_k^{1/k} nondecreasing.
  {
    bool ok = true;
    Rat worst(0);
    bool have = false;
    for (std::size_t k = 1; k < t.n; ++k) {
      const Rat lhs = rat_pow(t.e[k + 1], static_cast<unsigned>(k));
      const Rat rhs = rat_pow(t.e[k], static_cast<unsigned>(k + 1));
      if (lhs < rhs) ok = false;
      if (!have || lhs - rhs < worst) {
        worst = lhs - rhs;
        have = true;
      }
    }
    rep.checks.push_back(make_result("mass_chain", ExtRat::of(t.e[t.n]),
                                     ExtRat::of(t.e[1]), ok ? Verdict::Holds : Verdict::Fails,
                                     ExtRat::of(have ? worst : Rat(0))));
  }

  if (t.n >= 2) {
    rep.checks.push_back(check_main(t));
    rep.checks.push_back(fem_chain_check(t));
    rep.checks.push_back(upper_bound_check(t));
    bool all_exact = true;
    for (const auto& entry : t.ck) all_exact = all_exact && entry.exact;
    if (all_exact && !t.c.infinite) rep.checks.push_back(concavity_check(t));
    if (t.n == 2) rep.checks.push_back(dh14_2d_check(t));
  }

  rep.all_exact_hold = true;
  for (const auto& check : rep.checks) {
    if (check.verdict == Verdict::Fails) rep.all_exact_hold = false;
  }

  if (opt.numeric && !t.c.infinite) {
    NumericCrossCheck num;
    num.samples = opt.samples;
    num.seed = opt.seed;
    num.exact_c = to_double(t.c.value);
    numeric::NumericConfig cfg;
    cfg.samples = opt.samples;
    cfg.seed = opt.seed;
    std::vector<double> grid;
    const bool monomial = std::holds_alternative<MonomialIdeal>(m);
    if (monomial) {
      for (double tt = 2; tt <= 8; tt += 0.75) grid.push_back(tt);
    } else {
      for (double tt = 5; tt <= 40; tt += 2.5) grid.push_back(tt);
    }
    const auto decay = numeric::lct_estimate_decay(m, grid, 1.0, cfg);
    num.decay_c_hat = decay.c_hat;
    num.decay_stderr = decay.stderr_;
    num.decay_within_5pct = std::abs(decay.c_hat - num.exact_c) <= 0.05 * num.exact_c;
    const auto low = numeric::integrability_check(m, 0.9 * num.exact_c, opt.samples,
                                                  derive_seed(opt.seed, 11));
    const auto high = numeric::integrability_check(m, 1.1 * num.exact_c, opt.samples,
                                                   derive_seed(opt.seed, 13));
    const auto verdict_name = [](numeric::IntegrabilityVerdict v) -> std::string {
      switch (v) {
        case numeric::IntegrabilityVerdict::Finite:
          return "finite";
        case numeric::IntegrabilityVerdict::Diverging:
          return "diverging";
        default:
          return "inconclusive";
      }
    };
    num.integrability_low = verdict_name(low.verdict);
    num.integrability_high = verdict_name(high.verdict);
    num.integrability_ok = low.verdict == numeric::IntegrabilityVerdict::Finite &&
                           high.verdict == numeric::IntegrabilityVerdict::Diverging;
    rep.numeric = std::move(num);
  }
  return rep;
}

}  // namespace lctlab::bounds
