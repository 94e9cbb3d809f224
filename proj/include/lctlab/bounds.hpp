#pragma once

// Evaluators and exact checkers for the threshold/mass inequalities: the main
// lower bound c >= c_{n-1} + (n-1)^{n-1}/(c_{n-1}^{n-1} e_n), its supporting
// monotone function f on the domain D, the mass chain, the concavity and
// upper bounds for restricted thresholds, the dimension-2 bound, and the
// explicit decay/openness formulas. Root comparisons are always cross-powered
// into integer-exponent rational comparisons; floating point appears only in
// the two lemma evaluators whose constant is not pinned down.

#include "lctlab/invariants.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lctlab::bounds {

enum class Verdict { Holds, Fails, HoldsWithLowerBound };

struct CheckResult {
  std::string name;
  ExtRat lhs;
  ExtRat rhs;
  Verdict verdict = Verdict::Fails;
  ExtRat margin;  // oriented so that nonnegative means the check passed
};

// Right side of the main inequality; +inf when e_1 = 0.
ExtRat theorem_rhs(const Rat& c_nm1, const Rat& e_n, const Rat& e_1, std::size_t n);

// Openness window width (n-1)^{n-1} / (c^{n-1} e_n).
Rat openness_gain(const Rat& c, std::size_t n, const Rat& e_n);

// f(t1, t2) = 1/t1 + (n-1)^{n-1} t1^{n-1} / t2 and its domain
// D = { (n-1)^n t1^n <= t2 }, on which f is coordinatewise decreasing.
Rat f_lemma21(const Rat& t1, const Rat& t2, std::size_t n);
bool in_domain_d(const Rat& t1, const Rat& t2, std::size_t n);

CheckResult check_main(const InvariantTable& t);
CheckResult fem_chain_check(const InvariantTable& t);
CheckResult upper_bound_check(const InvariantTable& t);
// Requires every c_k exact; throws ValidationError otherwise (a lower bound
// cannot certify concavity).
CheckResult concavity_check(const InvariantTable& t);
// n = 2 only: c >= 1/e_1 + e_1/e_2 together with the derivation chain
// through f's monotonicity.
CheckResult dh14_2d_check(const InvariantTable& t);

// Parameters of the volume-decay and openness estimates. The dimensional
// constant c_n in these bounds is not pinned down by the underlying
// analysis; it is an explicit input with default 1, and everything asserted
// about these evaluators is shape, not absolute value.
struct LemmaParams {
  double energy_bound = 1;   // A, bound for int -phi (dd^c phi)^n
  double slice_bound = 1;    // B, bound for the slice integral
  double diameter = 1;       // delta_Omega
  double c_n_const = 1;      // the unspecified dimensional constant
  double volume = 0;         // V_{2n}(Omega')
  std::size_t n = 2;
  double c = 1;
  double lambda = 0;
};

double lemma23_rhs(double t, const LemmaParams& p);
Rat jn_integral(std::size_t n);
double lemma24_rhs(const LemmaParams& p);

struct NumericCrossCheck {
  double exact_c = 0;
  double decay_c_hat = 0;
  double decay_stderr = 0;
  bool decay_within_5pct = false;
  std::string integrability_low;   // verdict at 0.9 c
  std::string integrability_high;  // verdict at 1.1 c
  bool integrability_ok = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct ReportOptions {
  bool numeric = false;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 20260808;
  std::optional<Rat> inject_c;  // test hook: overrides c before checking
};

struct CheckReport {
  InvariantTable table;
  std::vector<CheckResult> checks;
  std::optional<NumericCrossCheck> numeric;
  bool all_exact_hold = false;
};

CheckReport report(const SingularityModel& m, const ReportOptions& opt = {});

std::string verdict_str(Verdict v);

}  // namespace lctlab::bounds
