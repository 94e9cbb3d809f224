#pragma once

// Exact rational scalars (GMP-backed) plus the handful of helpers the rest of
// the library needs: canonical string I/O, powers, binomials, and a rational
// extended with a single +infinity point for thresholds.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lctlab {

using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
// std::invalid_argument on anything else, including embedded whitespace.
Rat rat_parse(const std::string& text);

// Canonical rendering: lowest terms, positive denominator, "p" when q == 1.
std::string rat_str(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

Rat rat_pow(const Rat& base, unsigned exp);
Rat rat_binomial(unsigned n, unsigned k);
Rat rat_factorial(unsigned n);

// A rational together with +infinity. Only the comparisons the checkers need.
struct ExtRat {
  Rat value{};
  bool infinite = false;

  static ExtRat inf() {
    ExtRat r;
    r.infinite = true;
    return r;
  }
  static ExtRat of(Rat v) {
    ExtRat r;
    r.value = std::move(v);
    return r;
  }

  bool operator==(const ExtRat& o) const {
    if (infinite || o.infinite) return infinite == o.infinite;
    return value == o.value;
  }
  bool operator<(const ExtRat& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return value < o.value;
  }
  bool operator<=(const ExtRat& o) const { return *this == o || *this < o; }
  bool operator>=(const ExtRat& o) const { return !(*this < o); }
};

std::string ext_str(const ExtRat& e);
double ext_double(const ExtRat& e);

}  // namespace lctlab
