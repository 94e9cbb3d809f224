#include "lctlab/rational.hpp"

#include <cctype>
#include <limits>

namespace lctlab {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  const auto slash = text.find('/');
  const auto check_int = [&](std::size_t from, std::size_t to) {
    std::size_t start = from;
    if (start < to && (text[start] == '-' || text[start] == '+')) ++start;
    if (!all_digits(text, start, to)) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
  };
  if (slash == std::string::npos) {
    // Terminating decimals convert exactly: "0.5" -> 1/2.
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      check_int(0, dot);
      if (!all_digits(text, dot + 1, text.size())) {
        throw std::invalid_argument("not a rational: '" + text + "'");
      }
      const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      Rat q(digits);
      for (std::size_t i = dot + 1; i < text.size(); ++i) q /= 10;
      q.canonicalize();
      return q;
    }
    check_int(0, text.size());
    return Rat(text);
  }
  check_int(0, slash);
  if (!all_digits(text, slash + 1, text.size())) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  Rat q(text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_pow(const Rat& base, unsigned exp) {
  Rat out(1);
  Rat b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) out *= b;
    b *= b;
    e >>= 1u;
  }
  return out;
}

Rat rat_binomial(unsigned n, unsigned k) {
  if (k > n) return Rat(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rat(out);
}

Rat rat_factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rat(out);
}

std::string ext_str(const ExtRat& e) { return e.infinite ? "inf" : rat_str(e.value); }

double ext_double(const ExtRat& e) {
  return e.infinite ? std::numeric_limits<double>::infinity() : to_double(e.value);
}

}  // namespace lctlab
