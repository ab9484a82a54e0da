#pragma once

// Exact rational scalars. Every coefficient in chowkit is a Rational; there is
// no floating point anywhere in the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chowkit {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical text: "p" for integers, "p/q" otherwise (q > 0, lowest terms).
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Parse "p" or "p/q" with an optional leading sign.
inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  if (r.get_den() == 0) throw std::domain_error("zero denominator");
  r.canonicalize();
  return r;
}

inline Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

inline Rational factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

}  // namespace chowkit
