#pragma once

// Exact integers and rationals (GMP-backed) plus the factorial family used by
// every count and coefficient formula.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bn2 {

using BigInt = mpz_class;

// mpq_class keeps values canonical (lowest terms, positive denominator) after
// every arithmetic operation; make_rational() canonicalizes on construction.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigRational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

/// "p/q", or "p" when q == 1.
inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "p/q" or "p"; the result is canonical.
inline BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

inline BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer " + std::to_string(n));
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

/// 1/x! for x >= 0 and exactly 0 for negative x.
inline BigRational inv_factorial_or_zero(long x) {
  if (x < 0) return BigRational(0);
  return make_rational(BigInt(1), factorial(x));
}

/// (2m+1)!! = (2m+1)!/(2^m m!) with (-1)!! = 1. Accepts odd n >= -1 only.
inline BigInt double_factorial_odd(long n) {
  if (n < -1 || n % 2 == 0)
    throw std::domain_error("double_factorial_odd expects an odd integer >= -1, got " + std::to_string(n));
  BigInt out = 1;
  for (long f = 3; f <= n; f += 2) out *= f;
  return out;
}

inline BigInt pow2(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

/// 2^e for any integer e, as an exact rational.
inline BigRational pow2_rational(long e) {
  if (e >= 0) return BigRational(pow2(static_cast<unsigned long>(e)));
  return make_rational(BigInt(1), pow2(static_cast<unsigned long>(-e)));
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace bn2
