#pragma once

// Exact scalar arithmetic: GMP-backed integers and rationals, Bernoulli numbers,
// zeta at negative integers, Stirling numbers and Gaussian rationals.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// "p/q", or "n" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Accepts "n", "p/q" and finite decimals such as "-0.5".
Rational parse_rational(std::string_view text);

/// q^e for any integer e; 0^0 == 1, 0^negative throws DomainError.
Rational pow(const Rational& q, long e);
Integer pow(const Integer& n, unsigned long e);

Integer factorial(long n);
Integer binomial(long n, long k);

/// Bernoulli numbers with B_1 = -1/2. Memoized and thread safe.
Rational bernoulli(int n);

/// zeta(-s) = -B_{s+1}/(s+1) for s >= 1.
Rational zeta_neg(int s);

enum class StirlingKind { first = 1, second = 2 };

/// Unsigned Stirling numbers. Negative arguments throw DomainError; k > n gives 0.
Integer stirling(StirlingKind kind, long n, long k);

/// Decimal rendering of q with `precision_bits` of binary float precision.
std::string to_decimal(const Rational& q, unsigned precision_bits = 128, int digits = 30);

/// Exact element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}

  bool is_real() const { return sgn(im) == 0; }
  Rational norm_squared() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

GaussianRational pow(const GaussianRational& q, long e);
std::string to_string(const GaussianRational& q);

}  // namespace hurwitz
