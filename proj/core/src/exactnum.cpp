#include "hurwitz/exactnum.hpp"

#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw DomainError("empty rational literal");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      bool negative = s[0] == '-';
      std::string digits = s.substr(negative || s[0] == '+' ? 1 : 0);
      dot = digits.find('.');
      std::string whole = digits.substr(0, dot);
      std::string frac = digits.substr(dot + 1);
      if (whole.empty()) whole = "0";
      Integer num(whole + frac);
      Integer den = pow(Integer(10), frac.size());
      Rational q = make_rational(num, den);
      return negative ? Rational(-q) : q;
    }
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
}

Integer pow(const Integer& n, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), n.get_mpz_t(), e);
  return out;
}

Rational pow(const Rational& q, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (sgn(q) == 0) throw DomainError("zero raised to a negative power");
    Rational inv = make_rational(q.get_den(), q.get_num());
    return pow(inv, -e);
  }
  auto ue = static_cast<unsigned long>(e);
  return make_rational(pow(q.get_num(), ue), pow(q.get_den(), ue));
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

std::shared_mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

std::shared_mutex stirling_mutex;
// rows[n][k], grown together for both kinds
std::vector<std::vector<Integer>> stirling_first_rows{{Integer(1)}};
std::vector<std::vector<Integer>> stirling_second_rows{{Integer(1)}};

void grow_stirling(long n) {
  while (static_cast<long>(stirling_first_rows.size()) <= n) {
    const auto m = static_cast<long>(stirling_first_rows.size());  // new row index
    const auto& prev1 = stirling_first_rows.back();
    const auto& prev2 = stirling_second_rows.back();
    std::vector<Integer> row1(m + 1), row2(m + 1);
    for (long k = 1; k <= m; ++k) {
      const Integer left1 = k - 1 < static_cast<long>(prev1.size()) ? prev1[k - 1] : Integer(0);
      const Integer same1 = k < static_cast<long>(prev1.size()) ? prev1[k] : Integer(0);
      const Integer left2 = k - 1 < static_cast<long>(prev2.size()) ? prev2[k - 1] : Integer(0);
      const Integer same2 = k < static_cast<long>(prev2.size()) ? prev2[k] : Integer(0);
      row1[k] = left1 + (m - 1) * same1;
      row2[k] = left2 + k * same2;
    }
    stirling_first_rows.push_back(std::move(row1));
    stirling_second_rows.push_back(std::move(row2));
  }
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("Bernoulli index must be nonnegative");
  {
    std::shared_lock lock(bernoulli_mutex);
    if (n < static_cast<int>(bernoulli_cache.size())) return bernoulli_cache[n];
  }
  std::unique_lock lock(bernoulli_mutex);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  for (int m = static_cast<int>(bernoulli_cache.size()); m <= n; ++m) {
    Rational acc = 0;
    for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * bernoulli_cache[k];
    bernoulli_cache.push_back(-acc / (m + 1));
  }
  return bernoulli_cache[n];
}

Rational zeta_neg(int s) {
  if (s < 1) throw DomainError("zeta_neg expects s >= 1");
  return -bernoulli(s + 1) / (s + 1);
}

Integer stirling(StirlingKind kind, long n, long k) {
  if (n < 0 || k < 0) throw DomainError("Stirling arguments must be nonnegative");
  if (k > n) return 0;
  {
    std::shared_lock lock(stirling_mutex);
    if (n < static_cast<long>(stirling_first_rows.size()))
      return kind == StirlingKind::first ? stirling_first_rows[n][k] : stirling_second_rows[n][k];
  }
  std::unique_lock lock(stirling_mutex);
  grow_stirling(n);
  return kind == StirlingKind::first ? stirling_first_rows[n][k] : stirling_second_rows[n][k];
}

std::string to_decimal(const Rational& q, unsigned precision_bits, int digits) {
  mpf_class f(0, precision_bits);
  f = q;
  if (sgn(q) == 0) return "0";
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  bool negative = !mant.empty() && mant[0] == '-';
  if (negative) mant.erase(0, 1);
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  std::string out = negative ? "-" : "";
  if (exp > 0 && exp <= 21) {
    if (static_cast<long>(mant.size()) <= exp) {
      out += mant + std::string(exp - mant.size(), '0');
    } else {
      out += mant.substr(0, exp) + "." + mant.substr(exp);
    }
  } else if (exp <= 0 && exp > -6) {
    out += "0." + std::string(-exp, '0') + mant;
  } else {
    out += mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp) - 1);
  }
  return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm_squared();
  if (sgn(n) == 0) throw DomainError("division by zero Gaussian rational");
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational pow(const GaussianRational& q, long e) {
  if (e < 0) return pow(GaussianRational(1) / q, -e);
  GaussianRational base = q, out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::string to_string(const GaussianRational& q) {
  if (q.is_real()) return to_string(q.re);
  std::string im = to_string(q.im);
  if (sgn(q.im) > 0) im = "+" + im;
  return to_string(q.re) + im + "i";
}

}  // namespace hurwitz
