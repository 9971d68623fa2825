#pragma once

// Sparse polynomials over Q in formal variables u1..uL, v1..vM, and power
// series in z truncated at a fixed order with such polynomials as coefficients.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/exactnum.hpp"

namespace hurwitz {

struct VarLayout {
  int num_u = 0;
  int num_v = 0;

  int arity() const { return num_u + num_v; }
  int u(int i) const { return i; }
  int v(int j) const { return num_u + j; }
  friend bool operator==(const VarLayout&, const VarLayout&) = default;
};

using Exponent = std::vector<std::uint16_t>;

/// Per-variable maximal exponent kept during multiplication; -1 keeps everything.
/// Used when only a few low-degree monomials are wanted.
struct DegreeCaps {
  std::vector<int> max_exp;

  static DegreeCaps none(const VarLayout& layout) { return {std::vector<int>(layout.arity(), -1)}; }
  bool admits(const Exponent& e) const;
};

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(VarLayout layout) : layout_(layout) {}
  MultiPoly(VarLayout layout, const Rational& c);

  static MultiPoly variable(VarLayout layout, int index, const Rational& coeff = 1);
  static MultiPoly monomial(VarLayout layout, Exponent e, const Rational& coeff = 1);

  const VarLayout& layout() const { return layout_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const { return coefficient(Exponent(layout_.arity(), 0)); }
  bool is_constant() const;
  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = mul(*this, o, nullptr); }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mul(a, b, nullptr); }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.layout_ == b.layout_ && a.terms_ == b.terms_;
  }

  /// Product keeping only exponents admitted by caps (if given).
  static MultiPoly mul(const MultiPoly& a, const MultiPoly& b, const DegreeCaps* caps);

  /// Substitute rationals for all variables.
  Rational evaluate(const std::vector<Rational>& point) const;

  /// "3/2*u1^2*v1 - 1" style; "0" for the zero polynomial.
  std::string to_string() const;
  static std::string monomial_name(const VarLayout& layout, const Exponent& e);

 private:
  void check_layout(const MultiPoly& o) const;

  VarLayout layout_;
  std::map<Exponent, Rational> terms_;
};

/// Power series in z with MultiPoly coefficients, truncated after z^order.
class TruncSeries {
 public:
  TruncSeries(VarLayout layout, int order, const DegreeCaps* caps = nullptr);

  static TruncSeries one(VarLayout layout, int order, const DegreeCaps* caps = nullptr);

  int order() const { return order_; }
  const VarLayout& layout() const { return layout_; }
  const MultiPoly& operator[](int k) const { return coeffs_.at(k); }
  MultiPoly& operator[](int k) { return coeffs_.at(k); }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& c);
  TruncSeries& operator*=(const TruncSeries& o);

  /// Multiply in place by (1 + c*w*z).
  void mul_linear(const Rational& c, const MultiPoly& w);
  /// Multiply in place by 1/(1 - c*w*z).
  void div_linear(const Rational& c, const MultiPoly& w);

 private:
  VarLayout layout_;
  int order_;
  DegreeCaps caps_;
  std::vector<MultiPoly> coeffs_;
};

/// Truncation of 1/(1 - c*w*z) at order r.
TruncSeries geometric_factor(const Rational& c, const MultiPoly& weight, int r);
/// The exact degree-one numerator factor 1 + c*w*z.
TruncSeries linear_factor(const Rational& c, const MultiPoly& weight, int r);

/// [z^r] S; throws DomainError beyond the truncation order.
MultiPoly coeff_z(const TruncSeries& s, int r);

}  // namespace hurwitz
