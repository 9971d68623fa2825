#pragma once

// Large-order behaviour: dominant pole coefficients of the hypergeometric sums,
// closed-form leading terms, and exact-versus-leading ratio tables.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/exactnum.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/multipoly.hpp"

namespace hurwitz {

/// Top Laurent coefficient of the generating series at z = 1/rho.
struct PoleCoefficient {
  Rational rho;      // pole sits at 1/rho
  int order = 0;     // pole order in z
  MultiPoly top;     // lim (1 - rho z)^order f(z), u and v formal
};

/// Limit evaluation: every partition with a box of content sign*(d-1) contributes
/// the product of its remaining content factors at z = sign/(d-1). Formal v
/// variables are expanded to degree v_degree (geometric series).
PoleCoefficient pole_coefficient(const GSpec& g, const ProfileSet& profiles, int sign, int v_degree = 4);

/// The same coefficient from the Stirling generating series
/// prod_a [d; d-a] (u/(d-1))^a and prod_b {b+d-1; d-1} (v/(d-1))^b.
PoleCoefficient pole_coefficient_closed_form(const GSpec& g, const ProfileSet& profiles, int sign,
                                             int v_degree = 4);

/// Optional diagnostic: the poles at z = +-1/(d-2), summed over every partition
/// carrying a box of that content with the largest multiplicity.
PoleCoefficient next_pole_coefficient(const GSpec& g, const ProfileSet& profiles, int sign, int v_degree = 4);

Rational monotone_leading_term(int r, int d, int N, int length_sum, int K, const std::vector<int>& a,
                               const std::vector<int>& b);

Rational completed_leading_term(int r, int d, int s, int N, int length_sum);

/// Three regimes by |b + 1| compared with 1; b must have real part > -1.
GaussianRational b_leading_term(int r, int d, int N, int length_sum, int K, const std::vector<int>& a,
                                const std::vector<int>& b_exps, const GaussianRational& b);

/// Independent route for rational b: the dominant poles of the b-content series
/// built from jack_norm and Gram-Schmidt Jack characters of the extremal
/// partitions, coefficient of the given monomial, r^(K-1)/(K-1)! rho^r A.
Rational b_leading_term_from_norms(int r, const GSpec& g, const ProfileSet& profiles, const Rational& b,
                                   const Exponent& monomial);

Rational gw_leading_term(const Partition& mu, const Partition& nu, const std::map<int, int>& insertions);

struct RatioRow {
  int r = 0;
  Rational exact;
  Rational asymptotic;
  Rational ratio;
};

struct RatioReport {
  std::vector<RatioRow> rows;
  /// |ratio - 1| is non-increasing from this r on.
  std::optional<int> monotone_from;
  /// |ratio - 1| grows over the last three rows.
  bool diverging = false;
  unsigned precision_bits = 128;

  Rational final_error() const;
  std::string to_csv() const;
  std::string to_json() const;
};

/// Rows only for r where the exact value is nonzero. Throws DomainError if none.
RatioReport ratio_report(const std::function<Rational(int)>& exact, const std::function<Rational(int)>& asymptotic,
                         int r_min, int r_max, unsigned precision_bits = 128);

}  // namespace hurwitz
