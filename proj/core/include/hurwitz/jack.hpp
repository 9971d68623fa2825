#pragma once

// Jack symmetric functions J^(alpha) in the power-sum basis, their norms and
// characters, and the hypergeometric sum with deformed contents.

#include <map>
#include <vector>

#include "hurwitz/exactnum.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/multipoly.hpp"
#include "hurwitz/partitions.hpp"

namespace hurwitz {

inline constexpr int kDefaultJackCeiling = 8;

struct PSumExpansion {
  int degree = 0;
  Rational alpha;
  std::map<Partition, Rational> coeffs;  // mu -> [p_mu]

  Rational coefficient(const Partition& mu) const;
};

/// <f, g> with <p_lambda, p_mu> = delta z(lambda) alpha^l(lambda).
Rational deformed_hall(const PSumExpansion& f, const PSumExpansion& g);

/// J_lambda normalized by [m_(1^d)] J = d!, i.e. [p_(1^d)] J = 1. Built by
/// Gram-Schmidt on monomial functions in a dominance-compatible order and
/// memoized per (d, alpha). Throws SingularParameterError on a vanishing pivot.
PSumExpansion jack_in_psums(const Partition& lambda, const Rational& alpha, int ceiling = kDefaultJackCeiling);

/// Double hook product prod (alpha a + l + 1)(alpha a + l + alpha).
Rational jack_norm(const Partition& lambda, const Rational& alpha);

/// [p_mu] J_lambda / |C_mu|.
Rational jack_character(const Partition& lambda, const Partition& mu, const Rational& alpha);

/// alpha (j - 1) - (i - 1) over the boxes, row by row.
std::vector<Rational> deformed_contents(const Partition& lambda, const Rational& alpha);

/// [z^0..r_max] of sum_lambda (1/j_lambda) prod theta(mu) prod G(z * deformed content), alpha = b + 1.
std::vector<MultiPoly> b_hurwitz_series(int r_max, const GSpec& g, const ProfileSet& profiles, const Rational& b,
                                        const DegreeCaps* caps = nullptr);

MultiPoly b_hurwitz_coefficient(int r, const GSpec& g, const ProfileSet& profiles, const Rational& b,
                                const DegreeCaps* caps = nullptr);

}  // namespace hurwitz
