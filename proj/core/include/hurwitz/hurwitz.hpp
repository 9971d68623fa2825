#pragma once

// Hurwitz numbers as exact character sums: completed cycles, hypergeometric
// weights with formal u/v blocks, structure coefficients, the orbifold case and
// stationary relative invariants of the sphere.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/exactnum.hpp"
#include "hurwitz/multipoly.hpp"
#include "hurwitz/partitions.hpp"

namespace hurwitz {

/// G(z) = prod_i (1 + u_i z) / ((1 - z)^K prod_j (1 - v_j z)).
struct GSpec {
  int K = 0;
  int L = 0;
  int M = 0;

  VarLayout layout() const { return {L, M}; }
};

enum class Kind { classical, completed, hypergeometric, b_content, gw, orbifold };

std::string kind_name(Kind k);

struct HurwitzResult {
  Kind kind = Kind::classical;
  int s = 0;  // completed-cycle order, 0 when not applicable
  int t = 0;  // orbifold order, 0 when not applicable
  int d = 0;
  int r = 0;
  std::vector<Partition> profiles;
  bool connected = false;
  /// Genus from the Riemann-Hurwitz relation, exact. Integral only when a surface
  /// exists; absent when the instance is zero by convention.
  std::optional<Rational> genus_raw;
  MultiPoly value;

  std::optional<long> genus() const;
  bool is_scalar() const { return value.layout().arity() == 0; }
  /// The value as a rational; throws DomainError if it carries formal variables.
  Rational scalar() const;
};

/// (1 - 2^-s) zeta(-s).
Rational completion_constant(int s);

/// Completed-cycle eigenvalue on lambda, from shifted Frobenius coordinates. s >= 2.
Rational f_bar(const Partition& lambda, int s);

/// Top eigenvalue f_bar((d), s + 1).
Rational M_ds(int d, int s);

/// dim^(2-N) * prod_j chi(mu_j): the per-partition weight shared by every sum here.
std::vector<Rational> character_weights(const ProfileSet& profiles);

HurwitzResult completed_hurwitz(int r, int s, const ProfileSet& profiles, bool connected);

/// Several completed-cycle orders at once: prod_s f_bar_{s+1}^{m_s}.
Rational completed_mixed(const ProfileSet& profiles, const std::map<int, int>& insertions);

/// [z^0..r_max] of the disconnected hypergeometric sum. With caps, monomials
/// beyond the per-variable degrees are dropped throughout.
std::vector<MultiPoly> hypergeometric_series(int r_max, const GSpec& g, const ProfileSet& profiles,
                                             const DegreeCaps* caps = nullptr);

HurwitzResult hypergeometric_hurwitz(int r, const GSpec& g, const ProfileSet& profiles, bool connected,
                                     const DegreeCaps* caps = nullptr);

/// Map eigenvalue m -> coefficient C(m), sorted by m descending. With the 2/d!^2
/// prefactor left out, (2/d!^2) sum_m C(m) m^r equals the disconnected completed
/// number at every r of admissible parity (0^0 = 1).
std::vector<std::pair<Rational, Rational>> structure_coefficients(int s, const ProfileSet& profiles);

/// s = 1 with the extra profile (t, ..., t); exactly 0 when t does not divide d.
HurwitzResult orbifold_hurwitz(int r, int t, const Partition& mu, bool connected);

/// Relative stationary invariant; insertions map s -> m_s.
HurwitzResult gw_correlator(const Partition& mu, const Partition& nu, const std::map<int, int>& insertions,
                            bool connected);

/// d!^(2h) times base, where base was computed at r_target - 2 d h.
Rational higher_genus_target(int h, int r_target, const HurwitzResult& base);

}  // namespace hurwitz
