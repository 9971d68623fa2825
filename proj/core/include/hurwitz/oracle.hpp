#pragma once

// Brute force at small degree: counting transposition factorizations of the
// identity, literal computations in the group algebra Q[S_d], and characters
// from traces of permutation representations.

#include <cstdint>
#include <vector>

#include "hurwitz/exactnum.hpp"
#include "hurwitz/partitions.hpp"

namespace hurwitz {

inline constexpr int kOracleMaxDegree = 6;
inline constexpr int kOracleMaxTranspositions = 10;

using Perm = std::vector<std::uint8_t>;  // images of 0..d-1

/// S_d with elements in lexicographic order of their image lists. Shared, immutable.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int d);

  int degree() const { return d_; }
  std::size_t order() const { return elements_.size(); }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  std::size_t index(const Perm& p) const;
  std::size_t identity() const { return 0; }
  /// index of a*b where (a*b)(x) = a(b(x))
  std::size_t compose(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  const Partition& cycle_type(std::size_t i) const { return types_[i]; }
  /// Index of the transposition exchanging i and j (0-based).
  std::size_t transposition(int i, int j) const;

 private:
  int d_;
  std::vector<Perm> elements_;
  std::vector<std::uint16_t> table_;
  std::vector<Partition> types_;
};

const SymmetricGroup& symmetric_group(int d);

enum class BlockConstraint { none, weak, strict };

struct Block {
  int count = 0;
  BlockConstraint constraint = BlockConstraint::none;
};

struct FactorizationQuery {
  int degree = 0;
  std::vector<Partition> profiles;
  std::vector<Block> blocks;
  /// Keep only tuples generating a transitive subgroup (connected covers).
  bool transitive_only = false;
};

/// #{(sigma_1..sigma_N, transpositions) : product = id, sigma_j in C_mu_j, blocks
/// satisfy their monotone rule on the larger moved point, reset per block}
/// divided by d! * prod |C_mu_j|.
Rational count_factorizations(const FactorizationQuery& q);

/// K weak blocks of free sizes plus one strict block per entry of u_degrees and one
/// weak block per entry of v_degrees, total r transpositions: the oracle side of
/// the [z^r u^a v^b] coefficient of the hypergeometric sum.
Rational hypergeometric_oracle(const ProfileSet& profiles, int r, int K, const std::vector<int>& u_degrees,
                               const std::vector<int>& v_degrees, bool transitive_only = false);

/// Dense element of Q[S_d].
struct GroupAlgebraElement {
  int degree = 0;
  std::vector<Rational> coeffs;  // by SymmetricGroup index

  explicit GroupAlgebraElement(int d = 0);
  static GroupAlgebraElement identity(int d);
  static GroupAlgebraElement class_sum(const Partition& mu);

  Rational coefficient(const Perm& p) const;
  bool is_zero() const;
  /// Some coefficient per cycle type, if the element is constant on classes.
  bool is_central_function() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const Rational& c);
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.degree == b.degree && a.coeffs == b.coeffs;
  }
};

/// J_k = sum_{i<k} (i k), J_1 = 0; k is 1-based.
GroupAlgebraElement jucys_murphy(int k, int d);

enum class SymmetricKind { elementary, complete };

/// e_k or h_k of J_1..J_d by literal expansion in the group algebra.
GroupAlgebraElement jm_symmetric_evaluate(SymmetricKind kind, int k, int d);

/// The class expansion with Stirling coefficients as printed in the literature
/// this module checks: sum_m (-1)^(k-m) [d-m; d-k] (resp. {d-m; d-k}) times the
/// sum of permutations with m cycles.
GroupAlgebraElement jucys_stirling_display(SymmetricKind kind, int k, int d);

/// F_lambda = (dim/d!) sum_mu chi_lambda(mu) C_mu.
GroupAlgebraElement central_idempotent(const Partition& lambda);

/// G(z) = prod (1 + u_i z) / ((1 - z)^K prod (1 - v_j z)) with numeric u, v.
struct NumericG {
  int K = 1;
  std::vector<Rational> u;
  std::vector<Rational> v;
};

struct IdempotentReport {
  bool idempotent = false;
  bool orthogonal = false;   // F_lambda F_eta = 0 for every eta != lambda
  bool eigenvalue = false;   // prod G(z J_i) F = prod G(z c) F up to z_order
};

IdempotentReport idempotent_check(const Partition& lambda, const NumericG& g, int z_order);

/// Character table from traces of the permutation modules on tabloids,
/// unwound by inverse Kostka numbers. Rows and columns in enumeration order.
std::vector<std::vector<Integer>> brute_force_character_table(int d);

}  // namespace hurwitz
