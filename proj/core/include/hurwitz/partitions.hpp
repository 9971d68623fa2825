#pragma once

// Integer partitions and their diagram data: transposes, contents, hooks,
// conjugacy class sizes and shifted Frobenius coordinates.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/exactnum.hpp"

namespace hurwitz {

inline constexpr int kDefaultPartitionCeiling = 40;

/// Weakly decreasing positive parts. The empty partition is the partition of 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// (n) and (1^n).
  static Partition row(int n);
  static Partition column(int n);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// m_i: number of parts equal to i.
  int multiplicity(int i) const;

  /// "6,5,3,1"; the empty partition prints as "".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; enumeration order is the reverse of this.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// "6,5,3,1" or "6 5 3 1"; sorts the parts. Throws DomainError on junk.
Partition parse_partition(std::string_view text);

/// All partitions of d in reverse lexicographic order: (d) first, (1^d) last.
std::vector<Partition> enumerate_partitions(int d, int ceiling = kDefaultPartitionCeiling);

Partition transpose(const Partition& lambda);

/// Contents j - i over the boxes, row by row.
std::vector<int> contents(const Partition& lambda);

/// Hook lengths over the boxes, row by row.
std::vector<int> hook_lengths(const Partition& lambda);

/// mu <= lambda in dominance order (same size assumed).
bool dominates(const Partition& lambda, const Partition& mu);

struct ClassData {
  Integer class_size;
  Integer stabilizer;
  std::map<int, int> multiplicities;
};

ClassData class_data(const Partition& mu);

/// Exact half-integer stored as twice its value.
struct HalfInteger {
  long twice = 1;

  Rational value() const { return make_rational(twice, 2); }
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

struct FrobeniusShifted {
  int rank = 0;
  std::vector<HalfInteger> a_prime;
  std::vector<HalfInteger> b_prime;
};

FrobeniusShifted frobenius_shifted(const Partition& lambda);

}  // namespace hurwitz

namespace hurwitz {

/// Ramification profiles over N points, all partitions of one degree. The degree
/// is carried separately so N = 0 still knows it.
struct ProfileSet {
  int degree = 0;
  std::vector<Partition> profiles;

  ProfileSet() = default;
  /// Throws DomainError if a profile has a different size.
  ProfileSet(int d, std::vector<Partition> mus);

  int count() const { return static_cast<int>(profiles.size()); }
  /// Sum of profile lengths.
  int total_length() const;
  std::string to_string() const;
  friend bool operator==(const ProfileSet&, const ProfileSet&) = default;
};

}  // namespace hurwitz
