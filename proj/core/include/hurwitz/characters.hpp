#pragma once

// Irreducible characters of the symmetric group by the Murnaghan-Nakayama rule,
// cached as one immutable table per degree.

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hurwitz/exactnum.hpp"
#include "hurwitz/partitions.hpp"

namespace hurwitz {

inline constexpr int kDefaultCharTableCeiling = 18;

class CharTable {
 public:
  CharTable(int degree, std::vector<std::int64_t> values);

  int degree() const { return degree_; }
  /// Row and column labels, in enumeration order.
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t size() const { return partitions_.size(); }
  std::size_t index(const Partition& p) const;

  /// chi_lambda evaluated on class mu, by position.
  std::int64_t operator()(std::size_t lambda, std::size_t mu) const { return values_[lambda * size() + mu]; }
  std::int64_t at(const Partition& lambda, const Partition& mu) const { return (*this)(index(lambda), index(mu)); }
  /// chi_lambda(id); the identity class is the last column.
  std::int64_t dim(std::size_t lambda) const { return (*this)(lambda, size() - 1); }

  const std::vector<std::int64_t>& raw() const { return values_; }

 private:
  int degree_;
  std::vector<Partition> partitions_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::int64_t> values_;
};

/// int64 entries and table memory stop being reasonable past this degree.
inline constexpr int kMaxCharTableCeiling = 26;

/// Process-wide ceiling used when char_table is called without one. Values above
/// kMaxCharTableCeiling throw DomainError.
void set_char_table_ceiling(int ceiling);
int char_table_ceiling();

/// Memoized table. Honours HURWITZ_CACHE_DIR for an on-disk copy. A ceiling of 0
/// means the process-wide one.
std::shared_ptr<const CharTable> char_table(int d, int ceiling = 0);

/// Uncached Murnaghan-Nakayama evaluation; works beyond the table ceiling.
std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu);

/// Table lookup when d is within the current ceiling, direct recursion otherwise.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// Hook length formula.
Integer dim(const Partition& lambda);

}  // namespace hurwitz
