#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

Partition cycle_type_of(const Perm& p) {
  std::vector<int> parts;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

void check_degree(int d) {
  if (d < 0) throw DomainError("negative degree");
  if (d > kOracleMaxDegree) throw SizeLimitError("oracle degree", d, kOracleMaxDegree);
}

// Set partition of {0..d-1} as a restricted growth string, 3 bits per point.
using Blocks = std::uint32_t;

int block_of(Blocks b, int i) { return static_cast<int>((b >> (3 * i)) & 7u); }

Blocks finest(int d) {
  Blocks b = 0;
  for (int i = 0; i < d; ++i) b |= static_cast<Blocks>(i) << (3 * i);
  return b;
}

Blocks join(Blocks b, int x, int y, int d) {
  const int bx = block_of(b, x), by = block_of(b, y);
  if (bx == by) return b;
  std::array<int, 8> relabel;
  relabel.fill(-1);
  Blocks out = 0;
  int next = 0;
  for (int i = 0; i < d; ++i) {
    int blk = block_of(b, i);
    if (blk == by) blk = bx;
    if (relabel[blk] < 0) relabel[blk] = next++;
    out |= static_cast<Blocks>(relabel[blk]) << (3 * i);
  }
  return out;
}

bool single_block(Blocks b, int d) {
  for (int i = 0; i < d; ++i)
    if (block_of(b, i) != 0) return false;
  return true;
}

int parity(const Partition& type) { return (type.size() - type.length()) % 2; }

}  // namespace

SymmetricGroup::SymmetricGroup(int d) : d_(d) {
  check_degree(d);
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  do {
    elements_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = elements_.size();
  for (const auto& e : elements_) types_.push_back(cycle_type_of(e));
  table_.resize(n * n);
  Perm c(d);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (int x = 0; x < d; ++x) c[x] = elements_[a][elements_[b][x]];
      table_[a * n + b] = static_cast<std::uint16_t>(index(c));
    }
  }
}

std::size_t SymmetricGroup::index(const Perm& p) const {
  // Lehmer rank, which is the lexicographic position
  std::size_t rank = 0;
  for (int i = 0; i < d_; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j < d_; ++j) smaller += p[j] < p[i];
    rank = rank * static_cast<std::size_t>(d_ - i) + smaller;
  }
  return rank;
}

std::size_t SymmetricGroup::transposition(int i, int j) const {
  Perm p(d_);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[i], p[j]);
  return index(p);
}

const SymmetricGroup& symmetric_group(int d) {
  check_degree(d);
  static std::array<std::once_flag, kOracleMaxDegree + 1> once;
  static std::array<std::unique_ptr<SymmetricGroup>, kOracleMaxDegree + 1> groups;
  std::call_once(once[d], [d] { groups[d] = std::make_unique<SymmetricGroup>(d); });
  return *groups[d];
}

Rational count_factorizations(const FactorizationQuery& q) {
  const int d = q.degree;
  check_degree(d);
  if (d < 1) throw DomainError("degree must be at least 1");
  int total = 0;
  for (const auto& b : q.blocks) {
    if (b.count < 0) throw DomainError("negative block size");
    total += b.count;
  }
  if (total > kOracleMaxTranspositions) throw SizeLimitError("oracle transpositions", total, kOracleMaxTranspositions);
  for (const auto& mu : q.profiles)
    if (mu.size() != d) throw DomainError("profile " + mu.to_string() + " is not a partition of " + std::to_string(d));

  const SymmetricGroup& group = symmetric_group(d);
  // state: product so far, connectivity of the generated orbits, larger point of the last transposition
  auto pack = [](std::size_t perm, Blocks blocks, int last) {
    return (static_cast<std::uint64_t>(perm) << 32) | (static_cast<std::uint64_t>(blocks) << 3) |
           static_cast<std::uint64_t>(last);
  };
  const Blocks start = q.transitive_only ? finest(d) : 0;
  std::unordered_map<std::uint64_t, Integer> states{{pack(group.identity(), start, 0), Integer(1)}};

  for (const auto& mu : q.profiles) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < group.order(); ++i)
      if (group.cycle_type(i) == mu) members.push_back(i);
    std::unordered_map<std::uint64_t, Integer> next;
    for (const auto& [key, count] : states) {
      const std::size_t perm = key >> 32;
      const Blocks blocks = static_cast<Blocks>((key >> 3) & 0x1fffffffu);
      for (std::size_t sigma : members) {
        Blocks nb = blocks;
        if (q.transitive_only) {
          const Perm& s = group.element(sigma);
          for (int x = 0; x < d; ++x) nb = join(nb, x, s[x], d);
        }
        next[pack(group.compose(perm, sigma), nb, 0)] += count;
      }
    }
    states = std::move(next);
  }

  int remaining = total;
  for (const auto& block : q.blocks) {
    for (int step = 0; step < block.count; ++step) {
      --remaining;
      std::unordered_map<std::uint64_t, Integer> next;
      for (const auto& [key, count] : states) {
        const std::size_t perm = key >> 32;
        const Blocks blocks = static_cast<Blocks>((key >> 3) & 0x1fffffffu);
        // the monotone rule restarts with each block
        const int last = step == 0 ? 0 : static_cast<int>(key & 7u);
        for (int hi = 1; hi < d; ++hi) {
          const int b = hi + 1;  // 1-based larger moved point
          if (block.constraint == BlockConstraint::weak && b < last) continue;
          if (block.constraint == BlockConstraint::strict && b <= last) continue;
          for (int lo = 0; lo < hi; ++lo) {
            const std::size_t np = group.compose(perm, group.transposition(lo, hi));
            // the remaining transpositions must restore even parity
            if ((parity(group.cycle_type(np)) + remaining) % 2 != 0) continue;
            const Blocks nb = q.transitive_only ? join(blocks, lo, hi, d) : blocks;
            next[pack(np, nb, b)] += count;
          }
        }
      }
      states = std::move(next);
    }
  }

  Integer hits = 0;
  for (const auto& [key, count] : states) {
    if ((key >> 32) != group.identity()) continue;
    if (q.transitive_only && !single_block(static_cast<Blocks>((key >> 3) & 0x1fffffffu), d)) continue;
    hits += count;
  }
  Integer norm = factorial(d);
  for (const auto& mu : q.profiles) norm *= class_data(mu).class_size;
  return make_rational(hits, norm);
}

Rational hypergeometric_oracle(const ProfileSet& profiles, int r, int K, const std::vector<int>& u_degrees,
                               const std::vector<int>& v_degrees, bool transitive_only) {
  FactorizationQuery q;
  q.degree = profiles.degree;
  q.profiles = profiles.profiles;
  q.transitive_only = transitive_only;
  int fixed = 0;
  std::vector<Block> tail;
  for (int a : u_degrees) {
    tail.push_back({a, BlockConstraint::strict});
    fixed += a;
  }
  for (int b : v_degrees) {
    tail.push_back({b, BlockConstraint::weak});
    fixed += b;
  }
  const int free = r - fixed;
  if (free < 0 || (K == 0 && free != 0)) return 0;
  Rational acc = 0;
  // every composition of the free transpositions into K weak blocks
  std::vector<int> sizes(K, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == K - 1 || K == 0) {
      if (K > 0) sizes[i] = left;
      q.blocks.clear();
      for (int s : sizes) q.blocks.push_back({s, BlockConstraint::weak});
      q.blocks.insert(q.blocks.end(), tail.begin(), tail.end());
      acc += count_factorizations(q);
      return;
    }
    for (int s = 0; s <= left; ++s) {
      sizes[i] = s;
      self(self, i + 1, left - s);
    }
  };
  rec(rec, 0, free);
  return acc;
}

GroupAlgebraElement::GroupAlgebraElement(int d) : degree(d), coeffs(symmetric_group(d).order(), Rational(0)) {}

GroupAlgebraElement GroupAlgebraElement::identity(int d) {
  GroupAlgebraElement e(d);
  e.coeffs[symmetric_group(d).identity()] = 1;
  return e;
}

GroupAlgebraElement GroupAlgebraElement::class_sum(const Partition& mu) {
  GroupAlgebraElement e(mu.size());
  const auto& group = symmetric_group(mu.size());
  for (std::size_t i = 0; i < group.order(); ++i)
    if (group.cycle_type(i) == mu) e.coeffs[i] = 1;
  return e;
}

Rational GroupAlgebraElement::coefficient(const Perm& p) const { return coeffs[symmetric_group(degree).index(p)]; }

bool GroupAlgebraElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool GroupAlgebraElement::is_central_function() const {
  const auto& group = symmetric_group(degree);
  std::map<Partition, Rational> seen;
  for (std::size_t i = 0; i < group.order(); ++i) {
    auto [it, inserted] = seen.emplace(group.cycle_type(i), coeffs[i]);
    if (!inserted && it->second != coeffs[i]) return false;
  }
  return true;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (o.degree != degree) throw DomainError("group algebra elements of different degrees");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  if (o.degree != degree) throw DomainError("group algebra elements of different degrees");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
  for (auto& x : coeffs) x *= c;
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree != b.degree) throw DomainError("group algebra elements of different degrees");
  const auto& group = symmetric_group(a.degree);
  GroupAlgebraElement out(a.degree);
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (sgn(a.coeffs[i]) == 0) continue;
    for (std::size_t j = 0; j < group.order(); ++j) {
      if (sgn(b.coeffs[j]) == 0) continue;
      out.coeffs[group.compose(i, j)] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return out;
}

GroupAlgebraElement jucys_murphy(int k, int d) {
  if (k < 1 || k > d) throw DomainError("Jucys-Murphy index out of range");
  const auto& group = symmetric_group(d);
  GroupAlgebraElement out(d);
  for (int i = 1; i < k; ++i) out.coeffs[group.transposition(i - 1, k - 1)] = 1;
  return out;
}

GroupAlgebraElement jm_symmetric_evaluate(SymmetricKind kind, int k, int d) {
  check_degree(d);
  if (k < 0) throw DomainError("negative degree of symmetric polynomial");
  if (k > 8) throw SizeLimitError("symmetric polynomial degree", k, 8);
  if (d < 1) throw DomainError("degree must be at least 1");
  // table[j] = symmetric polynomial of degree j in J_1..J_m, grown one variable at a time
  std::vector<GroupAlgebraElement> table(k + 1, GroupAlgebraElement(d));
  table[0] = GroupAlgebraElement::identity(d);
  for (int m = 1; m <= d; ++m) {
    const GroupAlgebraElement jm = jucys_murphy(m, d);
    if (kind == SymmetricKind::elementary) {
      for (int j = k; j >= 1; --j) table[j] += jm * table[j - 1];
    } else {
      for (int j = 1; j <= k; ++j) table[j] += jm * table[j - 1];
    }
  }
  return table[k];
}

GroupAlgebraElement jucys_stirling_display(SymmetricKind kind, int k, int d) {
  const auto& group = symmetric_group(d);
  GroupAlgebraElement out(d);
  if (k > d) return out;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const int m = group.cycle_type(i).length();
    if (m > k) continue;
    if (kind == SymmetricKind::elementary) {
      Integer c = stirling(StirlingKind::first, d - m, d - k);
      out.coeffs[i] = (k - m) % 2 ? Rational(-c) : Rational(c);
    } else {
      out.coeffs[i] = Rational(stirling(StirlingKind::second, d - m, d - k));
    }
  }
  return out;
}

GroupAlgebraElement central_idempotent(const Partition& lambda) {
  const int d = lambda.size();
  GroupAlgebraElement out(d);
  const auto& group = symmetric_group(d);
  const Rational scale = make_rational(dim(lambda), factorial(d));
  for (std::size_t i = 0; i < group.order(); ++i)
    out.coeffs[i] = scale * Rational(Integer(static_cast<long>(character(lambda, group.cycle_type(i)))));
  return out;
}

IdempotentReport idempotent_check(const Partition& lambda, const NumericG& g, int z_order) {
  const int d = lambda.size();
  check_degree(d);
  if (d > 5) throw SizeLimitError("idempotent check degree", d, 5);
  if (z_order < 0) throw DomainError("negative z-order");
  IdempotentReport report;
  const GroupAlgebraElement f = central_idempotent(lambda);
  report.idempotent = f * f == f;
  report.orthogonal = true;
  for (const auto& eta : enumerate_partitions(d))
    if (!(eta == lambda)) report.orthogonal = report.orthogonal && (f * central_idempotent(eta)).is_zero();

  // left side: prod_i G(z J_i) as a truncated series over the group algebra
  std::vector<GroupAlgebraElement> series(z_order + 1, GroupAlgebraElement(d));
  series[0] = GroupAlgebraElement::identity(d);
  auto times_linear = [&](const GroupAlgebraElement& x, const Rational& c) {  // (1 + c z x)
    for (int k = z_order; k >= 1; --k) {
      GroupAlgebraElement t = x * series[k - 1];
      t *= c;
      series[k] += t;
    }
  };
  auto over_linear = [&](const GroupAlgebraElement& x, const Rational& c) {  // 1/(1 - c z x)
    for (int k = 1; k <= z_order; ++k) {
      GroupAlgebraElement t = x * series[k - 1];
      t *= c;
      series[k] += t;
    }
  };
  for (int i = 1; i <= d; ++i) {
    const GroupAlgebraElement j = jucys_murphy(i, d);
    for (int k = 0; k < g.K; ++k) over_linear(j, 1);
    for (const auto& u : g.u) times_linear(j, u);
    for (const auto& v : g.v) over_linear(j, v);
  }
  // right side: the same product with J_i replaced by the contents
  std::vector<Rational> scalar(z_order + 1, Rational(0));
  scalar[0] = 1;
  for (int c : contents(lambda)) {
    auto lin = [&](const Rational& w, bool inverse) {
      if (inverse) {
        for (int k = 1; k <= z_order; ++k) scalar[k] += w * scalar[k - 1];
      } else {
        for (int k = z_order; k >= 1; --k) scalar[k] += w * scalar[k - 1];
      }
    };
    for (int k = 0; k < g.K; ++k) lin(Rational(c), true);
    for (const auto& u : g.u) lin(u * c, false);
    for (const auto& v : g.v) lin(v * c, true);
  }
  report.eigenvalue = true;
  for (int k = 0; k <= z_order; ++k) {
    GroupAlgebraElement rhs = f;
    rhs *= scalar[k];
    report.eigenvalue = report.eigenvalue && series[k] * f == rhs;
  }
  return report;
}

namespace {

// semistandard tableaux of shape nu with content lambda, peeling horizontal strips
Integer kostka(const Partition& nu, const std::vector<int>& content, std::size_t upto) {
  if (upto == 0) return nu.empty() ? 1 : 0;
  const int strip = content[upto - 1];
  const auto& rows = nu.parts();
  Integer acc = 0;
  std::vector<int> inner(rows);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == rows.size()) {
      if (left != 0) return;
      std::vector<int> kept;
      for (int x : inner)
        if (x > 0) kept.push_back(x);
      acc += kostka(Partition(kept), content, upto - 1);
      return;
    }
    const int floor = i + 1 < rows.size() ? rows[i + 1] : 0;
    for (int take = 0; take <= std::min(left, rows[i] - floor); ++take) {
      inner[i] = rows[i] - take;
      self(self, i + 1, left - take);
    }
    inner[i] = rows[i];
  };
  rec(rec, 0, strip);
  return acc;
}

Integer fixed_tabloids(const Partition& shape, const Perm& sigma) {
  const int d = shape.size();
  std::vector<int> row(d, -1), room(shape.parts());
  Integer count = 0;
  auto rec = [&](auto&& self, int x) -> void {
    if (x == d) {
      for (int y = 0; y < d; ++y)
        if (row[sigma[y]] != row[y]) return;
      ++count;
      return;
    }
    for (std::size_t k = 0; k < room.size(); ++k) {
      if (!room[k]) continue;
      --room[k];
      row[x] = static_cast<int>(k);
      self(self, x + 1);
      ++room[k];
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

std::vector<std::vector<Integer>> brute_force_character_table(int d) {
  check_degree(d);
  const auto parts = enumerate_partitions(d);
  const std::size_t n = parts.size();
  const auto& group = symmetric_group(d);
  std::vector<Perm> reps;
  for (const auto& mu : parts) {
    std::size_t i = 0;
    while (!(group.cycle_type(i) == mu)) ++i;
    reps.push_back(group.element(i));
  }
  std::vector<std::vector<Integer>> perm_char(n, std::vector<Integer>(n));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) perm_char[l][m] = fixed_tabloids(parts[l], reps[m]);
  // perm_char[lambda] = sum_nu K(nu, lambda) chi[nu]; K is unitriangular with nu before lambda
  std::vector<std::vector<Integer>> chi(n, std::vector<Integer>(n));
  for (std::size_t l = 0; l < n; ++l) {
    chi[l] = perm_char[l];
    for (std::size_t nu = 0; nu < l; ++nu) {
      const Integer k = kostka(parts[nu], parts[l].parts(), parts[l].parts().size());
      if (k == 0) continue;
      for (std::size_t m = 0; m < n; ++m) chi[l][m] -= k * chi[nu][m];
    }
  }
  return chi;
}

}  // namespace hurwitz
