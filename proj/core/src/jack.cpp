#include "hurwitz/jack.hpp"

#include <memory>
#include <mutex>
#include <optional>

#include "hurwitz/errors.hpp"
#include "hurwitz/parallel.hpp"

namespace hurwitz {

namespace {

using Vec = std::vector<Rational>;

// [m_mu] p_nu: ways to drop the parts of nu into the bins of mu so that bin j sums to mu_j.
Integer monomial_coefficient(const Partition& nu, const Partition& mu) {
  std::vector<int> room(mu.parts());
  Integer count = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == nu.length()) {
      ++count;  // sizes agree, so all bins are full
      return;
    }
    for (auto& slot : room) {
      if (slot < nu[i]) continue;
      slot -= nu[i];
      self(self, i + 1);
      slot += nu[i];
    }
  };
  rec(rec, 0);
  return count;
}

// Inverse of a square rational matrix by Gauss-Jordan.
std::vector<Vec> invert(std::vector<Vec> a) {
  const std::size_t n = a.size();
  std::vector<Vec> inv(n, Vec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw DomainError("singular change of basis");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[row][k] -= f * a[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

struct JackFamily {
  std::vector<Partition> parts;  // enumeration order
  std::vector<Vec> jack;         // p-coefficients of J_lambda, by enumeration index
};

// monomials in the power-sum basis, one table per degree
const std::vector<Vec>& monomials_in_psums(int d) {
  static std::mutex mutex;
  static std::map<int, std::vector<Vec>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  const auto parts = enumerate_partitions(d);
  const std::size_t n = parts.size();
  std::vector<Vec> p_in_m(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p_in_m[i][j] = Rational(monomial_coefficient(parts[i], parts[j]));
  // rows of p_in_m are p_nu in the m basis, so rows of the inverse are m_mu in the p basis
  return cache.emplace(d, invert(std::move(p_in_m))).first->second;
}

Vec hall_weights(const std::vector<Partition>& parts, const Rational& alpha) {
  Vec w;
  for (const auto& p : parts) w.push_back(Rational(class_data(p).stabilizer) * pow(alpha, p.length()));
  return w;
}

Rational dot(const Vec& a, const Vec& b, const Vec& w) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i] * w[i];
  return acc;
}

std::shared_ptr<const JackFamily> build_family(int d, const Rational& alpha) {
  auto fam = std::make_shared<JackFamily>();
  fam->parts = enumerate_partitions(d);
  const std::size_t n = fam->parts.size();
  const auto& m_in_p = monomials_in_psums(d);
  const Vec w = hall_weights(fam->parts, alpha);
  fam->jack.assign(n, Vec());
  std::vector<Rational> norms(n);
  // reverse enumeration order is a linear extension of dominance, smallest first
  for (std::size_t k = n; k-- > 0;) {
    Vec v = m_in_p[k];
    for (std::size_t prev = n - 1; prev > k; --prev) {
      const Rational c = dot(v, fam->jack[prev], w) / norms[prev];
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * fam->jack[prev][i];
    }
    norms[k] = dot(v, v, w);
    if (sgn(norms[k]) == 0)
      throw SingularParameterError("Gram pivot vanishes at " + fam->parts[k].to_string() + " for alpha = " +
                                   to_string(alpha));
    fam->jack[k] = v;
  }
  // rescale so that [p_(1^d)] J = 1; the projections above are scale free
  for (std::size_t k = 0; k < n; ++k) {
    const Rational lead = fam->jack[k][n - 1];
    if (sgn(lead) == 0)
      throw SingularParameterError("p_(1^d) coefficient vanishes at " + fam->parts[k].to_string() +
                                   " for alpha = " + to_string(alpha));
    for (auto& x : fam->jack[k]) x /= lead;
  }
  return fam;
}

std::shared_ptr<const JackFamily> family(int d, const Rational& alpha, int ceiling) {
  if (d > ceiling) throw SizeLimitError("Jack expansion", d, ceiling);
  if (sgn(alpha) == 0) throw SingularParameterError("alpha = 0 is degenerate");
  static std::mutex mutex;
  static std::map<std::pair<int, std::string>, std::shared_ptr<const JackFamily>> cache;
  const auto key = std::make_pair(d, to_string(alpha));
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto fam = build_family(d, alpha);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(fam)).first->second;
}

}  // namespace

Rational PSumExpansion::coefficient(const Partition& mu) const {
  auto it = coeffs.find(mu);
  return it == coeffs.end() ? Rational(0) : it->second;
}

Rational deformed_hall(const PSumExpansion& f, const PSumExpansion& g) {
  if (f.degree != g.degree || f.alpha != g.alpha) throw DomainError("inner product of mismatched expansions");
  Rational acc = 0;
  for (const auto& [mu, c] : f.coeffs) {
    auto it = g.coeffs.find(mu);
    if (it == g.coeffs.end()) continue;
    acc += c * it->second * Rational(class_data(mu).stabilizer) * pow(f.alpha, mu.length());
  }
  return acc;
}

PSumExpansion jack_in_psums(const Partition& lambda, const Rational& alpha, int ceiling) {
  auto fam = family(lambda.size(), alpha, ceiling);
  PSumExpansion out;
  out.degree = lambda.size();
  out.alpha = alpha;
  std::size_t k = 0;
  while (!(fam->parts[k] == lambda)) ++k;
  for (std::size_t i = 0; i < fam->parts.size(); ++i)
    if (sgn(fam->jack[k][i]) != 0) out.coeffs.emplace(fam->parts[i], fam->jack[k][i]);
  return out;
}

Rational jack_norm(const Partition& lambda, const Rational& alpha) {
  const Partition t = transpose(lambda);
  Rational a = 1, b = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const int arm = lambda[i] - j - 1;
      const int leg = t[j] - i - 1;
      a *= alpha * arm + leg + 1;
      b *= alpha * arm + leg + alpha;
    }
  }
  return a * b;
}

Rational jack_character(const Partition& lambda, const Partition& mu, const Rational& alpha) {
  if (lambda.size() != mu.size()) throw DomainError("Jack character needs |lambda| = |mu|");
  return jack_in_psums(lambda, alpha).coefficient(mu) / Rational(class_data(mu).class_size);
}

std::vector<Rational> deformed_contents(const Partition& lambda, const Rational& alpha) {
  std::vector<Rational> out;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) out.push_back(alpha * j - i);
  return out;
}

std::vector<MultiPoly> b_hurwitz_series(int r_max, const GSpec& g, const ProfileSet& profiles, const Rational& b,
                                        const DegreeCaps* caps) {
  if (profiles.degree < 1) throw DomainError("degree must be at least 1");
  if (r_max < 0) throw DomainError("r must be nonnegative");
  const Rational alpha = b + 1;
  const int d = profiles.degree;
  auto fam = family(d, alpha, kDefaultJackCeiling);
  const VarLayout layout = g.layout();
  std::vector<Rational> class_sizes;
  for (const auto& mu : profiles.profiles) class_sizes.push_back(Rational(class_data(mu).class_size));

  auto terms = parallel_map<std::optional<TruncSeries>>(fam->parts.size(), [&](std::size_t k) {
    std::optional<TruncSeries> out;
    const Partition& lambda = fam->parts[k];
    const Rational norm = jack_norm(lambda, alpha);
    if (sgn(norm) == 0) throw SingularParameterError("Jack norm vanishes at " + lambda.to_string());
    Rational weight = 1 / norm;
    for (std::size_t j = 0; j < profiles.profiles.size(); ++j) {
      std::size_t col = 0;
      while (!(fam->parts[col] == profiles.profiles[j])) ++col;
      weight *= fam->jack[k][col] / class_sizes[j];
    }
    if (sgn(weight) == 0) return out;
    TruncSeries s = TruncSeries::one(layout, r_max, caps);
    const MultiPoly one(layout, Rational(1));
    for (const auto& c : deformed_contents(lambda, alpha)) {
      if (sgn(c) == 0) continue;
      for (int i = 0; i < g.K; ++i) s.div_linear(c, one);
      for (int i = 0; i < g.L; ++i) s.mul_linear(c, MultiPoly::variable(layout, layout.u(i)));
      for (int j = 0; j < g.M; ++j) s.div_linear(c, MultiPoly::variable(layout, layout.v(j)));
    }
    s *= weight;
    out = std::move(s);
    return out;
  });
  TruncSeries acc(layout, r_max, caps);
  for (const auto& t : terms)
    if (t) acc += *t;
  std::vector<MultiPoly> out;
  for (int k = 0; k <= r_max; ++k) out.push_back(coeff_z(acc, k));
  return out;
}

MultiPoly b_hurwitz_coefficient(int r, const GSpec& g, const ProfileSet& profiles, const Rational& b,
                                const DegreeCaps* caps) {
  return b_hurwitz_series(r, g, profiles, b, caps)[r];
}

}  // namespace hurwitz
