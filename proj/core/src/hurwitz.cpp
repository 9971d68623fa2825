#include "hurwitz/hurwitz.hpp"

#include <algorithm>
#include <mutex>

#include "hurwitz/characters.hpp"
#include "hurwitz/connected.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/parallel.hpp"

namespace hurwitz {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::classical: return "classical";
    case Kind::completed: return "completed";
    case Kind::hypergeometric: return "hypergeometric";
    case Kind::b_content: return "b_content";
    case Kind::gw: return "gw";
    case Kind::orbifold: return "orbifold";
  }
  return "unknown";
}

std::optional<long> HurwitzResult::genus() const {
  if (!genus_raw || genus_raw->get_den() != 1 || sgn(*genus_raw) < 0) return std::nullopt;
  return genus_raw->get_num().get_si();
}

Rational HurwitzResult::scalar() const {
  if (!value.is_constant()) throw DomainError("result carries formal variables");
  return value.constant_term();
}

namespace {

void require_degree(const ProfileSet& profiles) {
  if (profiles.degree < 1) throw DomainError("degree must be at least 1");
}

// 2g - 2 = r s + d(N - 2) - sum of lengths
Rational riemann_hurwitz_genus(long weighted_points, const ProfileSet& p) {
  return make_rational(weighted_points + 2 + static_cast<long>(p.degree) * (p.count() - 2) - p.total_length(), 2);
}

Rational inverse_square_factorial(int d) {
  Integer f = factorial(d);
  return make_rational(1, f * f);
}

Rational completed_disconnected(int r, int s, const ProfileSet& profiles) {
  auto table = char_table(profiles.degree);
  const auto weights = character_weights(profiles);
  const auto& parts = table->partitions();
  auto terms = parallel_map<Rational>(parts.size(), [&](std::size_t i) -> Rational {
    if (sgn(weights[i]) == 0) return 0;
    return weights[i] * pow(f_bar(parts[i], s + 1), r);
  });
  Rational acc = 0;
  for (const auto& t : terms) acc += t;
  return acc * inverse_square_factorial(profiles.degree);
}

TruncSeries content_series(const Partition& lambda, const GSpec& g, int r_max, const DegreeCaps* caps) {
  const VarLayout layout = g.layout();
  TruncSeries series = TruncSeries::one(layout, r_max, caps);
  const MultiPoly one(layout, Rational(1));
  std::vector<MultiPoly> us, vs;
  for (int i = 0; i < g.L; ++i) us.push_back(MultiPoly::variable(layout, layout.u(i)));
  for (int j = 0; j < g.M; ++j) vs.push_back(MultiPoly::variable(layout, layout.v(j)));
  for (int c : contents(lambda)) {
    if (c == 0) continue;  // G(0) = 1
    const Rational cz(c);
    for (int k = 0; k < g.K; ++k) series.div_linear(cz, one);
    for (const auto& u : us) series.mul_linear(cz, u);
    for (const auto& v : vs) series.div_linear(cz, v);
  }
  return series;
}

}  // namespace

Rational completion_constant(int s) {
  if (s < 1) throw DomainError("completion constant needs s >= 1");
  return (1 - make_rational(1, pow(Integer(2), static_cast<unsigned long>(s)))) * zeta_neg(s);
}

Rational f_bar(const Partition& lambda, int s) {
  if (s < 2) throw DomainError("f_bar needs s >= 2");
  const auto frob = frobenius_shifted(lambda);
  Integer num = 0;
  const auto e = static_cast<unsigned long>(s);
  for (int i = 0; i < frob.rank; ++i)
    num += pow(Integer(frob.a_prime[i].twice), e) - pow(Integer(-frob.b_prime[i].twice), e);
  return (make_rational(num, pow(Integer(2), e)) + completion_constant(s)) / s;
}

Rational M_ds(int d, int s) {
  if (d < 1 || s < 1) throw DomainError("M_ds needs d >= 1 and s >= 1");
  const auto e = static_cast<unsigned long>(s + 1);
  Integer num = pow(Integer(2L * d - 1), e) - pow(Integer(-1), e);
  return (make_rational(num, pow(Integer(2), e)) + completion_constant(s + 1)) / (s + 1);
}

std::vector<Rational> character_weights(const ProfileSet& profiles) {
  auto table = char_table(profiles.degree);
  std::vector<std::size_t> cols;
  for (const auto& mu : profiles.profiles) cols.push_back(table->index(mu));
  std::vector<Rational> out(table->size());
  const long dim_power = 2 - profiles.count();
  for (std::size_t i = 0; i < table->size(); ++i) {
    Rational w = pow(Rational(Integer(static_cast<long>(table->dim(i)))), dim_power);
    for (auto c : cols) w *= Integer(static_cast<long>((*table)(i, c)));
    out[i] = std::move(w);
  }
  return out;
}

HurwitzResult completed_hurwitz(int r, int s, const ProfileSet& profiles, bool connected) {
  require_degree(profiles);
  if (r < 0) throw DomainError("r must be nonnegative");
  if (s < 1) throw DomainError("completed cycles need s >= 1");
  HurwitzResult out;
  out.kind = s == 1 ? Kind::classical : Kind::completed;
  out.s = s;
  out.d = profiles.degree;
  out.r = r;
  out.profiles = profiles.profiles;
  out.connected = connected;
  out.genus_raw = riemann_hurwitz_genus(static_cast<long>(r) * s, profiles);
  const VarLayout scalar{};
  if (!connected) {
    out.value = MultiPoly(scalar, completed_disconnected(r, s, profiles));
    return out;
  }
  DisconnectedEvaluator eval = [s, scalar](const ProfileSet& p, const Orders& o) {
    return MultiPoly(scalar, completed_disconnected(o[0], s, p));
  };
  out.value = connected_transform(eval, profiles, {r}, {Interleaving::exponential}, scalar);
  return out;
}

Rational completed_mixed(const ProfileSet& profiles, const std::map<int, int>& insertions) {
  require_degree(profiles);
  auto table = char_table(profiles.degree);
  const auto weights = character_weights(profiles);
  const auto& parts = table->partitions();
  for (const auto& [s, m] : insertions)
    if (s < 1 || m < 0) throw DomainError("insertions need s >= 1 and m_s >= 0");
  auto terms = parallel_map<Rational>(parts.size(), [&](std::size_t i) -> Rational {
    if (sgn(weights[i]) == 0) return 0;
    Rational t = weights[i];
    for (const auto& [s, m] : insertions) t *= pow(f_bar(parts[i], s + 1), m);
    return t;
  });
  Rational acc = 0;
  for (const auto& t : terms) acc += t;
  return acc * inverse_square_factorial(profiles.degree);
}

std::vector<MultiPoly> hypergeometric_series(int r_max, const GSpec& g, const ProfileSet& profiles,
                                             const DegreeCaps* caps) {
  require_degree(profiles);
  if (r_max < 0) throw DomainError("r must be nonnegative");
  if (g.K < 0 || g.L < 0 || g.M < 0) throw DomainError("K, L, M must be nonnegative");
  auto table = char_table(profiles.degree);
  const auto weights = character_weights(profiles);
  const auto& parts = table->partitions();
  const Rational norm = inverse_square_factorial(profiles.degree);
  auto terms = parallel_map<std::optional<TruncSeries>>(parts.size(), [&](std::size_t i) {
    std::optional<TruncSeries> t;
    if (sgn(weights[i]) == 0) return t;
    t = content_series(parts[i], g, r_max, caps);
    *t *= weights[i] * norm;
    return t;
  });
  TruncSeries acc(g.layout(), r_max, caps);
  for (const auto& t : terms)
    if (t) acc += *t;
  std::vector<MultiPoly> out;
  for (int k = 0; k <= r_max; ++k) out.push_back(coeff_z(acc, k));
  return out;
}

HurwitzResult hypergeometric_hurwitz(int r, const GSpec& g, const ProfileSet& profiles, bool connected,
                                     const DegreeCaps* caps) {
  require_degree(profiles);
  if (r < 0) throw DomainError("r must be nonnegative");
  HurwitzResult out;
  out.kind = Kind::hypergeometric;
  out.d = profiles.degree;
  out.r = r;
  out.profiles = profiles.profiles;
  out.connected = connected;
  out.genus_raw = riemann_hurwitz_genus(r, profiles);
  if (!connected) {
    out.value = hypergeometric_series(r, g, profiles, caps)[r];
    return out;
  }
  // one series per sub-instance, reused for every order split
  std::map<std::string, std::vector<MultiPoly>> cache;
  std::mutex cache_mutex;
  DisconnectedEvaluator eval = [&](const ProfileSet& p, const Orders& o) {
    const std::string key = p.to_string();
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, hypergeometric_series(r, g, p, caps)).first;
    return it->second.at(o[0]);
  };
  out.value = connected_transform(eval, profiles, {r}, {Interleaving::ordinary}, g.layout(), caps);
  return out;
}

std::vector<std::pair<Rational, Rational>> structure_coefficients(int s, const ProfileSet& profiles) {
  require_degree(profiles);
  if (s < 1) throw DomainError("completed cycles need s >= 1");
  auto table = char_table(profiles.degree);
  const auto weights = character_weights(profiles);
  std::map<Rational, Rational> coeff;
  for (std::size_t i = 0; i < table->size(); ++i) {
    Rational f = f_bar(table->partitions()[i], s + 1);
    if (s % 2 == 1) {
      // f(lambda^T) = -f(lambda): at admissible parity the pair contributes twice
      // the positive member, and nothing survives from the negative one
      Rational key = abs(f);
      auto& c = coeff[key];
      if (sgn(f) > 0) c += weights[i];
      if (sgn(f) == 0) c += weights[i] / 2;
    } else {
      coeff[f] += weights[i] / 2;
    }
  }
  std::vector<std::pair<Rational, Rational>> out(coeff.rbegin(), coeff.rend());
  return out;
}

HurwitzResult orbifold_hurwitz(int r, int t, const Partition& mu, bool connected) {
  if (t < 1) throw DomainError("orbifold order t must be positive");
  const int d = mu.size();
  if (d < 1) throw DomainError("degree must be at least 1");
  if (d % t != 0) {
    HurwitzResult out;
    out.kind = Kind::orbifold;
    out.s = 1;
    out.t = t;
    out.d = d;
    out.r = r;
    out.profiles = {mu};
    out.connected = connected;
    out.value = MultiPoly(VarLayout{}, Rational(0));
    return out;
  }
  ProfileSet profiles(d, {mu, Partition(std::vector<int>(d / t, t))});
  HurwitzResult out = completed_hurwitz(r, 1, profiles, connected);
  out.kind = Kind::orbifold;
  out.t = t;
  return out;
}

HurwitzResult gw_correlator(const Partition& mu, const Partition& nu, const std::map<int, int>& insertions,
                            bool connected) {
  if (mu.size() != nu.size()) throw DomainError("relative conditions of different degrees");
  ProfileSet profiles(mu.size(), {mu, nu});
  require_degree(profiles);
  long weighted = 0;
  int count = 0;
  std::vector<int> orders_s;
  Orders orders;
  Integer factorials = 1;
  for (const auto& [s, m] : insertions) {
    if (s < 1 || m < 0) throw DomainError("insertions need s >= 1 and m_s >= 0");
    weighted += static_cast<long>(s) * m;
    count += m;
    orders_s.push_back(s);
    orders.push_back(m);
    factorials *= pow(factorial(s), static_cast<unsigned long>(m));
  }
  HurwitzResult out;
  out.kind = Kind::gw;
  out.d = mu.size();
  out.r = count;
  out.profiles = profiles.profiles;
  out.connected = connected;
  out.genus_raw = riemann_hurwitz_genus(weighted, profiles);

  Rational h;
  if (!connected) {
    h = completed_mixed(profiles, insertions);
  } else {
    const VarLayout scalar{};
    DisconnectedEvaluator eval = [&](const ProfileSet& p, const Orders& o) {
      std::map<int, int> ins;
      for (std::size_t k = 0; k < o.size(); ++k) ins[orders_s[k]] = o[k];
      return MultiPoly(scalar, completed_mixed(p, ins));
    };
    std::vector<Interleaving> slots(orders.size(), Interleaving::exponential);
    h = connected_transform(eval, profiles, orders, slots, scalar).constant_term();
  }
  const Integer z = class_data(mu).stabilizer * class_data(nu).stabilizer;
  out.value = MultiPoly(VarLayout{}, h / (Rational(z) * Rational(factorials)));
  return out;
}

Rational higher_genus_target(int h, int r_target, const HurwitzResult& base) {
  if (h < 0) throw DomainError("target genus must be nonnegative");
  const long shifted = r_target - 2L * base.d * h;
  if (shifted < 0) throw DomainError("r - 2dh is negative");
  if (shifted != base.r)
    throw DomainError("base was computed at r = " + std::to_string(base.r) + ", expected " + std::to_string(shifted));
  Integer f = factorial(base.d);
  return pow(Rational(f), 2L * h) * base.scalar();
}

}  // namespace hurwitz
