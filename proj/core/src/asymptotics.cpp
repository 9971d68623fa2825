#include "hurwitz/asymptotics.hpp"

#include <sstream>

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/jack.hpp"
#include "hurwitz/parallel.hpp"

namespace hurwitz {

namespace {

DegreeCaps v_caps(const VarLayout& layout, int v_degree) {
  DegreeCaps caps = DegreeCaps::none(layout);
  for (int j = 0; j < layout.num_v; ++j) caps.max_exp[layout.v(j)] = v_degree;
  return caps;
}

// sum_{k <= degree} (x v)^k
MultiPoly truncated_geometric(const VarLayout& layout, int var, const Rational& x, int degree) {
  MultiPoly out(layout);
  Exponent e(layout.arity(), 0);
  Rational xk = 1;
  for (int k = 0; k <= degree; ++k) {
    e[var] = static_cast<std::uint16_t>(k);
    out.add_term(e, xk);
    xk *= x;
  }
  return out;
}

// Top coefficient at z = 1/c0 from the partitions carrying the most boxes of content c0.
PoleCoefficient pole_at_content(const GSpec& g, const ProfileSet& profiles, int c0, int v_degree) {
  const VarLayout layout = g.layout();
  const DegreeCaps caps = v_caps(layout, v_degree);
  auto table = char_table(profiles.degree);
  const auto weights = character_weights(profiles);
  const auto& parts = table->partitions();
  const Integer df = factorial(profiles.degree);
  const Rational z0 = make_rational(1, c0);

  int best = 0;
  std::vector<int> mult(parts.size(), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (sgn(weights[i]) == 0) continue;
    for (int c : contents(parts[i])) mult[i] += c == c0;
    best = std::max(best, mult[i]);
  }
  PoleCoefficient out;
  out.rho = c0;
  out.order = g.K * best;
  out.top = MultiPoly(layout);
  if (best == 0 || g.K == 0) return out;

  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (mult[i] != best) continue;
    MultiPoly term(layout, weights[i] / Rational(df * df));
    for (int c : contents(parts[i])) {
      const Rational x = Rational(c) * z0;  // z * content at the pole
      if (c != c0) term *= pow(1 - x, -g.K);
      for (int k = 0; k < g.L; ++k) {
        MultiPoly f(layout, Rational(1));
        f += MultiPoly::variable(layout, layout.u(k), x);
        term = MultiPoly::mul(term, f, &caps);
      }
      for (int k = 0; k < g.M; ++k) term = MultiPoly::mul(term, truncated_geometric(layout, layout.v(k), x, v_degree), &caps);
    }
    out.top += term;
  }
  return out;
}

}  // namespace

PoleCoefficient pole_coefficient(const GSpec& g, const ProfileSet& profiles, int sign, int v_degree) {
  if (g.K < 1) throw DomainError("a pole needs K >= 1");
  if (profiles.degree < 2) throw DomainError("degree 1 has no pole: the series is a polynomial in z");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  return pole_at_content(g, profiles, sign * (profiles.degree - 1), v_degree);
}

PoleCoefficient pole_coefficient_closed_form(const GSpec& g, const ProfileSet& profiles, int sign, int v_degree) {
  if (g.K < 1) throw DomainError("a pole needs K >= 1");
  const int d = profiles.degree;
  if (d < 2) throw DomainError("degree 1 has no pole: the series is a polynomial in z");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  const VarLayout layout = g.layout();
  const DegreeCaps caps = v_caps(layout, v_degree);
  const int parity = profiles.count() * d - profiles.total_length();
  const Integer df = factorial(d);
  Rational scale = pow(Rational(d - 1), static_cast<long>(g.K) * (d - 2)) /
                   (Rational(df * df) * pow(Rational(factorial(d - 2)), g.K));
  if (sign < 0 && parity % 2 != 0) scale = -scale;
  MultiPoly top(layout, scale);
  const Rational inv = make_rational(1, d - 1);
  for (int i = 0; i < g.L; ++i) {
    MultiPoly f(layout);
    Exponent e(layout.arity(), 0);
    for (int a = 0; a < d; ++a) {
      e[layout.u(i)] = static_cast<std::uint16_t>(a);
      f.add_term(e, Rational(stirling(StirlingKind::first, d, d - a)) * pow(inv, a));
    }
    top = MultiPoly::mul(top, f, &caps);
  }
  for (int j = 0; j < g.M; ++j) {
    MultiPoly f(layout);
    Exponent e(layout.arity(), 0);
    for (int b = 0; b <= v_degree; ++b) {
      e[layout.v(j)] = static_cast<std::uint16_t>(b);
      f.add_term(e, Rational(stirling(StirlingKind::second, b + d - 1, d - 1)) * pow(inv, b));
    }
    top = MultiPoly::mul(top, f, &caps);
  }
  return {Rational(sign * (d - 1)), g.K, top};
}

PoleCoefficient next_pole_coefficient(const GSpec& g, const ProfileSet& profiles, int sign, int v_degree) {
  if (g.K < 1) throw DomainError("a pole needs K >= 1");
  if (profiles.degree < 3) throw DomainError("the next pole needs degree at least 3");
  return pole_at_content(g, profiles, sign * (profiles.degree - 2), v_degree);
}

Rational monotone_leading_term(int r, int d, int N, int length_sum, int K, const std::vector<int>& a,
                               const std::vector<int>& b) {
  (void)N;
  (void)length_sum;
  if (K < 1) throw DomainError("the leading term needs K >= 1");
  if (d < 2) throw DomainError("the leading term needs d >= 2");
  if (r < 0) throw DomainError("r must be nonnegative");
  long exponent = static_cast<long>(d - 2) * K + r;
  Rational stirlings = 1;
  for (int ai : a) {
    if (ai < 0) throw DomainError("monomial degrees must be nonnegative");
    if (ai >= d) return 0;  // strictly monotone blocks are exhausted
    exponent -= ai;
    stirlings *= Rational(stirling(StirlingKind::first, d, d - ai));
  }
  for (int bj : b) {
    if (bj < 0) throw DomainError("monomial degrees must be nonnegative");
    exponent -= bj;
    stirlings *= Rational(stirling(StirlingKind::second, bj + d - 1, d - 1));
  }
  const Integer df = factorial(d);
  return 2 * pow(Rational(r), K - 1) / Rational(factorial(K - 1)) * pow(Rational(d - 1), exponent) /
         (Rational(df * df) * pow(Rational(factorial(d - 2)), K)) * stirlings;
}

Rational completed_leading_term(int r, int d, int s, int N, int length_sum) {
  (void)N;
  (void)length_sum;
  if (r < 0) throw DomainError("r must be nonnegative");
  const Integer df = factorial(d);
  return 2 * pow(M_ds(d, s), r) / Rational(df * df);
}

GaussianRational b_leading_term(int r, int d, int N, int length_sum, int K, const std::vector<int>& a,
                                const std::vector<int>& b_exps, const GaussianRational& b) {
  if (K < 1) throw DomainError("the leading term needs K >= 1");
  if (d < 2) throw DomainError("the leading term needs d >= 2");
  const GaussianRational alpha = b + GaussianRational(1);
  if (sgn(alpha.re) <= 0) throw DomainError("b must have real part > -1");
  long exponent = static_cast<long>(d - 2) * K + r;
  Rational stirlings = 1;
  for (int ai : a) {
    if (ai >= d) return GaussianRational(0);
    exponent -= ai;
    stirlings *= Rational(stirling(StirlingKind::first, d, d - ai));
  }
  for (int bj : b_exps) {
    exponent -= bj;
    stirlings *= Rational(stirling(StirlingKind::second, bj + d - 1, d - 1));
  }
  GaussianRational denom(Rational(factorial(d)) * pow(Rational(factorial(d - 2)), K));
  for (int m = 1; m < d; ++m) denom *= GaussianRational(1) + alpha * GaussianRational(m);
  const Rational base = pow(Rational(r), K - 1) / Rational(factorial(K - 1)) * pow(Rational(d - 1), exponent) * stirlings;

  const long alpha_exp = static_cast<long>(r) + static_cast<long>(N - 1) * d - length_sum;
  const long sign_exp = static_cast<long>(r) + static_cast<long>(N) * d - length_sum;
  const GaussianRational alpha_part = pow(alpha, alpha_exp);
  const GaussianRational sign_part(sign_exp % 2 == 0 ? 1 : -1);
  const Rational modulus = alpha.norm_squared();
  GaussianRational regime;
  if (modulus > 1) {
    regime = alpha_part;
  } else if (modulus < 1) {
    regime = sign_part;
  } else {
    regime = alpha_part + sign_part;
  }
  return GaussianRational(base) * regime / denom;
}

Rational b_leading_term_from_norms(int r, const GSpec& g, const ProfileSet& profiles, const Rational& b,
                                   const Exponent& monomial) {
  if (g.K < 1) throw DomainError("the leading term needs K >= 1");
  const int d = profiles.degree;
  if (d < 2) throw DomainError("the leading term needs d >= 2");
  const Rational alpha = b + 1;
  if (sgn(alpha) <= 0) throw DomainError("b must be > -1");
  const VarLayout layout = g.layout();
  DegreeCaps caps = DegreeCaps::none(layout);
  for (int i = 0; i < layout.arity(); ++i) caps.max_exp[i] = monomial.at(i);

  std::vector<Partition> dominant;
  if (alpha >= 1) dominant.push_back(Partition::row(d));
  if (alpha <= 1) dominant.push_back(Partition::column(d));
  Rational acc = 0;
  for (const auto& lambda : dominant) {
    const auto cs = deformed_contents(lambda, alpha);
    Rational rho = 0;
    for (const auto& c : cs)
      if (abs(c) > abs(rho)) rho = c;
    Rational weight = 1 / jack_norm(lambda, alpha);
    for (const auto& mu : profiles.profiles) weight *= jack_character(lambda, mu, alpha);
    MultiPoly top(layout, weight);
    for (const auto& c : cs) {
      const Rational x = c / rho;
      if (c != rho) top *= pow(1 - x, -g.K);
      for (int i = 0; i < g.L; ++i) {
        MultiPoly f(layout, Rational(1));
        f += MultiPoly::variable(layout, layout.u(i), x);
        top = MultiPoly::mul(top, f, &caps);
      }
      for (int j = 0; j < g.M; ++j)
        top = MultiPoly::mul(top, truncated_geometric(layout, layout.v(j), x, monomial.at(layout.v(j))), &caps);
    }
    acc += top.coefficient(monomial) * pow(rho, r);
  }
  return acc * pow(Rational(r), g.K - 1) / Rational(factorial(g.K - 1));
}

Rational gw_leading_term(const Partition& mu, const Partition& nu, const std::map<int, int>& insertions) {
  if (mu.size() != nu.size()) throw DomainError("relative conditions of different degrees");
  const int d = mu.size();
  const Integer df = factorial(d);
  Rational acc = make_rational(2, class_data(mu).stabilizer * class_data(nu).stabilizer * df * df);
  for (const auto& [s, m] : insertions) acc *= pow(M_ds(d, s) / Rational(factorial(s)), m);
  return acc;
}

Rational RatioReport::final_error() const {
  if (rows.empty()) throw DomainError("empty ratio report");
  return abs(rows.back().ratio - 1);
}

std::string RatioReport::to_csv() const {
  std::ostringstream os;
  os << "r,exact,asymptotic,ratio\n";
  for (const auto& row : rows)
    os << row.r << ',' << to_string(row.exact) << ',' << to_string(row.asymptotic) << ','
       << to_decimal(row.ratio, precision_bits) << '\n';
  return os.str();
}

std::string RatioReport::to_json() const {
  std::ostringstream os;
  os << "{\"rows\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    os << (i ? "," : "") << "{\"r\":" << row.r << ",\"exact\":\"" << to_string(row.exact) << "\",\"asymptotic\":\""
       << to_string(row.asymptotic) << "\",\"ratio\":\"" << to_decimal(row.ratio, precision_bits) << "\"}";
  }
  os << "],\"monotone_from\":" << (monotone_from ? std::to_string(*monotone_from) : "null")
     << ",\"diverging\":" << (diverging ? "true" : "false") << '}';
  return os.str();
}

RatioReport ratio_report(const std::function<Rational(int)>& exact, const std::function<Rational(int)>& asymptotic,
                         int r_min, int r_max, unsigned precision_bits) {
  if (r_min < 0 || r_max < r_min) throw DomainError("bad r range");
  const auto n = static_cast<std::size_t>(r_max - r_min + 1);
  auto computed = parallel_map<std::optional<RatioRow>>(n, [&](std::size_t i) {
    std::optional<RatioRow> row;
    const int r = r_min + static_cast<int>(i);
    Rational e = exact(r);
    if (sgn(e) == 0) return row;
    Rational a = asymptotic(r);
    if (sgn(a) == 0) throw DomainError("leading term vanishes at r = " + std::to_string(r) + " where the exact value does not");
    row = RatioRow{r, e, a, e / a};
    return row;
  });
  RatioReport report;
  report.precision_bits = precision_bits;
  for (auto& row : computed)
    if (row) report.rows.push_back(std::move(*row));
  if (report.rows.empty()) throw DomainError("every exact value in the range is zero");

  std::vector<Rational> err;
  for (const auto& row : report.rows) err.push_back(abs(row.ratio - 1));
  std::size_t start = err.size() - 1;
  while (start > 0 && err[start - 1] >= err[start]) --start;
  report.monotone_from = report.rows[start].r;
  const std::size_t m = err.size();
  report.diverging = m >= 3 && err[m - 1] > err[m - 2] && err[m - 2] > err[m - 3];
  return report;
}

}  // namespace hurwitz
