// hurwitz: compute exact numbers, run verification sweeps, emit tables.
//
// Exit codes: 0 success or pass, 1 verification failure, 2 resource ceiling,
// 3 usage error.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/asymptotics.hpp"
#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/jack.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/parallel.hpp"
#include "hurwitz/serialize.hpp"

using json = nlohmann::ordered_json;
using namespace hurwitz;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitCeiling = 2;
constexpr int kExitUsage = 3;

struct UsageError : std::runtime_error {
  UsageError(const std::string& field, const std::string& msg) : std::runtime_error("--" + field + ": " + msg) {}
};

struct RunConfig {
  std::string command;
  std::string suite;
  std::string what = "values";
  std::string kind = "classical";
  std::optional<int> d;
  std::optional<int> r;
  std::optional<int> r_min;
  std::optional<int> r_max;
  int s = 1;
  int K = 0;
  int L = 0;
  int M = 0;
  std::string profiles;
  std::string b = "0";
  int t = 1;
  std::vector<int> u_deg;
  std::vector<int> v_deg;
  std::string insertions;
  bool connected = false;
  std::string normalization = "paper";
  std::string format = "json";
  std::string tol = "1/1000";
  unsigned threads = 1;
  std::optional<int> max_d;

  json to_json() const {
    json j;
    j["command"] = command;
    if (!suite.empty()) j["suite"] = suite;
    if (command == "table") j["what"] = what;
    j["kind"] = kind;
    j["d"] = d ? json(*d) : json(nullptr);
    if (r) j["r"] = *r;
    if (r_min) j["r_min"] = *r_min;
    if (r_max) j["r_max"] = *r_max;
    j["s"] = s;
    j["K"] = K;
    j["L"] = L;
    j["M"] = M;
    j["profiles"] = profiles;
    j["b"] = b;
    j["t"] = t;
    j["u_deg"] = u_deg;
    j["v_deg"] = v_deg;
    j["insertions"] = insertions;
    j["connected"] = connected;
    j["normalization"] = normalization;
    j["format"] = format;
    j["tol"] = tol;
    j["threads"] = threads;
    j["max_d"] = max_d.value_or(command == "verify" && suite == "oracle" ? 5 : char_table_ceiling());
    return j;
  }
};

// ---------------------------------------------------------------------------
// config resolution

std::vector<Partition> parse_profiles(const std::string& text) {
  std::vector<Partition> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      out.push_back(parse_partition(item));
    } catch (const DomainError& e) {
      throw UsageError("profiles", e.what());
    }
  }
  return out;
}

ProfileSet resolve_profiles(const RunConfig& c) {
  auto mus = parse_profiles(c.profiles);
  int d = c.d.value_or(mus.empty() ? 0 : mus.front().size());
  if (d < 1) throw UsageError("d", "a positive degree is required (or give --profiles)");
  for (const auto& mu : mus)
    if (mu.size() != d) throw UsageError("profiles", "profile " + mu.to_string() + " is not a partition of " + std::to_string(d));
  return ProfileSet(d, mus);
}

std::vector<int> resolve_orders(const RunConfig& c) {
  // explicit gw insertions fix everything; r plays no role
  if (c.kind == "gw" && !c.insertions.empty() && !c.r && !c.r_max) return {0};
  if (c.r) {
    if (*c.r < 0) throw UsageError("r", "must be nonnegative");
    return {*c.r};
  }
  if (!c.r_max) throw UsageError("r", "give --r or --r-max (with optional --r-min)");
  const int lo = c.r_min.value_or(0);
  if (lo < 0 || lo > *c.r_max) throw UsageError("r-min", "empty or negative range");
  std::vector<int> out;
  for (int r = lo; r <= *c.r_max; ++r) out.push_back(r);
  return out;
}

Rational resolve_b(const RunConfig& c) {
  try {
    return parse_rational(c.b);
  } catch (const std::exception& e) {
    throw UsageError("b", e.what());
  }
}

Rational resolve_tol(const RunConfig& c) {
  Rational tol;
  try {
    tol = parse_rational(c.tol);
  } catch (const std::exception& e) {
    throw UsageError("tol", e.what());
  }
  if (sgn(tol) < 0) throw UsageError("tol", "must be nonnegative");
  return tol;
}

GSpec resolve_g(const RunConfig& c) {
  if (c.K < 0 || c.L < 0 || c.M < 0) throw UsageError("K", "K, L, M must be nonnegative");
  if (!c.u_deg.empty() && static_cast<int>(c.u_deg.size()) != c.L)
    throw UsageError("u-deg", "needs exactly L entries");
  if (!c.v_deg.empty() && static_cast<int>(c.v_deg.size()) != c.M)
    throw UsageError("v-deg", "needs exactly M entries");
  return GSpec{c.K, c.L, c.M};
}

bool monomial_selected(const RunConfig& c) { return !c.u_deg.empty() || !c.v_deg.empty(); }

// Unselected variables are taken at degree 0.
Exponent resolve_monomial(const RunConfig& c, const VarLayout& layout) {
  Exponent e(layout.arity(), 0);
  for (int i = 0; i < static_cast<int>(c.u_deg.size()); ++i) {
    if (c.u_deg[i] < 0) throw UsageError("u-deg", "degrees must be nonnegative");
    e[layout.u(i)] = static_cast<std::uint16_t>(c.u_deg[i]);
  }
  for (int j = 0; j < static_cast<int>(c.v_deg.size()); ++j) {
    if (c.v_deg[j] < 0) throw UsageError("v-deg", "degrees must be nonnegative");
    e[layout.v(j)] = static_cast<std::uint16_t>(c.v_deg[j]);
  }
  return e;
}

std::map<int, int> resolve_insertions(const RunConfig& c, int r) {
  std::map<int, int> out;
  if (c.insertions.empty()) {
    if (c.s < 1) throw UsageError("s", "insertion order must be positive");
    out[c.s] = r;
    return out;
  }
  std::stringstream ss(c.insertions);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("insertions", "expected s:m pairs, got '" + item + "'");
    try {
      const int s = std::stoi(item.substr(0, colon));
      const int m = std::stoi(item.substr(colon + 1));
      if (s < 1 || m < 0) throw UsageError("insertions", "need s >= 1 and m >= 0");
      out[s] += m;
    } catch (const std::invalid_argument&) {
      throw UsageError("insertions", "expected s:m pairs, got '" + item + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// compute

json result_json(const HurwitzResult& h) { return json::parse(to_json(h)); }

json compute_one(const RunConfig& c, const ProfileSet& profiles, int r) {
  const bool conn = c.connected;
  const std::string& kind = c.kind;
  if (kind == "classical") return result_json(completed_hurwitz(r, 1, profiles, conn));
  if (kind == "completed") {
    if (c.s < 1) throw UsageError("s", "completed cycles need s >= 1");
    return result_json(completed_hurwitz(r, c.s, profiles, conn));
  }
  if (kind == "hypergeometric" || kind == "hciz") {
    GSpec g = resolve_g(c);
    if (kind == "hciz") {
      if (profiles.count() != 2) throw UsageError("profiles", "hciz needs exactly two profiles mu;nu");
      g = GSpec{1, 0, 0};
    }
    const VarLayout layout = g.layout();
    std::optional<DegreeCaps> caps;
    if (monomial_selected(c)) {
      const Exponent e = resolve_monomial(c, layout);
      caps = DegreeCaps{std::vector<int>(e.begin(), e.end())};
    }
    auto h = hypergeometric_hurwitz(r, g, profiles, conn, caps ? &*caps : nullptr);
    json j = result_json(h);
    if (monomial_selected(c)) {
      const Exponent e = resolve_monomial(c, layout);
      j["monomial"] = MultiPoly::monomial_name(layout, e);
      j["coefficient"] = to_string(h.value.coefficient(e));
    }
    return j;
  }
  if (kind == "orbifold") {
    if (c.t < 1) throw UsageError("t", "orbifold order must be positive");
    if (profiles.count() > 1) throw UsageError("profiles", "orbifold takes at most one profile");
    const Partition mu = profiles.count() ? profiles.profiles[0] : Partition::column(profiles.degree);
    return result_json(orbifold_hurwitz(r, c.t, mu, conn));
  }
  if (kind == "gw") {
    if (profiles.count() > 2 || profiles.count() == 1)
      throw UsageError("profiles", "gw takes two relative conditions mu;nu (default 1^d;1^d)");
    const Partition mu = profiles.count() ? profiles.profiles[0] : Partition::column(profiles.degree);
    const Partition nu = profiles.count() ? profiles.profiles[1] : Partition::column(profiles.degree);
    json j = result_json(gw_correlator(mu, nu, resolve_insertions(c, r), conn));
    json ins = json::object();
    for (const auto& [s, m] : resolve_insertions(c, r)) ins[std::to_string(s)] = m;
    j["insertions"] = ins;
    return j;
  }
  if (kind == "b_content") {
    if (conn) throw UsageError("connected", "b-content numbers are available in the disconnected form only");
    const GSpec g = resolve_g(c);
    const Rational b = resolve_b(c);
    const VarLayout layout = g.layout();
    std::optional<DegreeCaps> caps;
    if (monomial_selected(c)) {
      const Exponent e = resolve_monomial(c, layout);
      caps = DegreeCaps{std::vector<int>(e.begin(), e.end())};
    }
    const MultiPoly value = b_hurwitz_coefficient(r, g, profiles, b, caps ? &*caps : nullptr);
    json j;
    j["kind"] = "b_content";
    j["b"] = to_string(b);
    j["d"] = profiles.degree;
    j["r"] = r;
    j["profiles"] = json::array();
    for (const auto& mu : profiles.profiles) j["profiles"].push_back(mu.to_string());
    j["connected"] = false;
    j["value"] = json::parse(to_json(value));
    if (monomial_selected(c)) {
      const Exponent e = resolve_monomial(c, layout);
      j["monomial"] = MultiPoly::monomial_name(layout, e);
      j["coefficient"] = to_string(value.coefficient(e));
    }
    return j;
  }
  throw UsageError("kind", "unknown kind '" + kind + "'");
}

void apply_normalization(const RunConfig& c, json& j) {
  if (c.normalization == "paper") return;
  // the paper's numbers already follow this convention; the factor is recorded, not guessed
  j["normalization"] = {{"convention", c.normalization}, {"factor", "1"}};
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::string s = v.dump();
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

int cmd_compute(const RunConfig& c) {
  const ProfileSet profiles = resolve_profiles(c);
  const auto orders = resolve_orders(c);
  json results = json::array();
  for (int r : orders) {
    json j = compute_one(c, profiles, r);
    apply_normalization(c, j);
    results.push_back(std::move(j));
  }
  if (c.format == "csv") {
    std::cout << "kind,d,r,g,connected,value\n";
    for (const auto& j : results) {
      std::cout << j["kind"].get<std::string>() << ',' << j["d"] << ',' << j["r"] << ','
                << (j.contains("g") && !j["g"].is_null() ? j["g"].dump() : std::string()) << ',' << j["connected"]
                << ',' << csv_cell(j.contains("coefficient") ? j["coefficient"] : j["value"]) << '\n';
    }
    return 0;
  }
  json out;
  out["config"] = c.to_json();
  if (results.size() == 1) {
    out["result"] = results[0];
  } else {
    out["results"] = results;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// ratio reports shared by verify and table

RatioReport build_ratio(const RunConfig& c) {
  const ProfileSet profiles = resolve_profiles(c);
  const int d = profiles.degree;
  const int r_max = c.r_max.value_or(40);
  const int r_min = c.r_min.value_or(1);
  if (r_min < 0 || r_min > r_max) throw UsageError("r-min", "empty or negative range");
  const int N = profiles.count();
  const int lsum = profiles.total_length();

  if (c.kind == "monotone" || c.kind == "hypergeometric") {
    GSpec g = resolve_g(c);
    if (g.K < 1) g.K = 1;
    const VarLayout layout = g.layout();
    const Exponent e = resolve_monomial(c, layout);
    const DegreeCaps caps{std::vector<int>(e.begin(), e.end())};
    const auto series = hypergeometric_series(r_max, g, profiles, &caps);
    std::vector<int> a(c.u_deg.begin(), c.u_deg.end());
    std::vector<int> b(c.v_deg.begin(), c.v_deg.end());
    a.resize(g.L, 0);
    b.resize(g.M, 0);
    return ratio_report([&](int r) { return series[r].coefficient(e); },
                        [&](int r) { return monotone_leading_term(r, d, N, lsum, g.K, a, b); }, r_min, r_max);
  }
  if (c.kind == "classical" || c.kind == "completed") {
    const int s = c.kind == "classical" ? 1 : c.s;
    auto exact = [&](int r) {
      auto h = completed_hurwitz(r, s, profiles, c.connected);
      return h.genus() ? h.scalar() : Rational(0);
    };
    return ratio_report(exact, [&](int r) { return completed_leading_term(r, d, s, N, lsum); }, r_min, r_max);
  }
  if (c.kind == "b_content") {
    GSpec g = resolve_g(c);
    if (g.K < 1) g.K = 1;
    const Rational b = resolve_b(c);
    const VarLayout layout = g.layout();
    const Exponent e = resolve_monomial(c, layout);
    const DegreeCaps caps{std::vector<int>(e.begin(), e.end())};
    const auto series = b_hurwitz_series(r_max, g, profiles, b, &caps);
    std::vector<int> a(c.u_deg.begin(), c.u_deg.end());
    std::vector<int> bs(c.v_deg.begin(), c.v_deg.end());
    a.resize(g.L, 0);
    bs.resize(g.M, 0);
    return ratio_report([&](int r) { return series[r].coefficient(e); },
                        [&](int r) { return b_leading_term(r, d, N, lsum, g.K, a, bs, GaussianRational(b)).re; },
                        r_min, r_max);
  }
  if (c.kind == "gw") {
    if (N != 2) throw UsageError("profiles", "gw ratios need mu;nu");
    if (c.s < 1) throw UsageError("s", "insertion order must be positive");
    const Partition& mu = profiles.profiles[0];
    const Partition& nu = profiles.profiles[1];
    auto exact = [&](int m) {
      auto h = gw_correlator(mu, nu, {{c.s, m}}, c.connected);
      return h.genus() ? h.scalar() : Rational(0);
    };
    return ratio_report(exact, [&](int m) { return gw_leading_term(mu, nu, {{c.s, m}}); }, r_min, r_max);
  }
  throw UsageError("kind", "ratio reports support monotone, classical, completed, b_content, gw");
}

// ---------------------------------------------------------------------------
// verify

struct Report {
  bool pass = true;
  json body = json::object();
};

Report verify_oracle(const RunConfig& c) {
  const int max_d = c.max_d.value_or(5);
  if (max_d < 1 || max_d > kOracleMaxDegree) throw UsageError("max-d", "oracle sweep degree must lie in 1..6");
  const int total = c.r_max.value_or(8);
  if (total < 0 || total > kOracleMaxTranspositions) throw UsageError("r-max", "at most 10 transpositions");
  Report rep;
  json matrix = json::array();
  const BlockConstraint types[] = {BlockConstraint::none, BlockConstraint::weak, BlockConstraint::strict};
  for (int d = 1; d <= max_d; ++d) {
    long queries = 0;
    long mismatches = 0;
    json first_mismatch = nullptr;
    std::vector<ProfileSet> sets{ProfileSet(d, {})};
    const auto parts = enumerate_partitions(d);
    for (const auto& mu : parts) sets.emplace_back(d, std::vector<Partition>{mu});
    for (const auto& mu : parts)
      for (const auto& nu : parts) sets.emplace_back(d, std::vector<Partition>{mu, nu});
    for (const auto& profiles : sets) {
      std::map<std::pair<int, int>, std::vector<MultiPoly>> cache;
      std::vector<std::vector<Block>> configs;
      for (auto t : types)
        for (int a = 0; a <= total; ++a) configs.push_back({{a, t}});
      for (auto t1 : types)
        for (auto t2 : types) {
          if ((t1 == BlockConstraint::none) != (t2 == BlockConstraint::none)) continue;
          for (int a = 0; a <= total; ++a)
            for (int b = 0; a + b <= total; ++b) configs.push_back({{a, t1}, {b, t2}});
        }
      for (const auto& blocks : configs) {
        int n = 0;
        int L = 0;
        int M = 0;
        for (const auto& b : blocks) {
          n += b.count;
          L += b.constraint == BlockConstraint::strict;
          M += b.constraint == BlockConstraint::weak;
        }
        Rational engine;
        if (blocks[0].constraint == BlockConstraint::none) {
          engine = completed_hurwitz(n, 1, profiles, false).scalar();
        } else {
          auto key = std::make_pair(L, M);
          if (!cache.count(key)) cache[key] = hypergeometric_series(total, GSpec{0, L, M}, profiles);
          const VarLayout layout{L, M};
          Exponent e(layout.arity(), 0);
          int iu = 0;
          int iv = 0;
          for (const auto& b : blocks) {
            if (b.constraint == BlockConstraint::strict) e[layout.u(iu++)] = static_cast<std::uint16_t>(b.count);
            if (b.constraint == BlockConstraint::weak) e[layout.v(iv++)] = static_cast<std::uint16_t>(b.count);
          }
          engine = cache[key][n].coefficient(e);
        }
        const Rational brute = count_factorizations({d, profiles.profiles, blocks, false});
        ++queries;
        if (engine != brute) {
          ++mismatches;
          if (first_mismatch.is_null())
            first_mismatch = {{"profiles", profiles.to_string()}, {"engine", to_string(engine)},
                              {"oracle", to_string(brute)}};
        }
      }
    }
    matrix.push_back({{"d", d}, {"queries", queries}, {"mismatches", mismatches}, {"first_mismatch", first_mismatch}});
    rep.pass = rep.pass && mismatches == 0;
  }
  rep.body["max_transpositions"] = total;
  rep.body["matrix"] = matrix;
  return rep;
}

Report verify_stirling(const RunConfig& c) {
  const int max_d = c.d.value_or(5);
  if (max_d < 1 || max_d > 5) throw UsageError("d", "Jucys checks run for d in 1..5");
  Report rep;
  json rows = json::array();
  bool classical_all = true;
  for (int d = 1; d <= max_d; ++d) {
    const auto& group = symmetric_group(d);
    for (int k = 0; k <= 6; ++k) {
      const auto e = jm_symmetric_evaluate(SymmetricKind::elementary, k, d);
      const auto h = jm_symmetric_evaluate(SymmetricKind::complete, k, d);
      const bool e_display = e == jucys_stirling_display(SymmetricKind::elementary, k, d);
      const bool h_display = h == jucys_stirling_display(SymmetricKind::complete, k, d);
      GroupAlgebraElement expect(d);
      for (std::size_t i = 0; i < group.order(); ++i)
        if (d - group.cycle_type(i).length() == k) expect.coeffs[i] = 1;
      const bool e_classical = e == expect;
      Rational h_mass = 0;
      for (const auto& x : h.coeffs) h_mass += x;
      const bool h_classical = h.is_central_function() && h_mass == Rational(stirling(StirlingKind::second, d - 1 + k, d - 1));
      rows.push_back({{"d", d}, {"k", k}, {"e_matches_display", e_display}, {"h_matches_display", h_display},
                      {"e_is_sum_with_d_minus_k_cycles", e_classical}, {"h_mass_matches", h_classical}});
      rep.pass = rep.pass && e_display && h_display;
      classical_all = classical_all && e_classical && h_classical;
    }
  }
  rep.body["rows"] = rows;
  rep.body["classical_identities_hold"] = classical_all;
  return rep;
}

Report verify_jack(const RunConfig& c) {
  const int max_d = c.d.value_or(6);
  if (max_d < 1 || max_d > kDefaultJackCeiling) throw UsageError("d", "Jack checks run for d in 1..8");
  std::vector<Rational> alphas{1, 2, Rational(1, 2), 3};
  if (c.b != "0") alphas = {resolve_b(c) + 1};
  Report rep;
  json rows = json::array();
  for (const auto& alpha : alphas)
    for (int d = 1; d <= max_d; ++d) {
      long checks = 0;
      long failures = 0;
      for (const auto& lambda : enumerate_partitions(d)) {
        const auto J = jack_in_psums(lambda, alpha);
        ++checks;
        failures += deformed_hall(J, J) != jack_norm(lambda, alpha);
      }
      for (const auto& mu : enumerate_partitions(d)) {
        const long e = d - mu.length();
        checks += 2;
        failures += jack_character(Partition::row(d), mu, alpha) != pow(alpha, e);
        failures += jack_character(Partition::column(d), mu, alpha) != Rational(e % 2 == 0 ? 1 : -1);
      }
      rows.push_back({{"alpha", to_string(alpha)}, {"d", d}, {"checks", checks}, {"failures", failures}});
      rep.pass = rep.pass && failures == 0;
    }
  rep.body["rows"] = rows;
  return rep;
}

Report verify_gap(const RunConfig& c) {
  const ProfileSet profiles = resolve_profiles(c);
  const int d = profiles.degree;
  if (d < 2) throw UsageError("d", "the gap needs d >= 2");
  if (c.s < 1) throw UsageError("s", "must be >= 1");
  const Rational hi = f_bar(Partition::row(d), c.s + 1);
  const Rational lo = f_bar(Partition({d - 1, 1}), c.s + 1);
  const auto table = structure_coefficients(c.s, profiles);
  Report rep;
  json inside = json::array();
  for (const auto& [m, coeff] : table)
    if (m > lo && m < hi) {
      inside.push_back({{"m", to_string(m)}, {"C", to_string(coeff)}});
      rep.pass = rep.pass && sgn(coeff) == 0;
    }
  rep.body["interval"] = {to_string(lo), to_string(hi)};
  if (c.s == 1) {
    // the often quoted form (binom(d-1,2), binom(d,2)) sits inside the interval above
    rep.body["binomial_interval"] = {to_string(binomial(d - 1, 2)), to_string(binomial(d, 2))};
  }
  rep.body["keys_inside"] = inside;
  rep.body["leading"] = {{"m", to_string(table.front().first)}, {"C", to_string(table.front().second)}};
  return rep;
}

Report verify_ratio(const RunConfig& c) {
  const RatioReport report = build_ratio(c);
  const Rational tol = resolve_tol(c);
  Report rep;
  rep.pass = report.final_error() <= tol;
  rep.body["final_error"] = to_decimal(report.final_error(), report.precision_bits, 12);
  rep.body["tolerance"] = to_string(tol);
  rep.body["report"] = json::parse(report.to_json());
  return rep;
}

Report verify_characters(const RunConfig& c) {
  const int max_d = c.d.value_or(6);
  if (max_d < 1 || max_d > char_table_ceiling()) throw UsageError("d", "outside the character table ceiling");
  Report rep;
  json rows = json::array();
  for (int d = 1; d <= max_d; ++d) {
    auto table = char_table(d);
    bool brute_ok = true;
    if (d <= kOracleMaxDegree) {
      const auto brute = brute_force_character_table(d);
      for (std::size_t i = 0; i < table->size(); ++i)
        for (std::size_t j = 0; j < table->size(); ++j) brute_ok = brute_ok && brute[i][j] == (*table)(i, j);
    }
    // row orthogonality: sum_mu |C_mu| chi_l(mu) chi_m(mu) = d! delta
    bool orth_ok = true;
    const auto& parts = table->partitions();
    std::vector<Integer> sizes;
    for (const auto& mu : parts) sizes.push_back(class_data(mu).class_size);
    for (std::size_t a = 0; a < parts.size() && orth_ok; ++a)
      for (std::size_t b = a; b < parts.size() && orth_ok; ++b) {
        Integer sum = 0;
        for (std::size_t m = 0; m < parts.size(); ++m)
          sum += sizes[m] * Integer(static_cast<long>((*table)(a, m))) * Integer(static_cast<long>((*table)(b, m)));
        orth_ok = sum == (a == b ? factorial(d) : Integer(0));
      }
    rows.push_back({{"d", d}, {"matches_brute_force", d <= kOracleMaxDegree ? json(brute_ok) : json(nullptr)},
                    {"orthogonal", orth_ok}});
    rep.pass = rep.pass && brute_ok && orth_ok;
  }
  rep.body["rows"] = rows;
  return rep;
}

int cmd_verify(const RunConfig& c) {
  Report rep;
  if (c.suite == "oracle") {
    rep = verify_oracle(c);
  } else if (c.suite == "stirling") {
    rep = verify_stirling(c);
  } else if (c.suite == "jack") {
    rep = verify_jack(c);
  } else if (c.suite == "gap") {
    rep = verify_gap(c);
  } else if (c.suite == "ratio") {
    rep = verify_ratio(c);
  } else if (c.suite == "characters") {
    rep = verify_characters(c);
  } else {
    throw UsageError("suite", "unknown suite '" + c.suite + "'");
  }
  json out;
  out["config"] = c.to_json();
  out["pass"] = rep.pass;
  out["report"] = rep.body;
  std::cout << out.dump(2) << '\n';
  return rep.pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const RunConfig& c) {
  const bool csv = c.format == "csv";
  if (c.what == "structure") {
    const auto table = structure_coefficients(c.s, resolve_profiles(c));
    if (csv) {
      std::cout << structure_csv(table);
      return 0;
    }
    json rows = json::array();
    for (const auto& [m, coeff] : table) rows.push_back({{"m", to_string(m)}, {"C", to_string(coeff)}});
    std::cout << json{{"config", c.to_json()}, {"rows", rows}}.dump(2) << '\n';
    return 0;
  }
  if (c.what == "ratio") {
    const RatioReport report = build_ratio(c);
    if (csv) {
      std::cout << report.to_csv();
      return 0;
    }
    std::cout << json{{"config", c.to_json()}, {"report", json::parse(report.to_json())}}.dump(2) << '\n';
    return 0;
  }
  if (c.what == "chartable") {
    if (!c.d) throw UsageError("d", "required");
    auto table = char_table(*c.d);
    if (csv) {
      std::cout << char_table_csv(*table);
      return 0;
    }
    json rows = json::array();
    for (std::size_t i = 0; i < table->size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < table->size(); ++j) row.push_back((*table)(i, j));
      rows.push_back({{"lambda", table->partitions()[i].to_string()}, {"values", row}});
    }
    json cols = json::array();
    for (const auto& mu : table->partitions()) cols.push_back(mu.to_string());
    std::cout << json{{"config", c.to_json()}, {"classes", cols}, {"rows", rows}}.dump(2) << '\n';
    return 0;
  }
  if (c.what == "values") {
    RunConfig compute = c;
    compute.format = csv ? "csv" : "json";
    return cmd_compute(compute);
  }
  throw UsageError("what", "one of structure, ratio, chartable, values");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hurwitz numbers, their large-genus asymptotics and brute-force checks"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&c](CLI::App* sub) {
    sub->add_option("--kind", c.kind,
                    "classical, completed, hypergeometric, hciz, orbifold, gw, b_content (ratio: monotone too)");
    sub->add_option("--d", c.d, "degree");
    sub->add_option("--r", c.r, "number of branch points / z-order / insertion count");
    sub->add_option("--r-min", c.r_min, "first r of a range");
    sub->add_option("--r-max", c.r_max, "last r of a range (oracle sweep: total transpositions)");
    sub->add_option("--s", c.s, "completed-cycle order (s = 1 is a simple transposition)");
    sub->add_option("--K", c.K, "power of 1/(1 - z)");
    sub->add_option("--L", c.L, "number of strict (1 + u z) factors");
    sub->add_option("--M", c.M, "number of weak 1/(1 - v z) factors");
    sub->add_option("--profiles", c.profiles, "ramification profiles, e.g. \"2,1;3\"");
    sub->add_option("--b", c.b, "deformation parameter b (alpha = b + 1), rational");
    sub->add_option("--t", c.t, "orbifold order");
    sub->add_option("--u-deg", c.u_deg, "degrees of u_1..u_L in the selected monomial")->delimiter(',');
    sub->add_option("--v-deg", c.v_deg, "degrees of v_1..v_M in the selected monomial")->delimiter(',');
    sub->add_option("--insertions", c.insertions, "gw insertions as s:m pairs, e.g. \"2:3,3:1\"");
    sub->add_flag("--connected", c.connected, "connected numbers");
    sub->add_option("--normalization", c.normalization, "paper or dhr")
        ->check(CLI::IsMember({"paper", "dhr"}));
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", c.tol, "ratio tolerance, rational or decimal");
    sub->add_option("--threads", c.threads, "worker threads, 0 for all cores");
    sub->add_option("--max-d", c.max_d, "character table ceiling (oracle sweep: top degree)");
  };

  auto* compute = app.add_subcommand("compute", "exact numbers");
  common(compute);
  auto* verify = app.add_subcommand("verify", "verification sweeps; exit 1 on failure");
  verify->add_option("suite", c.suite, "oracle, stirling, jack, gap, ratio, characters")->required();
  common(verify);
  auto* table = app.add_subcommand("table", "CSV or JSON tables");
  table->add_option("--what", c.what, "structure, ratio, chartable, values");
  common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    set_thread_count(c.threads);
    if (c.max_d && !(c.command == "verify" && c.suite == "oracle")) set_char_table_ceiling(*c.max_d);
    if (c.command == "compute") return cmd_compute(c);
    if (c.command == "verify") return cmd_verify(c);
    return cmd_table(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    std::cerr << "ceiling: " << e.what() << '\n';
    return kExitCeiling;
  } catch (const SingularParameterError& e) {
    std::cerr << "singular parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}
