#include "hurwitz/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace hurwitz {

namespace {

using nlohmann::json;

json partition_json(const Partition& p) { return json(p.parts()); }

json value_json(const MultiPoly& value) {
  if (value.layout().arity() == 0) return to_string(value.constant_term());
  json terms = json::array();
  for (auto it = value.terms().rbegin(); it != value.terms().rend(); ++it)
    terms.push_back({{"monomial", MultiPoly::monomial_name(value.layout(), it->first)}, {"coeff", to_string(it->second)}});
  return terms;
}

std::string csv_label(const Partition& p) { return "\"" + p.to_string() + "\""; }

}  // namespace

std::string to_json(const Partition& p) { return partition_json(p).dump(); }

std::string to_json(const MultiPoly& value) { return value_json(value).dump(); }

std::string to_json(const HurwitzResult& result) {
  json j;
  j["kind"] = kind_name(result.kind);
  if (result.s) j["s"] = result.s;
  if (result.t) j["t"] = result.t;
  j["d"] = result.d;
  j["r"] = result.r;
  if (auto g = result.genus()) {
    j["g"] = *g;
  } else {
    j["g"] = nullptr;
  }
  if (result.genus_raw) j["g_exact"] = to_string(*result.genus_raw);
  json profiles = json::array();
  for (const auto& mu : result.profiles) profiles.push_back(partition_json(mu));
  j["profiles"] = profiles;
  j["connected"] = result.connected;
  j["value"] = value_json(result.value);
  return j.dump();
}

std::string to_json(const PSumExpansion& expansion) {
  json j = json::object();
  for (auto it = expansion.coeffs.rbegin(); it != expansion.coeffs.rend(); ++it)
    j[it->first.to_string()] = to_string(it->second);
  return j.dump();
}

std::string char_table_csv(const CharTable& table) {
  std::ostringstream os;
  os << "lambda\\mu";
  for (const auto& mu : table.partitions()) os << ',' << csv_label(mu);
  os << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    os << csv_label(table.partitions()[i]);
    for (std::size_t j = 0; j < table.size(); ++j) os << ',' << table(i, j);
    os << '\n';
  }
  return os.str();
}

std::string structure_csv(const std::vector<std::pair<Rational, Rational>>& coefficients) {
  std::ostringstream os;
  os << "m,C\n";
  for (const auto& [m, c] : coefficients) os << to_string(m) << ',' << to_string(c) << '\n';
  return os.str();
}

}  // namespace hurwitz
