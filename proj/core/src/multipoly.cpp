#include "hurwitz/multipoly.hpp"

#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

bool DegreeCaps::admits(const Exponent& e) const {
  for (std::size_t i = 0; i < e.size() && i < max_exp.size(); ++i)
    if (max_exp[i] >= 0 && e[i] > max_exp[i]) return false;
  return true;
}

MultiPoly::MultiPoly(VarLayout layout, const Rational& c) : layout_(layout) {
  if (sgn(c) != 0) terms_.emplace(Exponent(layout.arity(), 0), c);
}

MultiPoly MultiPoly::variable(VarLayout layout, int index, const Rational& coeff) {
  if (index < 0 || index >= layout.arity()) throw DomainError("variable index out of range");
  Exponent e(layout.arity(), 0);
  e[index] = 1;
  return monomial(layout, std::move(e), coeff);
}

MultiPoly MultiPoly::monomial(VarLayout layout, Exponent e, const Rational& coeff) {
  if (static_cast<int>(e.size()) != layout.arity()) throw DomainError("exponent arity mismatch");
  MultiPoly p(layout);
  if (sgn(coeff) != 0) p.terms_.emplace(std::move(e), coeff);
  return p;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto x : terms_.begin()->first)
    if (x) return false;
  return true;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MultiPoly::check_layout(const MultiPoly& o) const {
  if (!(layout_ == o.layout_)) throw DomainError("polynomials over different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_layout(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_layout(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MultiPoly MultiPoly::mul(const MultiPoly& a, const MultiPoly& b, const DegreeCaps* caps) {
  a.check_layout(b);
  MultiPoly out(a.layout_);
  const auto n = static_cast<std::size_t>(a.layout_.arity());
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      if (caps && !caps->admits(e)) continue;
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != layout_.arity()) throw DomainError("evaluation point arity mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= pow(point[i], e[i]);
    acc += t;
  }
  return acc;
}

std::string MultiPoly::monomial_name(const VarLayout& layout, const Exponent& e) {
  std::string out;
  for (int i = 0; i < layout.arity(); ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += ' ';
    out += i < layout.num_u ? "u" + std::to_string(i + 1) : "v" + std::to_string(i - layout.num_u + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest monomials first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_name(layout_, e);
    if (mono == "1") {
      os << hurwitz::to_string(mag);
    } else {
      if (mag != 1) os << hurwitz::to_string(mag) << '*';
      os << mono;
    }
  }
  return os.str();
}

TruncSeries::TruncSeries(VarLayout layout, int order, const DegreeCaps* caps)
    : layout_(layout), order_(order), caps_(caps ? *caps : DegreeCaps::none(layout)) {
  if (order < 0) throw DomainError("negative truncation order");
  coeffs_.assign(order + 1, MultiPoly(layout));
}

TruncSeries TruncSeries::one(VarLayout layout, int order, const DegreeCaps* caps) {
  TruncSeries s(layout, order, caps);
  s.coeffs_[0] = MultiPoly(layout, Rational(1));
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order_ != order_) throw DomainError("series truncation orders differ");
  for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& o) {
  if (o.order_ != order_) throw DomainError("series truncation orders differ");
  std::vector<MultiPoly> out(order_ + 1, MultiPoly(layout_));
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order_; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      out[i + j] += MultiPoly::mul(coeffs_[i], o.coeffs_[j], &caps_);
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

void TruncSeries::mul_linear(const Rational& c, const MultiPoly& w) {
  if (sgn(c) == 0) return;
  MultiPoly cw = w * c;
  for (int k = order_; k >= 1; --k) {
    if (coeffs_[k - 1].is_zero()) continue;
    coeffs_[k] += MultiPoly::mul(coeffs_[k - 1], cw, &caps_);
  }
}

void TruncSeries::div_linear(const Rational& c, const MultiPoly& w) {
  if (sgn(c) == 0) return;
  MultiPoly cw = w * c;
  for (int k = 1; k <= order_; ++k) {
    if (coeffs_[k - 1].is_zero()) continue;
    coeffs_[k] += MultiPoly::mul(coeffs_[k - 1], cw, &caps_);
  }
}

TruncSeries geometric_factor(const Rational& c, const MultiPoly& weight, int r) {
  auto s = TruncSeries::one(weight.layout(), r);
  s.div_linear(c, weight);
  return s;
}

TruncSeries linear_factor(const Rational& c, const MultiPoly& weight, int r) {
  auto s = TruncSeries::one(weight.layout(), r);
  s.mul_linear(c, weight);
  return s;
}

MultiPoly coeff_z(const TruncSeries& s, int r) {
  if (r < 0 || r > s.order()) throw DomainError("z-order " + std::to_string(r) + " beyond truncation order " +
                                                std::to_string(s.order()));
  return s[r];
}

}  // namespace hurwitz
