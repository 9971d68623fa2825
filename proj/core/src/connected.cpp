#include "hurwitz/connected.hpp"

#include <map>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// A profile seen as a multiset: (part, multiplicity) pairs, largest part first.
using Multiset = std::vector<std::pair<int, int>>;

Multiset to_multiset(const Partition& p) {
  Multiset out;
  for (int part : p.parts()) {
    if (!out.empty() && out.back().first == part) {
      ++out.back().second;
    } else {
      out.emplace_back(part, 1);
    }
  }
  return out;
}

Partition from_multiset(const Multiset& m) {
  std::vector<int> parts;
  for (const auto& [part, mult] : m) parts.insert(parts.end(), mult, part);
  return Partition(std::move(parts));
}

// All sub-multisets of `m` of total size `size`, each paired with its complement.
void sub_multisets(const Multiset& m, int size, std::vector<std::pair<Partition, Partition>>& out) {
  Multiset take(m.size()), rest(m.size());
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == m.size()) {
      if (remaining == 0) {
        Multiset a, b;
        for (std::size_t k = 0; k < m.size(); ++k) {
          if (take[k].second) a.push_back(take[k]);
          if (rest[k].second) b.push_back(rest[k]);
        }
        out.emplace_back(from_multiset(a), from_multiset(b));
      }
      return;
    }
    const auto [part, mult] = m[i];
    for (int c = std::min(mult, remaining / part); c >= 0; --c) {
      take[i] = {part, c};
      rest[i] = {part, mult - c};
      self(self, i + 1, remaining - c * part);
    }
  };
  rec(rec, 0, size);
}

std::string key_of(const ProfileSet& p, const Orders& orders) {
  std::string k = p.to_string() + "|";
  for (int o : orders) k += std::to_string(o) + ",";
  return k;
}

class LogExpansion {
 public:
  LogExpansion(const DisconnectedEvaluator& evaluate, const std::vector<Interleaving>& slots, VarLayout layout,
               const DegreeCaps* caps)
      : evaluate_(evaluate), slots_(slots), layout_(layout), caps_(caps) {}

  MultiPoly connected(const ProfileSet& target, const Orders& orders) {
    MultiPoly acc(layout_);
    for (int k = 1; k <= target.degree; ++k) {
      MultiPoly term = tuples(target, orders, k);
      term *= make_rational(k % 2 ? 1 : -1, k);
      acc += term;
    }
    return acc;
  }

 private:
  // Disconnected number multiplied by the class sizes of its profiles.
  const MultiPoly& scaled(const ProfileSet& p, const Orders& orders) {
    std::string key = key_of(p, orders);
    if (auto it = scaled_memo_.find(key); it != scaled_memo_.end()) return it->second;
    MultiPoly v = evaluate_(p, orders);
    if (v.layout() != layout_) throw DomainError("evaluator returned a polynomial over the wrong variables");
    Integer sizes = 1;
    for (const auto& mu : p.profiles) sizes *= class_data(mu).class_size;
    v *= Rational(sizes);
    return scaled_memo_.emplace(key, std::move(v)).first->second;
  }

  // Sum over ordered k-tuples of non-empty sub-instances exhausting (target, orders)
  // of the product of their scaled disconnected numbers.
  MultiPoly tuples(const ProfileSet& target, const Orders& orders, int k) {
    if (k == 0) {
      MultiPoly one(layout_);
      if (target.degree == 0) {
        bool all_zero = true;
        for (int o : orders) all_zero = all_zero && o == 0;
        if (all_zero) one = MultiPoly(layout_, Rational(1));
      }
      return one;
    }
    if (target.degree < k) return MultiPoly(layout_);
    std::string key = key_of(target, orders) + "#" + std::to_string(k);
    if (auto it = tuple_memo_.find(key); it != tuple_memo_.end()) return it->second;

    MultiPoly acc(layout_);
    // the first component takes degree da; the rest must still hold k-1 components
    for (int da = 1; da <= target.degree - (k - 1); ++da) {
      std::vector<std::vector<std::pair<Partition, Partition>>> choices(target.profiles.size());
      bool feasible = true;
      for (std::size_t j = 0; j < target.profiles.size(); ++j) {
        sub_multisets(to_multiset(target.profiles[j]), da, choices[j]);
        feasible = feasible && !choices[j].empty();
      }
      if (!feasible) continue;
      std::vector<std::size_t> pick(target.profiles.size(), 0);
      while (true) {
        std::vector<Partition> first, rest;
        for (std::size_t j = 0; j < pick.size(); ++j) {
          first.push_back(choices[j][pick[j]].first);
          rest.push_back(choices[j][pick[j]].second);
        }
        ProfileSet first_set(da, std::move(first));
        ProfileSet rest_set(target.degree - da, std::move(rest));
        split_orders(first_set, rest_set, orders, k, acc);

        std::size_t j = 0;
        while (j < pick.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
        if (j == pick.size()) break;
      }
    }
    tuple_memo_.emplace(key, acc);
    return acc;
  }

  void split_orders(const ProfileSet& first, const ProfileSet& rest, const Orders& orders, int k, MultiPoly& acc) {
    Orders head(orders.size(), 0), tail(orders);
    auto rec = [&](auto&& self, std::size_t slot, Rational weight) -> void {
      if (slot == orders.size()) {
        const MultiPoly& a = scaled(first, head);
        if (a.is_zero()) return;
        MultiPoly b = tuples(rest, tail, k - 1);
        if (b.is_zero()) return;
        MultiPoly prod = MultiPoly::mul(a, b, caps_);
        prod *= weight;
        acc += prod;
        return;
      }
      for (int o = 0; o <= orders[slot]; ++o) {
        head[slot] = o;
        tail[slot] = orders[slot] - o;
        Rational w = weight;
        if (slots_[slot] == Interleaving::exponential) w *= Rational(binomial(orders[slot], o));
        self(self, slot + 1, w);
      }
    };
    rec(rec, 0, Rational(1));
  }

  const DisconnectedEvaluator& evaluate_;
  const std::vector<Interleaving>& slots_;
  VarLayout layout_;
  const DegreeCaps* caps_;
  std::map<std::string, MultiPoly> scaled_memo_;
  std::map<std::string, MultiPoly> tuple_memo_;
};

}  // namespace

MultiPoly connected_transform(const DisconnectedEvaluator& evaluate, const ProfileSet& target, const Orders& orders,
                              const std::vector<Interleaving>& slots, VarLayout layout, const DegreeCaps* caps) {
  if (slots.size() != orders.size()) throw DomainError("one interleaving rule per order is required");
  for (int o : orders)
    if (o < 0) throw DomainError("negative branch point count");
  if (target.degree < 1) throw DomainError("connected numbers need degree at least 1");
  LogExpansion expansion(evaluate, slots, layout, caps);
  MultiPoly scaled = expansion.connected(target, orders);
  Integer sizes = 1;
  for (const auto& mu : target.profiles) sizes *= class_data(mu).class_size;
  scaled *= make_rational(1, sizes);
  return scaled;
}

}  // namespace hurwitz
