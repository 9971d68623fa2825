#include "hurwitz/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition(std::vector<int>{n}); }
Partition Partition::column(int n) { return Partition(std::vector<int>(n, 1)); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    int v = 0;
    for (char ch : token) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw DomainError("malformed partition '" + std::string(text) + "'");
      v = v * 10 + (ch - '0');
    }
    if (v == 0) throw DomainError("partition parts must be positive");
    parts.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int d, int ceiling) {
  if (d < 0) throw DomainError("partition size must be nonnegative");
  if (d > ceiling) throw SizeLimitError("partition enumeration", d, ceiling);
  std::vector<Partition> out;
  std::vector<int> cur;
  // largest first part first gives reverse lexicographic order
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

Partition transpose(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> cols(lambda[0], 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++cols[j];
  return Partition(std::move(cols));
}

std::vector<int> contents(const Partition& lambda) {
  std::vector<int> out;
  out.reserve(lambda.size());
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) out.push_back(j - i);
  return out;
}

std::vector<int> hook_lengths(const Partition& lambda) {
  Partition t = transpose(lambda);
  std::vector<int> out;
  out.reserve(lambda.size());
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) out.push_back((lambda[i] - j - 1) + (t[j] - i - 1) + 1);
  return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  long a = 0, b = 0;
  const int n = std::max(lambda.length(), mu.length());
  for (int i = 0; i < n; ++i) {
    a += i < lambda.length() ? lambda[i] : 0;
    b += i < mu.length() ? mu[i] : 0;
    if (a < b) return false;
  }
  return true;
}

ClassData class_data(const Partition& mu) {
  ClassData out;
  for (int part : mu.parts()) ++out.multiplicities[part];
  out.stabilizer = 1;
  for (const auto& [i, m] : out.multiplicities) out.stabilizer *= pow(Integer(i), m) * factorial(m);
  out.class_size = factorial(mu.size()) / out.stabilizer;
  return out;
}

FrobeniusShifted frobenius_shifted(const Partition& lambda) {
  FrobeniusShifted out;
  Partition t = transpose(lambda);
  for (int i = 0; i < lambda.length() && lambda[i] > i; ++i) {
    ++out.rank;
    // a'_i = lambda_i - i + 1/2 with 1-based i
    out.a_prime.push_back({2L * (lambda[i] - i - 1) + 1});
    out.b_prime.push_back({2L * (t[i] - i - 1) + 1});
  }
  return out;
}

}  // namespace hurwitz

namespace hurwitz {

ProfileSet::ProfileSet(int d, std::vector<Partition> mus) : degree(d), profiles(std::move(mus)) {
  if (d < 0) throw DomainError("negative degree");
  for (const auto& mu : profiles)
    if (mu.size() != d)
      throw DomainError("profile " + mu.to_string() + " is not a partition of " + std::to_string(d));
}

int ProfileSet::total_length() const {
  int acc = 0;
  for (const auto& mu : profiles) acc += mu.length();
  return acc;
}

std::string ProfileSet::to_string() const {
  std::string out = "d=" + std::to_string(degree) + " [";
  for (std::size_t i = 0; i < profiles.size(); ++i) out += (i ? ";" : "") + profiles[i].to_string();
  return out + "]";
}

}  // namespace hurwitz
