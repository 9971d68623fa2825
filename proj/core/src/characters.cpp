#include "hurwitz/characters.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

constexpr const char* kCacheMagic = "hurwitz-chartable";
constexpr int kCacheVersion = 1;

// A shape is held as a beta-set: bead i sits at lambda_i + (l - 1 - i).
// Beads packed at the bottom carry no information and are shifted away so
// that equal shapes give equal keys.
using BeadMask = std::uint64_t;

BeadMask normalize(BeadMask m) {
  while (m & 1u) m >>= 1;
  return m;
}

BeadMask beads_of(const Partition& lambda) {
  BeadMask m = 0;
  const int l = lambda.length();
  for (int i = 0; i < l; ++i) m |= BeadMask{1} << (lambda[i] + (l - 1 - i));
  return normalize(m);
}

class RimHookMemo {
 public:
  explicit RimHookMemo(std::vector<int> cycles) : cycles_(std::move(cycles)) {}

  // Character of the shape `beads` on the cycles cycles_[pos..].
  std::int64_t eval(BeadMask beads, std::size_t pos) {
    if (pos == cycles_.size()) return beads == 0 ? 1 : 0;
    auto key = std::make_pair(beads, pos);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int k = cycles_[pos];
    std::int64_t acc = 0;
    for (int b = k; b < 64; ++b) {
      if (!((beads >> b) & 1u)) continue;
      if ((beads >> (b - k)) & 1u) continue;
      BeadMask between = (beads >> (b - k + 1)) & ((BeadMask{1} << (k - 1)) - 1);
      int crossings = __builtin_popcountll(between);
      BeadMask moved = (beads & ~(BeadMask{1} << b)) | (BeadMask{1} << (b - k));
      std::int64_t sub = eval(normalize(moved), pos + 1);
      acc += (crossings % 2) ? -sub : sub;
    }
    memo_.emplace(key, acc);
    return acc;
  }

 private:
  std::vector<int> cycles_;
  std::map<std::pair<BeadMask, std::size_t>, std::int64_t> memo_;
};

std::vector<std::int64_t> build_values(int d) {
  auto parts = enumerate_partitions(d);
  const std::size_t n = parts.size();
  std::vector<std::int64_t> values(n * n);
  std::vector<BeadMask> beads(n);
  for (std::size_t i = 0; i < n; ++i) beads[i] = beads_of(parts[i]);
  for (std::size_t j = 0; j < n; ++j) {
    // one memo per class; shapes repeat heavily across rows
    RimHookMemo memo(parts[j].parts());
    for (std::size_t i = 0; i < n; ++i) values[i * n + j] = memo.eval(beads[i], 0);
  }
  return values;
}

std::filesystem::path cache_path(int d) {
  const char* dir = std::getenv("HURWITZ_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) / ("chartable_" + std::to_string(d) + ".txt");
}

bool load_cached(int d, std::vector<std::int64_t>& values) {
  auto path = cache_path(d);
  if (path.empty()) return false;
  std::ifstream in(path);
  if (!in) return false;
  std::string magic;
  int version = 0, degree = -1;
  std::size_t n = 0;
  in >> magic >> version >> degree >> n;
  const auto parts = enumerate_partitions(d);
  if (!in || magic != kCacheMagic || version != kCacheVersion || degree != d || n != parts.size()) return false;
  in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
  while (in.peek() == '#') in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
  values.assign(n * n, 0);
  for (auto& v : values)
    if (!(in >> v)) return false;
  return true;
}

void store_cached(int d, const std::vector<std::int64_t>& values) {
  auto path = cache_path(d);
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto parts = enumerate_partitions(d);
  // write to a temp name then rename, so concurrent readers never see a torn file
  auto tmp = path;
  tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&values));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << kCacheMagic << ' ' << kCacheVersion << ' ' << d << ' ' << parts.size() << '\n';
    out << "# rows and columns follow reverse-lexicographic partition order\n";
    const std::size_t n = parts.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << values[i * n + j];
      out << '\n';
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

struct TableSlot {
  std::once_flag once;
  std::shared_ptr<const CharTable> table;
};

}  // namespace

CharTable::CharTable(int degree, std::vector<std::int64_t> values)
    : degree_(degree), partitions_(enumerate_partitions(degree)), values_(std::move(values)) {
  if (values_.size() != partitions_.size() * partitions_.size())
    throw DomainError("character table has the wrong number of entries");
  for (std::size_t i = 0; i < partitions_.size(); ++i) index_.emplace(partitions_[i].to_string(), i);
}

std::size_t CharTable::index(const Partition& p) const {
  auto it = index_.find(p.to_string());
  if (it == index_.end() || p.size() != degree_)
    throw DomainError("partition " + p.to_string() + " is not of size " + std::to_string(degree_));
  return it->second;
}

namespace {
std::atomic<int> g_ceiling{kDefaultCharTableCeiling};
}

void set_char_table_ceiling(int ceiling) {
  if (ceiling < 1 || ceiling > kMaxCharTableCeiling)
    throw DomainError("character table ceiling must lie in 1.." + std::to_string(kMaxCharTableCeiling));
  g_ceiling = ceiling;
}

int char_table_ceiling() { return g_ceiling; }

std::shared_ptr<const CharTable> char_table(int d, int ceiling) {
  if (ceiling == 0) ceiling = g_ceiling;
  if (d < 0) throw DomainError("negative degree");
  if (d > ceiling) throw SizeLimitError("character table", d, ceiling);
  static std::mutex slots_mutex;
  static std::map<int, std::unique_ptr<TableSlot>> slots;
  TableSlot* slot;
  {
    std::lock_guard lock(slots_mutex);
    auto& p = slots[d];
    if (!p) p = std::make_unique<TableSlot>();
    slot = p.get();
  }
  std::call_once(slot->once, [&] {
    std::vector<std::int64_t> values;
    if (!load_cached(d, values)) {
      values = build_values(d);
      store_cached(d, values);
    }
    slot->table = std::make_shared<const CharTable>(d, std::move(values));
  });
  return slot->table;
}

std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw DomainError("character of a partition of " + std::to_string(lambda.size()) + " on a class of " +
                      std::to_string(mu.size()));
  if (lambda.length() + (lambda.empty() ? 0 : lambda[0]) > 63)
    throw SizeLimitError("Murnaghan-Nakayama bead width", lambda.length() + lambda[0], 63);
  RimHookMemo memo(mu.parts());
  return memo.eval(beads_of(lambda), 0);
}

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw DomainError("character of a partition of " + std::to_string(lambda.size()) + " on a class of " +
                      std::to_string(mu.size()));
  if (lambda.size() <= g_ceiling) return char_table(lambda.size())->at(lambda, mu);
  return murnaghan_nakayama(lambda, mu);
}

Integer dim(const Partition& lambda) {
  Integer prod = 1;
  for (int h : hook_lengths(lambda)) prod *= h;
  return factorial(lambda.size()) / prod;
}

}  // namespace hurwitz
