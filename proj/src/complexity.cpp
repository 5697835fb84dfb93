#include "exactq/complexity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace exactq::complexity {

namespace {

// Packed truth table, at most 2^8 = 256 bits.
struct PackedTable {
  std::array<std::uint64_t, 4> words{};
  int arity = 0;

  bool operator==(const PackedTable&) const = default;

  bool get(int idx) const { return (words[idx >> 6] >> (idx & 63)) & 1; }
  void set(int idx, bool v) {
    if (v) words[idx >> 6] |= (std::uint64_t{1} << (idx & 63));
  }
};

struct PackedHash {
  std::size_t operator()(const PackedTable& t) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull * (t.arity + 1);
    for (auto w : t.words) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

PackedTable pack(const BooleanFunction& f) {
  PackedTable t;
  t.arity = f.arity();
  for (int idx = 0; idx < f.table_size(); ++idx) t.set(idx, f.value_at(idx));
  return t;
}

bool packed_constant(const PackedTable& t) {
  const int size = 1 << t.arity;
  bool first = t.get(0);
  for (int idx = 1; idx < size; ++idx)
    if (t.get(idx) != first) return false;
  return true;
}

PackedTable packed_restrict(const PackedTable& t, int var, bool value) {
  PackedTable out;
  out.arity = t.arity - 1;
  const int shift = t.arity - var;
  for (int idx = 0; idx < (1 << out.arity); ++idx) {
    int low = idx & ((1 << shift) - 1);
    int high = idx >> shift;
    int full = (high << (shift + 1)) | (int(value) << shift) | low;
    out.set(idx, t.get(full));
  }
  return out;
}

int depth_rec(const PackedTable& t, std::unordered_map<PackedTable, int, PackedHash>& memo) {
  if (packed_constant(t)) return 0;
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  int best = t.arity;
  for (int var = 1; var <= t.arity && best > 1; ++var) {
    int d0 = depth_rec(packed_restrict(t, var, false), memo);
    int d1 = (d0 < best) ? depth_rec(packed_restrict(t, var, true), memo) : best;
    best = std::min(best, 1 + std::max(d0, d1));
  }
  memo.emplace(t, best);
  return best;
}

// Values re-indexed by variable subset: entry at mask m (bit i-1 <-> x_i)
// is f evaluated at the indicator input of m.
template <typename T>
std::vector<T> values_by_subset(const BooleanFunction& f) {
  const int n = f.arity();
  std::vector<T> a(std::size_t{1} << n);
  for (int m = 0; m < (1 << n); ++m) {
    int idx = 0;
    for (int i = 1; i <= n; ++i)
      if (m & (1 << (i - 1))) idx |= 1 << (n - i);
    a[m] = static_cast<T>(f.value_at(idx));
  }
  return a;
}

}  // namespace

int decision_tree_depth(const BooleanFunction& f) {
  if (f.arity() > 8) throw CapacityError("decision-tree recursion capped at arity 8");
  std::unordered_map<PackedTable, int, PackedHash> memo;
  return depth_rec(pack(f), memo);
}

int real_degree(const BooleanFunction& f) {
  const int n = f.arity();
  auto a = values_by_subset<long long>(f);
  for (int bit = 0; bit < n; ++bit)
    for (int m = 0; m < (1 << n); ++m)
      if (m & (1 << bit)) a[m] -= a[m ^ (1 << bit)];
  int deg = 0;
  for (int m = 0; m < (1 << n); ++m)
    if (a[m] != 0) deg = std::max(deg, std::popcount(static_cast<unsigned>(m)));
  return deg;
}

int f2_degree(const BooleanFunction& f) {
  const int n = f.arity();
  auto a = values_by_subset<std::uint8_t>(f);
  for (int bit = 0; bit < n; ++bit)
    for (int m = 0; m < (1 << n); ++m)
      if (m & (1 << bit)) a[m] ^= a[m ^ (1 << bit)];
  int deg = 0;
  for (int m = 0; m < (1 << n); ++m)
    if (a[m]) deg = std::max(deg, std::popcount(static_cast<unsigned>(m)));
  return deg;
}

ComplexityReport analyze(const BooleanFunction& f) {
  ComplexityReport r;
  r.function_id = f.id_string();
  r.arity = f.arity();
  r.depth = decision_tree_depth(f);
  r.real_degree = real_degree(f);
  r.f2_degree = f2_degree(f);
  r.parity_tree_lower_bound = r.f2_degree;
  return r;
}

std::string ComplexityReport::csv_row() const {
  return function_id + "," + std::to_string(arity) + "," + std::to_string(depth) + "," +
         std::to_string(real_degree) + "," + std::to_string(f2_degree);
}

std::vector<std::uint64_t> two_query_four_bit_classes() {
  using boolfn::BooleanFunction;
  // The twelve classes on all four bits whose optimal two-query success
  // probability is 1, plus every class on fewer bits except 3-bit AND
  // (one query per remaining bit always suffices once n <= 2... see the
  // 3-bit table: only AND needs three queries).
  static const std::uint64_t four_bit[] = {1632, 1647, 1695, 1782, 1785, 2016,
                                           5736, 6030, 6120, 7128, 7140, 27030};
  static const std::uint64_t three_bit[] = {6, 7, 22, 23, 30, 53, 67, 105, 126};
  std::vector<std::uint64_t> ids;
  for (auto id : four_bit) ids.push_back(boolfn::npn_canonical(BooleanFunction::from_id(4, id)).id);
  auto embed = [](const BooleanFunction& g) {
    // pad with irrelevant trailing variables up to arity 4
    BooleanFunction f = g;
    while (f.arity() < 4) {
      std::vector<std::uint8_t> table;
      table.reserve(f.table().size() * 2);
      for (int idx = 0; idx < f.table_size(); ++idx) {
        table.push_back(f.value_at(idx));
        table.push_back(f.value_at(idx));
      }
      f = BooleanFunction(f.arity() + 1, std::move(table));
    }
    return f;
  };
  for (auto id : three_bit)
    ids.push_back(boolfn::npn_canonical(embed(BooleanFunction::from_id(3, id))).id);
  ids.push_back(boolfn::npn_canonical(embed(BooleanFunction::from_id(2, 1))).id);  // AND
  ids.push_back(boolfn::npn_canonical(embed(BooleanFunction::from_id(2, 6))).id);  // XOR
  ids.push_back(boolfn::npn_canonical(embed(BooleanFunction::from_id(1, 2))).id);  // x1
  ids.push_back(boolfn::npn_canonical(BooleanFunction::constant(4, false)).id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<BooleanFunction> five_bit_candidates(const std::vector<std::uint64_t>& class_ids) {
  if (class_ids.empty()) return {};
  // All 4-bit functions in the given classes, as raw 16-bit tables.
  std::unordered_set<std::uint32_t> pool_set;
  for (auto id : class_ids) {
    auto f = boolfn::BooleanFunction::from_id(4, id);
    for (auto member : boolfn::npn_orbit_ids(f)) pool_set.insert(static_cast<std::uint32_t>(member));
  }
  std::vector<std::uint32_t> pool(pool_set.begin(), pool_set.end());
  std::sort(pool.begin(), pool.end());

  // Top real-degree coefficient of x1 ? f1 : f0 is A(f1) - A(f0) with
  // A(g) = sum_y (-1)^{|y|} g(y), so the degree-5 discard is a bucket match.
  auto alternating_sum = [](std::uint32_t id16) {
    int a = 0;
    for (int idx = 0; idx < 16; ++idx) {
      int v = (id16 >> (15 - idx)) & 1;
      a += (std::popcount(static_cast<unsigned>(idx)) & 1) ? -v : v;
    }
    return a;
  };
  std::unordered_map<int, std::vector<std::size_t>> buckets;
  std::vector<int> depmask(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    buckets[alternating_sum(pool[i])].push_back(i);
    auto f = boolfn::BooleanFunction::from_id(4, pool[i]);
    int mask = 0;
    for (int var = 1; var <= 4; ++var)
      if (f.depends_on(var)) mask |= 1 << (var - 1);
    depmask[i] = mask;
  }

  std::vector<BooleanFunction> out;
  std::vector<std::uint8_t> table(32);
  for (auto& [sum, members] : buckets) {
    (void)sum;
    for (std::size_t i0 : members) {
      for (std::size_t i1 : members) {
        // Depth 5 needs dependence on x1 (halves differ) and on x2..x5.
        if (pool[i0] == pool[i1]) continue;
        if ((depmask[i0] | depmask[i1]) != 0xf) continue;
        for (int idx = 0; idx < 16; ++idx) {
          table[idx] = (pool[i0] >> (15 - idx)) & 1;
          table[16 + idx] = (pool[i1] >> (15 - idx)) & 1;
        }
        BooleanFunction f(5, table);
        if (decision_tree_depth(f) == 5) out.push_back(std::move(f));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BooleanFunction& a, const BooleanFunction& b) {
    return a.table() < b.table();
  });
  return out;
}

}  // namespace exactq::complexity
