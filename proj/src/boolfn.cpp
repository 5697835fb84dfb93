#include "exactq/boolfn.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace exactq::boolfn {

namespace {

void check_arity(int n) {
  if (n < 0 || n > kMaxArity)
    throw RangeError("arity " + std::to_string(n) + " outside [0, 16]");
}

}  // namespace

BooleanFunction::BooleanFunction(int arity, std::vector<std::uint8_t> table)
    : n_(arity), table_(std::move(table)) {
  check_arity(arity);
  if (table_.size() != static_cast<std::size_t>(1) << n_)
    throw RangeError("truth table size does not match arity");
  for (auto& v : table_) v = v ? 1 : 0;
}

BooleanFunction BooleanFunction::from_id(int arity, std::uint64_t id) {
  check_arity(arity);
  if (arity > 6) throw RangeError("from_id supports arity <= 6; use the hex table form");
  const int size = 1 << arity;
  if (arity < 6 && id >= (std::uint64_t{1} << size))
    throw RangeError("function id " + std::to_string(id) + " out of range for arity " +
                     std::to_string(arity));
  std::vector<std::uint8_t> table(size);
  for (int idx = 0; idx < size; ++idx)
    table[idx] = static_cast<std::uint8_t>((id >> (size - 1 - idx)) & 1);
  return BooleanFunction(arity, std::move(table));
}

BooleanFunction BooleanFunction::constant(int arity, bool value) {
  check_arity(arity);
  return BooleanFunction(arity, std::vector<std::uint8_t>(std::size_t{1} << arity, value ? 1 : 0));
}

std::uint64_t BooleanFunction::id() const {
  if (n_ > 6) throw RangeError("id() only fits in 64 bits for arity <= 6");
  std::uint64_t id = 0;
  for (int idx = 0; idx < table_size(); ++idx) id = (id << 1) | table_[idx];
  return id;
}

std::string BooleanFunction::id_string() const {
  if (n_ <= 6) return std::to_string(id());
  // Decimal of a 2^n-bit integer via repeated doubling.
  std::vector<std::uint8_t> digits{0};  // little-endian decimal
  for (int idx = 0; idx < table_size(); ++idx) {
    int carry = table_[idx];
    for (auto& d : digits) {
      int v = d * 2 + carry;
      d = static_cast<std::uint8_t>(v % 10);
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(static_cast<std::uint8_t>(carry % 10));
      carry /= 10;
    }
  }
  std::string out(digits.rbegin(), digits.rend());
  std::transform(out.begin(), out.end(), out.begin(), [](char c) { return char('0' + c); });
  return out;
}

std::string BooleanFunction::table_hex() const {
  static const char* hex = "0123456789abcdef";
  std::string out;
  int size = table_size();
  if (size < 4) {
    int v = 0;
    for (int idx = 0; idx < size; ++idx) v = (v << 1) | table_[idx];
    out.push_back(hex[v]);
    return out;
  }
  for (int idx = 0; idx < size; idx += 4) {
    int nib = (table_[idx] << 3) | (table_[idx + 1] << 2) | (table_[idx + 2] << 1) | table_[idx + 3];
    out.push_back(hex[nib]);
  }
  return out;
}

bool BooleanFunction::is_constant() const {
  return std::all_of(table_.begin(), table_.end(),
                     [&](std::uint8_t v) { return v == table_[0]; });
}

bool BooleanFunction::is_symmetric() const {
  std::array<int, kMaxArity + 1> seen;
  seen.fill(-1);
  for (int idx = 0; idx < table_size(); ++idx) {
    int w = std::popcount(static_cast<unsigned>(idx));
    if (seen[w] < 0)
      seen[w] = table_[idx];
    else if (seen[w] != table_[idx])
      return false;
  }
  return true;
}

bool BooleanFunction::depends_on(int var) const {
  if (var < 1 || var > n_) throw RangeError("variable index out of range");
  const int bit = 1 << (n_ - var);
  for (int idx = 0; idx < table_size(); ++idx)
    if (!(idx & bit) && table_[idx] != table_[idx | bit]) return true;
  return false;
}

int BooleanFunction::support_size() const {
  int count = 0;
  for (int var = 1; var <= n_; ++var) count += depends_on(var);
  return count;
}

BooleanFunction from_family(const FamilySpec& family, int arity) {
  check_arity(arity);
  const int size = 1 << arity;
  std::vector<std::uint8_t> table(size);
  auto weight = [](int idx) { return std::popcount(static_cast<unsigned>(idx)); };
  switch (family.tag) {
    case Family::kParity:
      for (int i = 0; i < size; ++i) table[i] = weight(i) & 1;
      break;
    case Family::kMaj:
      for (int i = 0; i < size; ++i) table[i] = 2 * weight(i) >= arity;
      break;
    case Family::kExact:
      if (family.k < 0 || family.k > arity)
        throw ParameterError("EXACT_k requires 0 <= k <= n");
      for (int i = 0; i < size; ++i) table[i] = weight(i) == family.k;
      break;
    case Family::kNae:
      for (int i = 0; i < size; ++i) table[i] = !(weight(i) == 0 || weight(i) == arity);
      break;
    case Family::kThreshold:
      if (family.k < 0 || family.k > arity + 1)
        throw ParameterError("Th_k requires 0 <= k <= n+1");
      for (int i = 0; i < size; ++i) table[i] = weight(i) >= family.k;
      break;
    case Family::kSel:
      if (arity != 3) throw ParameterError("SEL is a 3-bit function");
      for (int i = 0; i < size; ++i) {
        bool x1 = BooleanFunction::input_bit(i, 1, 3);
        bool x2 = BooleanFunction::input_bit(i, 2, 3);
        bool x3 = BooleanFunction::input_bit(i, 3, 3);
        table[i] = x1 ? x3 : x2;
      }
      break;
    case Family::kSym:
      if (static_cast<int>(family.sym_values.size()) != arity + 1)
        throw ParameterError("SYM needs exactly n+1 coefficients");
      for (int i = 0; i < size; ++i) table[i] = family.sym_values[weight(i)] ? 1 : 0;
      break;
  }
  return BooleanFunction(arity, std::move(table));
}

BooleanFunction restrict_var(const BooleanFunction& f, int var, bool value) {
  const int n = f.arity();
  if (var < 1 || var > n) throw RangeError("restriction variable out of range");
  const int shift = n - var;
  std::vector<std::uint8_t> table(std::size_t{1} << (n - 1));
  for (int idx = 0; idx < (1 << (n - 1)); ++idx) {
    int low = idx & ((1 << shift) - 1);
    int high = idx >> shift;
    int full = (high << (shift + 1)) | (int(value) << shift) | low;
    table[idx] = f.value_at(full);
  }
  return BooleanFunction(n - 1, std::move(table));
}

BooleanFunction compose_blocks(const BooleanFunction& outer, const BooleanFunction& inner) {
  const int n = outer.arity(), k = inner.arity();
  if (n * k > kMaxArity)
    throw CapacityError("composed arity " + std::to_string(n * k) + " exceeds 16 bits");
  const int arity = n * k;
  const int kmask = (1 << k) - 1;
  std::vector<std::uint8_t> table(std::size_t{1} << arity);
  for (int idx = 0; idx < (1 << arity); ++idx) {
    int outer_idx = 0;
    for (int b = 0; b < n; ++b) {
      int block = (idx >> ((n - 1 - b) * k)) & kmask;
      outer_idx = (outer_idx << 1) | int(inner.value_at(block));
    }
    table[idx] = outer.value_at(outer_idx);
  }
  return BooleanFunction(arity, std::move(table));
}

namespace {

// One NPN transform applied to a packed table: result(y) = out ^ f(z) with
// z_i = y_{perm[i]} ^ neg_i (indices 0-based on the MSB-first convention).
std::uint64_t transform_id(const std::vector<std::uint8_t>& table, int n,
                           const std::array<int, 6>& perm, int negmask, int outneg) {
  const int size = 1 << n;
  std::uint64_t id = 0;
  for (int y = 0; y < size; ++y) {
    int z = 0;
    for (int i = 0; i < n; ++i) {
      int bit = (y >> (n - 1 - perm[i])) & 1;
      bit ^= (negmask >> i) & 1;
      z = (z << 1) | bit;
    }
    id = (id << 1) | (std::uint64_t)(table[z] ^ outneg);
  }
  return id;
}

void for_each_permutation(int n, const std::function<void(const std::array<int, 6>&)>& fn) {
  std::array<int, 6> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
}

}  // namespace

std::vector<std::uint64_t> npn_orbit_ids(const BooleanFunction& f) {
  const int n = f.arity();
  if (n > 6) throw CapacityError("NPN orbit enumeration capped at arity 6");
  std::vector<std::uint64_t> ids;
  for_each_permutation(n, [&](const std::array<int, 6>& perm) {
    for (int negmask = 0; negmask < (1 << n); ++negmask) {
      std::uint64_t base = transform_id(f.table(), n, perm, negmask, 0);
      ids.push_back(base);
      std::uint64_t comp = (n == 6) ? ~base : (~base & (((std::uint64_t{1}) << (1 << n)) - 1));
      ids.push_back(comp);
    }
  });
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

NpnResult npn_canonical(const BooleanFunction& f) {
  auto ids = npn_orbit_ids(f);
  return NpnResult{BooleanFunction::from_id(f.arity(), ids.front()), ids.front()};
}

std::vector<std::uint64_t> npn_class_representatives(int arity) {
  if (arity < 1 || arity > 4)
    throw CapacityError("full class enumeration supported for arity 1..4");
  const std::uint64_t count = std::uint64_t{1} << (1 << arity);
  std::vector<bool> visited(count, false);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t id = 0; id < count; ++id) {
    if (visited[id]) continue;
    // Ascending scan: the first unvisited orbit member is the canonical ID.
    auto f = BooleanFunction::from_id(arity, id);
    for (std::uint64_t member : npn_orbit_ids(f)) visited[member] = true;
    bool full_support = f.support_size() == arity;
    if (full_support) reps.push_back(id);
  }
  return reps;
}

std::string to_json(const BooleanFunction& f) {
  nlohmann::json j;
  j["n"] = f.arity();
  if (f.arity() <= 6)
    j["id"] = f.id_string();
  else
    j["table"] = f.table_hex();
  return j.dump();
}

BooleanFunction from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("n")) throw SerializationError("bad boolean function JSON");
  int n = j["n"].get<int>();
  if (j.contains("id")) {
    const std::string s = j["id"].get<std::string>();
    std::uint64_t id = std::stoull(s);
    return BooleanFunction::from_id(n, id);
  }
  if (j.contains("table")) {
    const std::string hexstr = j["table"].get<std::string>();
    check_arity(n);
    const int size = 1 << n;
    if (static_cast<int>(hexstr.size()) * 4 != size && !(size < 4 && hexstr.size() == 1))
      throw SerializationError("hex table length does not match arity");
    std::vector<std::uint8_t> table(size);
    for (int idx = 0; idx < size; ++idx) {
      char c = hexstr[idx / 4];
      int nib = (c >= 'a') ? c - 'a' + 10 : (c >= 'A') ? c - 'A' + 10 : c - '0';
      int shift = (size < 4) ? (size - 1 - idx) : (3 - idx % 4);
      table[idx] = (nib >> shift) & 1;
    }
    return BooleanFunction(n, std::move(table));
  }
  throw SerializationError("boolean function JSON needs an id or table field");
}

}  // namespace exactq::boolfn
