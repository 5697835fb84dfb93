#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exactq/errors.hpp"

namespace exactq::boolfn {

inline constexpr int kMaxArity = 16;

// Total boolean function f:{0,1}^n -> {0,1} stored as its truth table.
//
// Row order is fixed once and for all: input x = (x_1,...,x_n) sits at
// idx(x) = sum_i x_i 2^(n-i), i.e. x_1 is the most significant bit. The
// function ID is the table read MSB-first as a binary integer, so e.g.
// 3-bit PARITY has ID 105 and MAJ has ID 23.
class BooleanFunction {
 public:
  BooleanFunction() : n_(0), table_{0} {}
  BooleanFunction(int arity, std::vector<std::uint8_t> table);

  static BooleanFunction from_id(int arity, std::uint64_t id);
  static BooleanFunction constant(int arity, bool value);

  int arity() const { return n_; }
  int table_size() const { return 1 << n_; }
  bool value_at(int idx) const { return table_[static_cast<std::size_t>(idx)] != 0; }
  const std::vector<std::uint8_t>& table() const { return table_; }

  // Bit of x for 1-based variable index (x_1 most significant).
  static bool input_bit(int idx, int var, int arity) {
    return (idx >> (arity - var)) & 1;
  }

  std::uint64_t id() const;       // arity <= 6 only
  std::string id_string() const;  // decimal, any arity
  std::string table_hex() const;  // MSB-first hex digits

  bool is_constant() const;
  bool is_symmetric() const;
  bool depends_on(int var) const;  // 1-based
  int support_size() const;        // number of variables f depends on

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

enum class Family { kParity, kMaj, kExact, kNae, kThreshold, kSel, kSym };

struct FamilySpec {
  Family tag;
  int k = 0;                              // EXACT_k / Th_k parameter
  std::vector<std::uint8_t> sym_values;   // SYM(c_0,...,c_n)
};

// Named constructions: PARITY, MAJ (|x| >= n/2), EXACT_k (|x| == k),
// NAE (0 iff all bits equal), Th_k (|x| >= k), SEL (x_2 if x_1=0 else x_3,
// n must be 3), SYM(c_0..c_n) (value c_{|x|}).
BooleanFunction from_family(const FamilySpec& family, int arity);

// g(y) = f(y with `value` inserted at position `var`); arity drops by one.
BooleanFunction restrict_var(const BooleanFunction& f, int var, bool value);

// Block composition: outer on n bits applied to inner evaluated on n
// consecutive k-bit blocks; result has n*k bits.
BooleanFunction compose_blocks(const BooleanFunction& outer, const BooleanFunction& inner);

struct NpnResult {
  BooleanFunction representative;
  std::uint64_t id;
};

// Minimum-ID member of the orbit under input permutation, input negation
// and output negation (n! * 2^n * 2 transforms). Arity <= 6.
NpnResult npn_canonical(const BooleanFunction& f);

// All distinct IDs in the orbit of f. Arity <= 6.
std::vector<std::uint64_t> npn_orbit_ids(const BooleanFunction& f);

// Ascending canonical IDs of all equivalence classes on exactly `arity`
// inputs, i.e. classes whose members depend on every variable.
std::vector<std::uint64_t> npn_class_representatives(int arity);

// Wire format: {"n": int, "id": "<decimal>"} for n <= 6, otherwise
// {"n": int, "table": "<hex msb-first>"}.
std::string to_json(const BooleanFunction& f);
BooleanFunction from_json(const std::string& text);

}  // namespace exactq::boolfn
