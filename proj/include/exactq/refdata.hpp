#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace exactq::refdata {

// Reproduction targets: published per-class optimal success probabilities
// (three decimals; 1 means "above 0.999"), star flags for nonadaptive
// exactness, and decision-tree depths where printed.
struct TableTarget {
  std::uint64_t id;
  std::vector<double> success;  // t = 1..n-1
  std::vector<bool> starred;
  int depth;  // -1 when not printed
};

struct SymTarget {
  std::vector<int> values;  // c_0..c_n
  std::vector<double> success;
  std::vector<bool> starred;
};

const std::vector<TableTarget>& two_bit_table();
const std::vector<TableTarget>& three_bit_table();
const std::vector<std::pair<std::uint64_t, int>>& three_bit_f2_degrees();
const std::vector<TableTarget>& four_bit_table();
const std::vector<SymTarget>& five_bit_symmetric_table();
const std::vector<SymTarget>& six_bit_symmetric_table();

}  // namespace exactq::refdata
