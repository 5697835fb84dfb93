#include "exactq/refdata.hpp"

namespace exactq::refdata {

// Published optimal success probabilities for boolean functions, used as
// reproduction targets by the verification tooling. An entry of 1 means
// the solver reported success above 0.999; a starred entry additionally
// admits an exact nonadaptive algorithm with that many queries.

const std::vector<TableTarget>& two_bit_table() {
  static const std::vector<TableTarget> rows = {
      {1, {0.900}, {false}, -1},
      {6, {1.0}, {true}, -1},
  };
  return rows;
}

const std::vector<TableTarget>& three_bit_table() {
  static const std::vector<TableTarget> rows = {
      {1, {0.800, 0.980}, {false, false}, 3},
      {6, {0.667, 1.0}, {false, true}, 3},
      {7, {0.773, 1.0}, {false, false}, 3},
      {22, {0.571, 1.0}, {false, false}, 3},
      {23, {0.667, 1.0}, {false, false}, 3},
      {30, {0.667, 1.0}, {false, false}, 3},
      {53, {0.854, 1.0}, {false, false}, 2},
      {67, {0.773, 1.0}, {false, false}, 3},
      {105, {0.500, 1.0}, {false, true}, 3},
      {126, {0.900, 1.0}, {false, true}, 3},
  };
  return rows;
}

// F2 degrees printed alongside the 3-bit table.
const std::vector<std::pair<std::uint64_t, int>>& three_bit_f2_degrees() {
  static const std::vector<std::pair<std::uint64_t, int>> rows = {
      {1, 3}, {6, 2}, {7, 3}, {22, 3}, {23, 2}, {30, 2}, {53, 2}, {67, 3}, {105, 1}, {126, 2},
  };
  return rows;
}

const std::vector<TableTarget>& four_bit_table() {
  static const std::vector<TableTarget> rows = {
      {1, {0.735, 0.962, 0.996}, {false, false, false}, 4},
      {6, {0.654, 0.931, 1.000}, {false, false, true}, 4},
      {7, {0.750, 0.954, 1.000}, {false, false, false}, 4},
      {22, {0.572, 0.906, 1.000}, {false, false, false}, 4},
      {23, {0.667, 0.926, 1.000}, {false, false, false}, 4},
      {24, {0.654, 0.931, 1.000}, {false, false, true}, 4},
      {25, {0.640, 0.961, 1.000}, {false, false, false}, 4},
      {27, {0.667, 0.965, 1.000}, {false, false, false}, 3},
      {30, {0.600, 0.956, 1.000}, {false, false, false}, 4},
      {31, {0.718, 0.970, 1.000}, {false, false, false}, 4},
      {61, {0.643, 0.976, 1.000}, {false, false, false}, 4},
      {105, {0.500, 0.900, 1.000}, {false, false, true}, 4},
      {107, {0.571, 0.941, 1.000}, {false, false, false}, 4},
      {111, {0.662, 0.968, 1.000}, {false, false, true}, 4},
      {126, {0.667, 0.947, 1.000}, {false, false, true}, 4},
      {127, {0.727, 0.972, 1.000}, {false, false, false}, 4},
      {278, {0.529, 0.884, 1.000}, {false, false, false}, 4},
      {279, {0.643, 0.900, 1.000}, {false, false, false}, 4},
      {280, {0.572, 0.906, 1.000}, {false, false, false}, 4},
      {281, {0.600, 0.956, 1.000}, {false, false, false}, 4},
      {282, {0.571, 0.936, 1.000}, {false, false, false}, 4},
      {283, {0.637, 0.959, 1.000}, {false, false, false}, 4},
      {286, {0.546, 0.932, 1.000}, {false, false, false}, 4},
      {287, {0.659, 0.945, 1.000}, {false, false, false}, 4},
      {300, {0.571, 0.936, 1.000}, {false, false, false}, 4},
      {301, {0.572, 0.964, 1.000}, {false, false, false}, 4},
      {303, {0.644, 0.966, 1.000}, {false, false, false}, 3},
      {316, {0.562, 0.962, 1.000}, {false, false, false}, 4},
      {317, {0.572, 0.980, 1.000}, {false, false, false}, 3},
      {318, {0.546, 0.956, 1.000}, {false, false, false}, 4},
      {319, {0.640, 0.972, 1.000}, {false, false, false}, 4},
      {360, {0.529, 0.884, 1.000}, {false, false, false}, 4},
      {361, {0.500, 0.916, 1.000}, {false, false, false}, 4},
      {362, {0.546, 0.932, 1.000}, {false, false, false}, 4},
      {363, {0.546, 0.955, 1.000}, {false, false, false}, 4},
      {366, {0.546, 0.956, 1.000}, {false, false, false}, 4},
      {367, {0.571, 0.969, 1.000}, {false, false, false}, 4},
      {382, {0.546, 0.923, 1.000}, {false, false, false}, 4},
      {383, {0.600, 0.946, 1.000}, {false, false, false}, 4},
      {384, {0.800, 0.980, 1.000}, {false, false, true}, 4},
      {385, {0.750, 0.954, 1.000}, {false, false, false}, 4},
      {386, {0.640, 0.961, 1.000}, {false, false, false}, 4},
      {387, {0.667, 0.965, 1.000}, {false, false, false}, 4},
      {390, {0.571, 0.936, 1.000}, {false, false, false}, 4},
      {391, {0.637, 0.959, 1.000}, {false, false, false}, 4},
      {393, {0.667, 0.965, 1.000}, {false, false, false}, 3},
      {395, {0.724, 0.963, 1.000}, {false, false, false}, 4},
      {399, {0.751, 0.980, 1.000}, {false, false, false}, 4},
      {406, {0.500, 0.916, 1.000}, {false, false, false}, 4},
      {407, {0.572, 0.940, 1.000}, {false, false, false}, 4},
      {408, {0.600, 0.956, 1.000}, {false, false, false}, 4},
      {409, {0.643, 0.976, 1.000}, {false, false, false}, 4},
      {410, {0.572, 0.964, 1.000}, {false, false, false}, 4},
      {411, {0.656, 0.969, 1.000}, {false, false, false}, 4},
      {414, {0.546, 0.955, 1.000}, {false, false, false}, 4},
      {415, {0.642, 0.965, 1.000}, {false, false, false}, 4},
      {424, {0.667, 0.926, 1.000}, {false, false, false}, 4},
      {425, {0.637, 0.959, 1.000}, {false, false, false}, 4},
      {426, {0.718, 0.970, 1.000}, {false, false, false}, 4},
      {427, {0.751, 0.980, 1.000}, {false, false, false}, 3},
      {428, {0.637, 0.959, 1.000}, {false, false, false}, 4},
      {429, {0.656, 0.969, 1.000}, {false, false, false}, 3},
      {430, {0.644, 0.966, 1.000}, {false, false, false}, 4},
      {431, {0.710, 0.977, 1.000}, {false, false, false}, 4},
      {444, {0.572, 0.980, 1.000}, {false, false, false}, 4},
      {445, {0.641, 0.965, 1.000}, {false, false, false}, 4},
      {446, {0.572, 0.969, 1.000}, {false, false, false}, 4},
      {447, {0.667, 0.980, 1.000}, {false, false, false}, 4},
      {488, {0.643, 0.900, 1.000}, {false, false, false}, 4},
      {489, {0.572, 0.940, 1.000}, {false, false, false}, 4},
      {490, {0.659, 0.945, 1.000}, {false, false, false}, 4},
      {491, {0.642, 0.965, 1.000}, {false, false, false}, 4},
      {494, {0.640, 0.972, 1.000}, {false, false, false}, 4},
      {495, {0.667, 0.980, 1.000}, {false, false, false}, 3},
      {510, {0.600, 0.946, 1.000}, {false, false, false}, 4},
      {829, {0.563, 0.975, 1.000}, {false, false, false}, 4},
      {854, {0.598, 0.955, 1.000}, {false, false, false}, 4},
      {855, {0.714, 0.969, 1.000}, {false, false, false}, 4},
      {856, {0.572, 0.964, 1.000}, {false, false, false}, 4},
      {857, {0.579, 0.961, 1.000}, {false, false, false}, 4},
      {858, {0.572, 0.980, 1.000}, {false, false, false}, 3},
      {859, {0.628, 0.974, 1.000}, {false, false, false}, 4},
      {862, {0.572, 0.966, 1.000}, {false, false, false}, 4},
      {863, {0.667, 0.986, 1.000}, {false, false, false}, 3},
      {872, {0.546, 0.932, 1.000}, {false, false, false}, 4},
      {873, {0.500, 0.946, 1.000}, {false, false, false}, 4},
      {874, {0.598, 0.955, 1.000}, {false, false, false}, 4},
      {875, {0.572, 0.951, 1.000}, {false, false, false}, 4},
      {876, {0.546, 0.956, 1.000}, {false, false, false}, 4},
      {877, {0.545, 0.961, 1.000}, {false, false, false}, 4},
      {878, {0.572, 0.966, 1.000}, {false, false, false}, 4},
      {879, {0.600, 0.966, 1.000}, {false, false, false}, 4},
      {892, {0.563, 0.975, 1.000}, {false, false, false}, 4},
      {893, {0.571, 0.966, 1.000}, {false, false, false}, 4},
      {894, {0.572, 0.947, 1.000}, {false, false, false}, 4},
      {961, {0.718, 0.970, 1.000}, {false, false, false}, 4},
      {965, {0.751, 0.980, 1.000}, {false, false, false}, 3},
      {966, {0.644, 0.966, 1.000}, {false, false, false}, 4},
      {967, {0.710, 0.977, 1.000}, {false, false, false}, 4},
      {980, {0.659, 0.945, 1.000}, {false, false, false}, 4},
      {981, {0.714, 0.969, 1.000}, {false, false, false}, 4},
      {982, {0.572, 0.951, 1.000}, {false, false, false}, 4},
      {983, {0.661, 0.965, 1.000}, {false, false, false}, 4},
      {984, {0.644, 0.966, 1.000}, {false, false, false}, 3},
      {985, {0.628, 0.974, 1.000}, {false, false, false}, 4},
      {987, {0.661, 0.965, 1.000}, {false, false, false}, 3},
      {988, {0.640, 0.972, 1.000}, {false, false, false}, 4},
      {989, {0.667, 0.986, 1.000}, {false, false, false}, 3},
      {990, {0.600, 0.966, 1.000}, {false, false, false}, 4},
      {1632, {0.667, 1.000, 1.000}, {false, true, true}, 4},
      {1633, {0.562, 0.962, 1.000}, {false, false, false}, 4},
      {1634, {0.643, 0.976, 1.000}, {false, false, false}, 4},
      {1635, {0.572, 0.980, 1.000}, {false, false, false}, 4},
      {1638, {0.667, 0.947, 1.000}, {false, false, true}, 4},
      {1639, {0.641, 0.965, 1.000}, {false, false, false}, 4},
      {1641, {0.500, 0.936, 1.000}, {false, false, true}, 4},
      {1643, {0.561, 0.966, 1.000}, {false, false, false}, 4},
      {1647, {0.667, 1.000, 1.000}, {false, false, true}, 4},
      {1650, {0.656, 0.969, 1.000}, {false, false, false}, 4},
      {1651, {0.628, 0.974, 1.000}, {false, false, false}, 4},
      {1654, {0.641, 0.965, 1.000}, {false, false, false}, 4},
      {1656, {0.546, 0.956, 1.000}, {false, false, false}, 4},
      {1657, {0.500, 0.964, 1.000}, {false, false, false}, 4},
      {1658, {0.571, 0.966, 1.000}, {false, false, false}, 4},
      {1659, {0.571, 0.962, 1.000}, {false, false, false}, 4},
      {1662, {0.600, 0.954, 1.000}, {false, false, false}, 4},
      {1680, {0.500, 0.900, 1.000}, {false, false, true}, 4},
      {1681, {0.500, 0.916, 1.000}, {false, false, false}, 4},
      {1683, {0.500, 0.946, 1.000}, {false, false, false}, 4},
      {1686, {0.500, 0.936, 1.000}, {false, false, true}, 4},
      {1687, {0.500, 0.964, 1.000}, {false, false, false}, 4},
      {1695, {0.500, 1.000, 1.000}, {false, false, true}, 3},
      {1712, {0.571, 0.941, 1.000}, {false, false, false}, 4},
      {1713, {0.546, 0.955, 1.000}, {false, false, false}, 4},
      {1714, {0.572, 0.940, 1.000}, {false, false, false}, 4},
      {1715, {0.572, 0.951, 1.000}, {false, false, false}, 4},
      {1716, {0.546, 0.955, 1.000}, {false, false, false}, 4},
      {1717, {0.545, 0.961, 1.000}, {false, false, false}, 4},
      {1718, {0.561, 0.966, 1.000}, {false, false, false}, 4},
      {1719, {0.572, 0.962, 1.000}, {false, false, false}, 3},
      {1721, {0.500, 0.964, 1.000}, {false, false, false}, 4},
      {1725, {0.529, 0.955, 1.000}, {false, false, false}, 4},
      {1776, {0.662, 0.967, 1.000}, {false, false, true}, 4},
      {1777, {0.572, 0.969, 1.000}, {false, false, false}, 4},
      {1778, {0.642, 0.965, 1.000}, {false, false, false}, 4},
      {1782, {0.667, 1.000, 1.000}, {false, false, true}, 3},
      {1785, {0.500, 1.000, 1.000}, {false, false, true}, 4},
      {1910, {0.600, 0.954, 1.000}, {false, false, false}, 4},
      {1912, {0.546, 0.923, 1.000}, {false, false, false}, 4},
      {1913, {0.529, 0.955, 1.000}, {false, false, false}, 4},
      {1914, {0.572, 0.947, 1.000}, {false, false, false}, 4},
      {1918, {0.572, 0.922, 1.000}, {false, false, false}, 4},
      {1968, {0.662, 0.968, 1.000}, {false, false, true}, 4},
      {1969, {0.642, 0.965, 1.000}, {false, false, false}, 4},
      {1972, {0.572, 0.969, 1.000}, {false, false, false}, 4},
      {1973, {0.600, 0.966, 1.000}, {false, false, false}, 4},
      {1974, {0.572, 0.962, 1.000}, {false, false, false}, 4},
      {1980, {0.571, 0.966, 1.000}, {false, false, false}, 3},
      {2016, {0.773, 1.000, 1.000}, {false, false, true}, 4},
      {2017, {0.640, 0.972, 1.000}, {false, false, false}, 4},
      {2018, {0.710, 0.977, 1.000}, {false, false, false}, 4},
      {2019, {0.667, 0.986, 1.000}, {false, false, false}, 4},
      {2022, {0.661, 0.965, 1.000}, {false, false, false}, 3},
      {2025, {0.571, 0.966, 1.000}, {false, false, false}, 4},
      {2032, {0.727, 0.971, 1.000}, {false, false, false}, 4},
      {2033, {0.667, 0.980, 1.000}, {false, false, false}, 4},
      {2034, {0.667, 0.980, 1.000}, {false, false, false}, 3},
      {2040, {0.600, 0.946, 1.000}, {false, false, false}, 4},
      {5736, {0.572, 1.000, 1.000}, {false, false, true}, 4},
      {5737, {0.500, 0.962, 1.000}, {false, false, false}, 4},
      {5738, {0.563, 0.975, 1.000}, {false, false, false}, 4},
      {5739, {0.500, 0.980, 1.000}, {false, false, false}, 4},
      {5742, {0.572, 0.947, 1.000}, {false, false, false}, 4},
      {5758, {0.572, 0.922, 1.000}, {false, false, false}, 4},
      {5761, {0.500, 0.860, 1.000}, {false, false, false}, 4},
      {5763, {0.500, 0.907, 1.000}, {false, false, false}, 4},
      {5766, {0.500, 0.936, 1.000}, {false, false, true}, 4},
      {5767, {0.500, 0.933, 1.000}, {false, false, false}, 4},
      {5769, {0.500, 0.907, 1.000}, {false, false, false}, 4},
      {5771, {0.500, 0.946, 1.000}, {false, false, false}, 4},
      {5774, {0.561, 0.966, 1.000}, {false, false, false}, 4},
      {5782, {0.500, 0.962, 1.000}, {false, false, false}, 4},
      {5783, {0.500, 0.954, 1.000}, {false, false, false}, 4},
      {5784, {0.500, 0.946, 1.000}, {false, false, false}, 4},
      {5785, {0.500, 0.933, 1.000}, {false, false, false}, 4},
      {5786, {0.500, 0.964, 1.000}, {false, false, false}, 4},
      {5787, {0.500, 0.955, 1.000}, {false, false, false}, 4},
      {5790, {0.500, 0.980, 1.000}, {false, false, false}, 3},
      {5801, {0.500, 0.933, 1.000}, {false, false, false}, 4},
      {5804, {0.545, 0.961, 1.000}, {false, false, false}, 4},
      {5805, {0.500, 0.955, 1.000}, {false, false, false}, 4},
      {5820, {0.529, 0.955, 1.000}, {false, false, false}, 4},
      {5865, {0.500, 0.954, 1.000}, {false, false, false}, 4},
      {6014, {0.600, 0.874, 1.000}, {false, false, false}, 4},
      {6030, {0.667, 1.000, 1.000}, {false, false, true}, 3},
      {6038, {0.500, 0.980, 1.000}, {false, false, false}, 4},
      {6040, {0.572, 0.951, 1.000}, {false, false, false}, 4},
      {6042, {0.572, 0.962, 1.000}, {false, false, false}, 3},
      {6060, {0.600, 0.966, 1.000}, {false, false, false}, 4},
      {6120, {0.667, 1.000, 1.000}, {false, false, true}, 4},
      {6375, {0.500, 0.900, 1.000}, {false, false, true}, 4},
      {6625, {0.500, 0.946, 1.000}, {false, false, false}, 4},
      {6627, {0.500, 0.955, 1.000}, {false, false, false}, 4},
      {6630, {0.500, 0.954, 1.000}, {false, false, false}, 4},
      {7128, {0.854, 1.000, 1.000}, {false, false, true}, 3},
      {7140, {0.500, 1.000, 1.000}, {false, false, true}, 3},
      {7905, {0.500, 0.900, 1.000}, {false, false, true}, 4},
      {27030, {0.500, 1.000, 1.000}, {false, true, true}, 4},
  };
  return rows;
}

const std::vector<SymTarget>& five_bit_symmetric_table() {
  static const std::vector<SymTarget> rows = {
      {{0, 0, 0, 0, 0, 1}, {0.693, 0.925, 0.988, 0.999}, {false, false, false, false}},
      {{0, 0, 0, 0, 1, 0}, {0.516, 0.761, 0.972, 1.000}, {false, false, false, false}},
      {{0, 0, 0, 0, 1, 1}, {0.640, 0.798, 0.974, 1.000}, {false, false, false, false}},
      {{0, 0, 0, 1, 0, 0}, {0.530, 0.616, 1.000, 1.000}, {false, false, false, false}},
      {{0, 0, 0, 1, 0, 1}, {0.500, 0.593, 0.995, 1.000}, {false, false, false, false}},
      {{0, 0, 0, 1, 1, 0}, {0.546, 0.758, 1.000, 1.000}, {false, false, false, false}},
      {{0, 0, 0, 1, 1, 1}, {0.600, 0.728, 1.000, 1.000}, {false, false, false, false}},
      {{0, 0, 1, 0, 0, 1}, {0.500, 0.640, 0.988, 1.000}, {false, false, false, false}},
      {{0, 0, 1, 0, 1, 0}, {0.500, 0.517, 1.000, 1.000}, {false, false, false, false}},
      {{0, 0, 1, 0, 1, 1}, {0.500, 0.534, 1.000, 1.000}, {false, false, false, false}},
      {{0, 0, 1, 1, 0, 0}, {0.600, 0.874, 1.000, 1.000}, {false, false, false, true}},
      {{0, 0, 1, 1, 0, 1}, {0.500, 0.856, 0.998, 1.000}, {false, false, false, false}},
      {{0, 0, 1, 1, 1, 0}, {0.616, 0.762, 0.969, 1.000}, {false, false, false, false}},
      {{0, 1, 0, 0, 0, 1}, {0.500, 0.728, 0.967, 1.000}, {false, false, false, false}},
      {{0, 1, 0, 0, 1, 0}, {0.500, 0.860, 1.000, 1.000}, {false, false, false, true}},
      {{0, 1, 0, 1, 0, 1}, {0.500, 0.500, 1.000, 1.000}, {false, false, true, true}},
      {{0, 1, 0, 1, 1, 0}, {0.500, 0.616, 0.998, 1.000}, {false, false, false, false}},
      {{0, 1, 1, 0, 0, 1}, {0.500, 0.784, 0.998, 1.000}, {false, false, false, false}},
      {{0, 1, 1, 1, 1, 0}, {0.736, 0.962, 0.996, 1.000}, {false, false, false, true}},
  };
  return rows;
}

const std::vector<SymTarget>& six_bit_symmetric_table() {
  // The published table repeats the row label (0,0,1,0,0,1,0); position in
  // the sorted listing identifies the second occurrence as (0,0,1,0,0,1,1).
  static const std::vector<SymTarget> rows = {
      {{0, 0, 0, 0, 0, 0, 1}, {0.6630, 0.9000, 0.9800, 0.9970, 0.9999}, {false, false, false, false, false}},
      {{0, 0, 0, 0, 0, 1, 0}, {0.5110, 0.6840, 0.9400, 0.9930, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 0, 0, 0, 1, 1}, {0.6400, 0.7380, 0.9460, 0.9930, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 0, 0, 1, 0, 0}, {0.5160, 0.5720, 0.8780, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 0, 0, 1, 0, 1}, {0.5000, 0.5410, 0.8750, 0.9990, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 0, 0, 1, 1, 0}, {0.5270, 0.7510, 0.9040, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 0, 0, 1, 1, 1}, {0.5890, 0.7100, 0.9010, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 0, 1, 0, 0, 0}, {0.5300, 0.6160, 1.0000, 1.0000, 1.0000}, {false, false, false, false, true}},
      {{0, 0, 0, 1, 0, 0, 1}, {0.5000, 0.6140, 0.9800, 0.9970, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 0, 1, 0, 1, 0}, {0.5000, 0.5040, 0.9460, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 0, 1, 0, 1, 1}, {0.5000, 0.5250, 0.9520, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 0, 1, 1, 0, 0}, {0.5460, 0.6670, 0.8640, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 0, 1, 1, 0, 1}, {0.5000, 0.6250, 0.8600, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 0, 1, 1, 1, 0}, {0.5560, 0.7210, 0.9050, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 1, 0, 0, 0, 1}, {0.5000, 0.5830, 0.8820, 0.9970, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 1, 0, 0, 1, 0}, {0.5000, 0.5270, 0.8390, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 1, 0, 0, 1, 1}, {0.5000, 0.5410, 0.8430, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 1, 0, 1, 0, 0}, {0.5000, 0.5170, 1.0000, 1.0000, 1.0000}, {false, false, false, false, true}},
      {{0, 0, 1, 0, 1, 0, 1}, {0.5000, 0.5000, 0.9850, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 1, 0, 1, 1, 0}, {0.5000, 0.5200, 0.9400, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 1, 1, 0, 0, 1}, {0.5000, 0.7120, 0.8670, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 1, 1, 0, 1, 0}, {0.5000, 0.5130, 0.8400, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 1, 1, 1, 0, 0}, {0.6160, 0.7620, 0.9690, 1.0000, 1.0000}, {false, false, false, false, true}},
      {{0, 0, 1, 1, 1, 0, 1}, {0.5000, 0.7220, 0.9650, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 0, 1, 1, 1, 1, 0}, {0.6250, 0.7020, 0.9390, 0.9920, 1.0000}, {false, false, false, false, false}},
      {{0, 1, 0, 0, 0, 0, 1}, {0.5000, 0.6520, 0.9340, 0.9920, 1.0000}, {false, false, false, false, false}},
      {{0, 1, 0, 0, 0, 1, 0}, {0.5000, 0.7280, 0.9670, 1.0000, 1.0000}, {false, false, false, false, true}},
      {{0, 1, 0, 0, 1, 0, 1}, {0.5000, 0.5000, 0.8360, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 1, 0, 0, 1, 1, 0}, {0.5000, 0.6670, 0.8630, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 1, 0, 1, 0, 0, 1}, {0.5000, 0.5000, 0.9340, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 1, 0, 1, 0, 1, 0}, {0.5000, 0.5000, 1.0000, 1.0000, 1.0000}, {false, false, true, true, true}},
      {{0, 1, 0, 1, 1, 1, 0}, {0.5000, 0.5530, 0.8800, 0.9990, 1.0000}, {false, false, false, false, false}},
      {{0, 1, 1, 0, 0, 0, 1}, {0.5000, 0.7580, 0.9080, 1.0000, 1.0000}, {false, false, false, false, false}},
      {{0, 1, 1, 0, 1, 1, 0}, {0.5000, 0.6400, 0.9880, 1.0000, 1.0000}, {false, false, false, false, true}},
      {{0, 1, 1, 1, 1, 1, 0}, {0.6930, 0.9250, 0.9880, 0.9990, 1.0000}, {false, false, false, false, true}},
  };
  return rows;
}

}  // namespace exactq::refdata
