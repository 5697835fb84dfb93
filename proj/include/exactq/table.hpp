#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exactq/boolfn.hpp"
#include "exactq/sdp.hpp"

namespace exactq::table {

using boolfn::BooleanFunction;

struct TableRow {
  std::string id;
  std::string name;          // recognised family, empty otherwise
  std::string sym_label;     // "(c0,...,cn)" for symmetric sweeps
  int n = 0;
  std::vector<double> success;  // raw values, t = 1..t_max; NaN if unsolved
  int f2_degree = 0;
  int depth = 0;
  int q_na = 0;
};

// "0.854", "1" above 0.999, with a trailing star when a t-query exact
// nonadaptive algorithm exists.
std::string format_entry(double raw, bool star);

// PARITY / MAJ / EXACT_k / NAE / Th_k / SEL / AND / OR / XOR / SYM(...)
// when f matches one up to nothing at all (no isomorphism applied).
std::string detect_name(const BooleanFunction& f);

struct SweepOptions {
  int t_max = 0;  // 0 means n-1 (or n for analyze when wanted)
  sdp::SolverConfig solver;
  int jobs = 1;
  bool progress = false;
};

TableRow analyze_row(const BooleanFunction& f, const SweepOptions& opt);

// One row per equivalence class depending on all n bits, ascending
// canonical IDs. n <= 4.
std::vector<TableRow> sweep_classes(int n, const SweepOptions& opt);

// One row per symmetric class (up to reversal and complement), ascending
// coefficient vectors. n <= 6.
std::vector<TableRow> sweep_symmetric(int n, const SweepOptions& opt);

std::string render_csv(const std::vector<TableRow>& rows);
std::string render_markdown(const std::vector<TableRow>& rows);
std::string render_json(const std::vector<TableRow>& rows);

}  // namespace exactq::table
