#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exactq/boolfn.hpp"

namespace exactq::complexity {

using boolfn::BooleanFunction;

struct ComplexityReport {
  std::string function_id;
  int arity = 0;
  int depth = 0;       // decision-tree complexity D(f)
  int real_degree = 0;
  int f2_degree = 0;
  int parity_tree_lower_bound = 0;  // equals f2_degree

  std::string csv_row() const;  // "id,n,D,deg_real,deg_f2"
};

// Exact decision-tree depth by memoised recursion over restrictions.
// Capped at arity 8.
int decision_tree_depth(const BooleanFunction& f);

// Degree of the unique multilinear polynomial over the reals agreeing with
// f on {0,1}^n (integer Moebius transform, exact arithmetic).
int real_degree(const BooleanFunction& f);

// Degree of the algebraic normal form over F2. Any decision tree whose
// nodes query parities of subsets needs at least this depth.
int f2_degree(const BooleanFunction& f);

ComplexityReport analyze(const BooleanFunction& f);

// The 25 equivalence classes of 4-bit functions admitting a two-query
// exact algorithm, as canonical IDs.
std::vector<std::uint64_t> two_query_four_bit_classes();

// Appendix search pipeline: all 5-bit functions x1 ? f1 : f0 with f0, f1
// drawn from the given classes' isomorphs, keeping those with real degree
// at most 4 and decision-tree depth exactly 5. With the default class list
// this yields 13,608 candidates.
std::vector<BooleanFunction> five_bit_candidates(const std::vector<std::uint64_t>& class_ids);

}  // namespace exactq::complexity
