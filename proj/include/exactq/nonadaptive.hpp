#pragma once

#include <cstdint>
#include <vector>

#include "exactq/boolfn.hpp"
#include "exactq/query_algorithm.hpp"

namespace exactq::na {

using boolfn::BooleanFunction;

// F2-linear subspace of {0,1}^n; members share the input-index bit layout.
class Subspace {
 public:
  Subspace(int n, std::vector<std::uint32_t> members);
  static Subspace trivial(int n) { return Subspace(n, {0}); }

  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::uint32_t>& basis() const { return basis_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  bool contains(std::uint32_t v) const;

  Subspace dual() const;  // {x : x.s = 0 for all s}

 private:
  int n_;
  std::vector<std::uint32_t> basis_;    // reduced row echelon form
  std::vector<std::uint32_t> members_;  // sorted, 2^dim of them
};

// S_f: all translations z with f(x) = f(x+z) everywhere.
Subspace invariance_subspace(const BooleanFunction& f);

struct RadiusResult {
  int radius = 0;
  std::uint32_t witness = 0;  // lexicographically smallest minimiser
};

// min over centres x of the largest Hamming distance to the code.
RadiusResult radius(const std::vector<std::uint32_t>& code, int n);

// Nonadaptive exact query complexity: the radius of the dual of S_f.
int q_na(const BooleanFunction& f);

// Explicit exact nonadaptive algorithm using q_na(f) queries: prepare the
// phase state over a coset of the dual code with parallel queries,
// then one final unitary folds the Hadamard-and-evaluate step into the
// output qubit. Work register holds the k-1 remaining query slots.
QueryAlgorithm nonadaptive_algorithm(const BooleanFunction& f);

enum class SymClass { kConstant, kParityLike, kPalindromic, kGeneric };

struct SymmetricClassification {
  SymClass cls;
  int q_na;
};

// The four-way split for symmetric functions: constant (0), PARITY or its
// negation (ceil(n/2)), palindromic f(x)=f(~x) (n-1), anything else (n).
SymmetricClassification classify_symmetric(const BooleanFunction& f);

// Table star convention: a nonadaptive exact algorithm with t queries exists.
bool starred(const BooleanFunction& f, int t);

// Walsh-Hadamard coefficient of the 0/1-valued f at b.
double fourier_coefficient(const BooleanFunction& f, std::uint32_t b);

}  // namespace exactq::na
