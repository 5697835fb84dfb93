#include "exactq/nonadaptive.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "exactq/linalg.hpp"

namespace exactq::na {

namespace {

int popcount(std::uint32_t v) { return std::popcount(v); }

std::vector<std::uint32_t> reduce_basis(std::vector<std::uint32_t> vecs) {
  std::vector<std::uint32_t> basis;
  for (std::uint32_t v : vecs) {
    for (std::uint32_t b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
    std::sort(basis.rbegin(), basis.rend());
  }
  return basis;
}

std::vector<std::uint32_t> span_of(const std::vector<std::uint32_t>& basis) {
  std::vector<std::uint32_t> members{0};
  for (std::uint32_t b : basis) {
    std::size_t size = members.size();
    for (std::size_t k = 0; k < size; ++k) members.push_back(members[k] ^ b);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subspace::Subspace(int n, std::vector<std::uint32_t> members) : n_(n) {
  basis_ = reduce_basis(std::move(members));
  members_ = span_of(basis_);
}

bool Subspace::contains(std::uint32_t v) const {
  for (std::uint32_t b : basis_) v = std::min(v, v ^ b);
  return v == 0;
}

Subspace Subspace::dual() const {
  std::vector<std::uint32_t> duals;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n_); ++x) {
    bool ok = true;
    for (std::uint32_t b : basis_)
      if (popcount(x & b) & 1) {
        ok = false;
        break;
      }
    if (ok) duals.push_back(x);
  }
  return Subspace(n_, std::move(duals));
}

Subspace invariance_subspace(const BooleanFunction& f) {
  const int size = f.table_size();
  std::vector<std::uint32_t> members;
  for (int z = 0; z < size; ++z) {
    bool invariant = true;
    for (int x = 0; x < size && invariant; ++x)
      invariant = f.value_at(x) == f.value_at(x ^ z);
    if (invariant) members.push_back(static_cast<std::uint32_t>(z));
  }
  return Subspace(f.arity(), std::move(members));
}

RadiusResult radius(const std::vector<std::uint32_t>& code, int n) {
  if (code.empty()) throw ParameterError("radius of an empty code");
  RadiusResult best{n + 1, 0};
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
    int worst = 0;
    for (std::uint32_t y : code) worst = std::max(worst, popcount(x ^ y));
    if (worst < best.radius) best = {worst, x};
  }
  return best;
}

int q_na(const BooleanFunction& f) {
  Subspace dual = invariance_subspace(f).dual();
  return radius(dual.members(), f.arity()).radius;
}

bool starred(const BooleanFunction& f, int t) { return q_na(f) <= t; }

double fourier_coefficient(const BooleanFunction& f, std::uint32_t b) {
  double acc = 0.0;
  for (int y = 0; y < f.table_size(); ++y)
    if (f.value_at(y)) acc += (popcount(b & static_cast<std::uint32_t>(y)) & 1) ? -1.0 : 1.0;
  return acc / f.table_size();
}

SymmetricClassification classify_symmetric(const BooleanFunction& f) {
  if (!f.is_symmetric()) throw ClassificationError("function is not symmetric");
  const int n = f.arity();
  if (f.is_constant()) return {SymClass::kConstant, 0};
  auto parity = boolfn::from_family({boolfn::Family::kParity, 0, {}}, n);
  bool is_parity = true, is_negparity = true;
  for (int x = 0; x < f.table_size(); ++x) {
    if (f.value_at(x) != parity.value_at(x)) is_parity = false;
    if (f.value_at(x) == parity.value_at(x)) is_negparity = false;
  }
  if (is_parity || is_negparity) return {SymClass::kParityLike, (n + 1) / 2};
  const int full = f.table_size() - 1;
  bool palindromic = true;
  for (int x = 0; x < f.table_size() && palindromic; ++x)
    palindromic = f.value_at(x) == f.value_at(full - x);
  if (palindromic) return {SymClass::kPalindromic, n - 1};
  return {SymClass::kGeneric, n};
}

QueryAlgorithm nonadaptive_algorithm(const BooleanFunction& f) {
  const int n = f.arity();
  Subspace sperp = invariance_subspace(f).dual();
  RadiusResult rad = radius(sperp.members(), n);
  const int k = rad.radius;

  if (k == 0) {
    // constant function; a single unitary writes the answer
    QueryAlgorithm alg;
    alg.t = 0;
    alg.dim_in = n + 1;
    alg.dim_work = 1;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(alg.total_dim(), alg.total_dim());
    if (f.value_at(0)) {
      u.setZero();
      // swap the output qubit on every basis state
      for (int i = 0; i < alg.total_dim(); i += 2) {
        u(i, i + 1) = 1.0;
        u(i + 1, i) = 1.0;
      }
    }
    alg.unitaries.push_back(std::move(u));
    return alg;
  }

  const int din = n + 1;
  long long work = 1;
  for (int j = 1; j < k; ++j) {
    work *= din;
    if (din * work * 2 > 8192)
      throw CapacityError("nonadaptive algorithm dimension exceeds the supported limit");
  }
  const int dwork = static_cast<int>(work);

  QueryAlgorithm alg;
  alg.t = k;
  alg.dim_in = din;
  alg.dim_work = dwork;
  const int dim = alg.total_dim();

  // Slot layout: each coset member s (weight <= k after translating by the
  // radius witness) lists its set positions in increasing order, padded
  // with null queries. Register 0 is H_in; the rest live in the work space.
  const auto& members = sperp.members();
  const int csize = static_cast<int>(members.size());
  std::vector<std::array<int, 16>> slots(csize);
  std::vector<std::uint32_t> coset(csize);
  for (int c = 0; c < csize; ++c) {
    coset[c] = members[c] ^ rad.witness;
    std::array<int, 16> slot{};
    int pos = 0;
    for (int i = 1; i <= n; ++i)
      if (BooleanFunction::input_bit(static_cast<int>(coset[c]), i, n)) slot[pos++] = i;
    if (pos > k) throw Error("coset member has weight above the radius");
    for (; pos < k; ++pos) slot[pos] = 0;
    slots[c] = slot;
  }
  auto flat_of_regs = [&](const std::array<int, 16>& regs) {
    // registers (r_1..r_k): r_1 in H_in, the rest base-(n+1) in H_work
    int a = 0;
    for (int j = 1; j < k; ++j) a = a * din + regs[j];
    return alg.flat_index(regs[0], a, 0);
  };

  const double amp = 1.0 / std::sqrt(static_cast<double>(csize));

  // U_0: load the uniform superposition of slot states. A Householder
  // reflection avoids a dense completion at these dimensions.
  Eigen::VectorXcd start = Eigen::VectorXcd::Zero(dim);
  for (int c = 0; c < csize; ++c) start[flat_of_regs(slots[c])] = amp;
  {
    Eigen::VectorXcd v = -start;
    v[0] += 1.0;
    Eigen::MatrixXcd u0 = Eigen::MatrixXcd::Identity(dim, dim);
    double vv = v.squaredNorm();
    if (vv > 1e-24) u0 -= (2.0 / vv) * v * v.adjoint();
    alg.unitaries.push_back(std::move(u0));
  }

  // U_1..U_{k-1}: cyclic rotation of the k query registers, bringing the
  // next slot into H_in.
  auto decode = [&](int in, int a) {
    std::array<int, 16> regs{};
    regs[0] = in;
    for (int j = k - 1; j >= 1; --j) {
      regs[j] = a % din;
      a /= din;
    }
    return regs;
  };
  auto rotate = [&](std::array<int, 16> regs) {
    std::array<int, 16> out{};
    for (int j = 0; j < k; ++j) out[j] = regs[(j + 1) % k];
    return out;
  };
  if (k > 1) {
    Eigen::MatrixXcd rot = Eigen::MatrixXcd::Zero(dim, dim);
    for (int in = 0; in < din; ++in)
      for (int a = 0; a < dwork; ++a) {
        auto shifted = rotate(decode(in, a));
        int src0 = alg.flat_index(in, a, 0);
        int dst0 = flat_of_regs(shifted);
        rot(dst0, src0) = 1.0;
        rot(dst0 + 1, src0 + 1) = 1.0;
      }
    for (int j = 1; j < k; ++j) alg.unitaries.push_back(rot);
  }

  // After k oracle rounds with k-1 rotations the registers carry a fixed
  // cyclic shift of the original slots; fold the Hadamard-and-evaluate
  // step into the last unitary by matching Gram data. Inputs in the same
  // coset of S_f give the same state up to sign; distinct cosets give
  // orthogonal states, so each coset maps to its own marker state tagged
  // with f's value.
  std::vector<int> final_pos(csize);
  for (int c = 0; c < csize; ++c) {
    std::array<int, 16> regs = slots[c];
    for (int r = 0; r + 1 < k; ++r) regs = rotate(regs);
    final_pos[c] = flat_of_regs(regs);
  }

  const int inputs = f.table_size();
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(dim, inputs);
  for (int x = 0; x < inputs; ++x)
    for (int c = 0; c < csize; ++c) {
      double sign = (popcount(coset[c] & static_cast<std::uint32_t>(x)) & 1) ? -1.0 : 1.0;
      phi(final_pos[c], x) = sign * amp;
    }
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(dim, inputs);
  std::map<std::uint32_t, int> coset_marker;  // coset of S_f -> marker index
  Subspace sf = invariance_subspace(f);
  for (int x = 0; x < inputs; ++x) {
    std::uint32_t key = *std::min_element(
        sf.members().begin(), sf.members().end(), [&](std::uint32_t a, std::uint32_t b) {
          return (a ^ static_cast<std::uint32_t>(x)) < (b ^ static_cast<std::uint32_t>(x));
        });
    key ^= static_cast<std::uint32_t>(x);
    auto [it, fresh] = coset_marker.try_emplace(key, static_cast<int>(coset_marker.size()));
    int marker = it->second;
    (void)fresh;
    double sign = phi.col(static_cast<int>(key)).dot(phi.col(x)) >= 0 ? 1.0 : -1.0;
    psi(2 * marker + (f.value_at(x) ? 1 : 0), x) = sign;
  }
  alg.unitaries.push_back(
      linalg::transition_unitary(psi, phi, 1e-9).cast<std::complex<double>>());
  return alg;
}

}  // namespace exactq::na
