#include "exactq/query_algorithm.hpp"

#include <nlohmann/json.hpp>

#include "exactq/linalg.hpp"

namespace exactq {

void QueryAlgorithm::validate(double tol) const {
  if (dim_out != 2) throw InvalidAlgorithmError("output register must be a qubit");
  if (static_cast<int>(unitaries.size()) != t + 1)
    throw InvalidAlgorithmError("expected t+1 unitaries");
  const int dim = total_dim();
  for (const auto& u : unitaries) {
    if (u.rows() != dim || u.cols() != dim)
      throw InvalidAlgorithmError("unitary dimension mismatch");
    if (!linalg::is_unitary(u, tol))
      throw InvalidAlgorithmError("matrix is not unitary within tolerance");
  }
}

std::string to_json(const QueryAlgorithm& alg) {
  nlohmann::json j;
  j["t"] = alg.t;
  j["dims"] = {alg.dim_in, alg.dim_work, alg.dim_out};
  nlohmann::json us = nlohmann::json::array();
  for (const auto& u : alg.unitaries) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < u.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < u.cols(); ++c)
        row.push_back(nlohmann::json::array({u(r, c).real(), u(r, c).imag()}));
      rows.push_back(std::move(row));
    }
    us.push_back(std::move(rows));
  }
  j["unitaries"] = std::move(us);
  return j.dump();
}

QueryAlgorithm algorithm_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SerializationError("bad query algorithm JSON");
  QueryAlgorithm alg;
  alg.t = j.at("t").get<int>();
  auto dims = j.at("dims");
  alg.dim_in = dims.at(0).get<int>();
  alg.dim_work = dims.at(1).get<int>();
  alg.dim_out = dims.at(2).get<int>();
  for (const auto& mat : j.at("unitaries")) {
    int rows = static_cast<int>(mat.size());
    Eigen::MatrixXcd u(rows, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < rows; ++c)
        u(r, c) = std::complex<double>(mat[r][c][0].get<double>(), mat[r][c][1].get<double>());
    alg.unitaries.push_back(std::move(u));
  }
  return alg;
}

}  // namespace exactq
