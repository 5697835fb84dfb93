#pragma once

#include <Eigen/Dense>

#include "exactq/query_algorithm.hpp"
#include "exactq/sdp.hpp"

namespace exactq::extract {

// Mechanical extraction of an explicit algorithm from a solution of the
// query SDP: the state after j queries on input x is built from the PSD
// square roots of the solution blocks, consecutive state families have
// equal Gram matrices by the SDP constraints, and each unitary comes from
// the polar-isometry construction. With reduce_rank the workspace shrinks
// to the largest factor rank across all blocks instead of 2^n.
QueryAlgorithm extract_algorithm(const sdp::SdpSolution& sol, bool reduce_rank = false);

// Pr[output = f(x)] for every input, by simulation.
Eigen::VectorXd success_profile(const QueryAlgorithm& alg, const boolfn::BooleanFunction& f);

}  // namespace exactq::extract
