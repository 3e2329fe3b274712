#pragma once

// Topological K-theory side: Z[beta^{+-1}][c_1..c_k] with lambda_t(c_i) = 1 + c_i t + beta^4 t^2,
// reached from the symbolic GW ring by the forgetful map.

#include "gwadams/lambda.hpp"
#include "gwadams/series.hpp"

namespace gwadams::kth {

using poly::ContextPtr;
using poly::MultiPoly;

/// Variables beta (Laurent), c1..ck (or another prefix).
ContextPtr k_context(int k, const std::string& prefix = "c");

/// eps -> -1, tau -> 2 beta^2, gamma -> beta^4, u_i -> c_i (prefix as in the context).
MultiPoly forget(const lambda::SymClass& x, const ContextPtr& ctx, const std::string& prefix = "c");

/// beta -> 1, c_i -> 2.
poly::Integer rank(const MultiPoly& x);

poly::PolySeries lambda_t(const MultiPoly& x, int N);
std::vector<MultiPoly> adams_all(int N, const MultiPoly& x);
MultiPoly adams(int n, const MultiPoly& x);

}  // namespace gwadams::kth
