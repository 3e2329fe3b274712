#pragma once

// Symmetric functions and the universal polynomials P_n, Q_{i,j}, R_n.

#include <string>
#include <vector>

#include "gwadams/polyring.hpp"
#include "gwadams/report.hpp"

namespace gwadams::sym {

using poly::ContextPtr;
using poly::Integer;
using poly::MultiPoly;

/// Variable names prefix1..prefixm.
std::vector<std::string> family(const std::string& prefix, int m);

/// Context of several variable families, declared in order (all polynomial).
ContextPtr family_context(const std::vector<std::pair<std::string, int>>& families);

/// sigma_n(U_1..U_m) in the context U1..Um.
MultiPoly elementary(int m, int n);

/// Rewrites p, symmetric in `sym_vars`, as a polynomial in `targets`
/// (targets[k-1] standing for sigma_k). The other variables of p ride along as
/// coefficients and must exist by name in `target_ctx`. Throws SymmetryError
/// naming a transposition that moves p.
MultiPoly symmetric_reduce(const MultiPoly& p, const std::vector<std::string>& sym_vars,
                           const std::vector<std::string>& targets, const ContextPtr& target_ctx);

/// Single-family form: p over U1..Um, result over X1..Xm.
MultiPoly symmetric_reduce(const MultiPoly& p);

/// Substitutes X_k = sigma_k(U) back (the inverse of the single-family reduce).
MultiPoly expand_elementary(const MultiPoly& q, const std::vector<std::string>& targets,
                            const std::vector<std::string>& sym_vars, const ContextPtr& ctx);

/// Drops the variables of p missing from `target` by sending them to 0.
MultiPoly restrict_to(const MultiPoly& p, const ContextPtr& target);

enum class Kind { P, Q, R };

struct UniversalPoly {
  Kind kind;
  std::vector<int> indices;
  MultiPoly value;
  int arity_used;
};

// Restricted-arity forms. P(n, a, b) is P_n with X_k = 0 for k > a and
// Y_k = 0 for k > b, living over X1..Xa, Y1..Yb. Evaluating P_n at
// arguments whose entries vanish past a and b therefore only needs P(n, a, b).
MultiPoly P_restricted(int n, int a, int b);
/// Q_{i,j} with X_k = 0 for k > a, over X1..Xa.
MultiPoly Q_restricted(int i, int j, int a);
/// R_n over X1..Xa, Y1..Yb, Z1..Zc by triple reduction.
MultiPoly R_direct(int n, int a, int b, int c);
/// R_n over X1..Xa, Y1..Yb, Z1..Zc as P_n(X, P_1(Y,Z), ..., P_n(Y,Z)).
MultiPoly R_composed(int n, int a, int b, int c);

enum class RMethod { direct, composed };

/// Universal polynomials at arity m = n (resp. ij); results are cached.
UniversalPoly universal_P(int n);
UniversalPoly universal_Q(int i, int j);
UniversalPoly universal_R(int n, RMethod method);

/// Persistent cache path taken from GWADAMS_CACHE (empty disables it).
void set_cache_path(const std::string& path);
void clear_memory_cache();

struct AppendixBOptions {
  int max_n = 4;
  bool r4_direct = false;
};

VerificationReport check_appendix_b(const AppendixBOptions& opts = {});
/// Lemmas lambda_dim1 and product_dim1 (the Appendix A half).
VerificationReport check_appendix_a(int max_n = 4);

}  // namespace gwadams::sym
