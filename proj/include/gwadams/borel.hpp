#pragma once

// omega(n), Borel classes, lambda of a threefold product and the ternary laws.

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gwadams/lambda.hpp"
#include "gwadams/report.hpp"

namespace gwadams::borel {

using gw::GWElem;
using lambda::SymClass;
using poly::MultiPoly;

enum class OmegaMethod { recursive, closed_form };

/// omega(n) with psi^n(u - tau) = omega(n) (u - tau); degree 2n - 2.
GWElem omega(int n, OmegaMethod method = OmegaMethod::recursive);

/// psi^n(u - tau) in the quotient ring, split along the basis {1, u - tau}.
struct QuotientSplit {
  GWElem constant;  // the coefficient of 1
  GWElem linear;    // the coefficient of u - tau
};
QuotientSplit psi_u_minus_tau(int n);

VerificationReport check_omega_laws(int max_m = 5, int max_n = 5);

/// sigma_i(e_1 - tau, ..., e_k - tau) over k generators.
SymClass borel_sum_classes(int k, int i);

/// The Borel class b_i of a rank-8 class written through its lambda-operations:
/// L[0] = 1, L[k] = lambda^k(e). Works over any ring R with the constants supplied.
template <class R>
R borel_formula(int i, const std::vector<R>& L, const R& tau, const R& gamma, const R& eps) {
  const R one = L.at(0);
  switch (i) {
    case 1: return L[1] - tau * poly::Integer(4);
    case 2: return L[2] - tau * L[1] * poly::Integer(3) + (one * poly::Integer(8) - eps * poly::Integer(12)) * gamma;
    case 3:
      return L[3] - tau * L[2] * poly::Integer(2) + (one * poly::Integer(3) - eps * poly::Integer(6)) * gamma * L[1] -
             tau * gamma * poly::Integer(8);
    case 4:
      return L[4] - tau * L[3] - eps * gamma * L[2] * poly::Integer(2) - tau * gamma * L[1] +
             gamma * gamma * poly::Integer(2);
    default: throw IndexError("Borel class index must be 1..4");
  }
}

VerificationReport check_borel_prop();

/// lambda^i(u1 u2 u3) via R_n(lambda(u1), lambda(u2), lambda(u3)).
SymClass lambda_triple_product(int i);
/// The closed form for i <= 4.
SymClass explicit3fold(int i);

enum class Theory { gw, k, witt };
std::string to_string(Theory t);
Theory theory_from_string(const std::string& s);

/// A law F_i in v1, v2, v3 (gw and witt use `sym`, k uses `k` over beta, v1, v2, v3).
struct TernaryLaw {
  int index = 0;
  Theory theory = Theory::gw;
  SymClass sym{3};
  MultiPoly k{poly::VarContext::make(std::vector<std::string>{})};
};

/// Computed laws F_1..F_4.
std::vector<TernaryLaw> ternary_laws(Theory t);
/// The laws as displayed in the published theorems (Witt: the gw display specialized).
std::vector<TernaryLaw> displayed_laws(Theory t);
/// b_i(E1 x E2 x E3) in u1, u2, u3, before substituting u_j = v_j + tau.
SymClass ternary_borel_class(int i);
SymClass displayed_ternary_borel_class(int i);

/// eps -> 1, tau -> 0.
GWElem witt_specialize(const GWElem& x);

/// sigma-notation: orbit sums sigma(v1^2 v2), singleton orbits written plainly.
std::string to_text(const TernaryLaw& f);
std::string to_latex(const TernaryLaw& f);
nlohmann::json to_json(const TernaryLaw& f);
/// sigma-notation for a symmetric class in three generators, with letter u or v.
std::string sigma_text(const SymClass& x, const std::string& letter);
std::string sigma_latex(const SymClass& x, const std::string& letter);

VerificationReport check_triple_product(int max_i = 8);
VerificationReport check_ternary();

}  // namespace gwadams::borel
