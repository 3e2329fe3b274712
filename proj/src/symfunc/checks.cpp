#include "gwadams/poly_json.hpp"
#include "gwadams/symfunc.hpp"

namespace gwadams::sym {

using poly::Monomial;
using poly::VarContext;
using poly::VarId;

namespace {

nlohmann::json pj(const MultiPoly& p) { return poly::to_text(p); }

// X_1 -> x, X_2 -> 1, X_k -> 0 for k > 2 (the elementary symmetric values of a, 1/a).
void bind_ell(std::map<std::string, MultiPoly>& bind, const std::string& prefix, const ContextPtr& src,
              const MultiPoly& x) {
  for (const auto& v : src->vars()) {
    if (v.name.rfind(prefix, 0) != 0) continue;
    const int k = std::stoi(v.name.substr(prefix.size()));
    if (k == 1) bind.emplace(v.name, x);
    else if (k == 2) bind.emplace(v.name, x.one());
    else bind.emplace(v.name, x.zero());
  }
}

bool uses_only(const MultiPoly& p, const ContextPtr& target) {
  const auto& ctx = *p.context();
  for (std::size_t v = 0; v < ctx.size(); ++v) {
    if (target->index_of(ctx.var(v).name)) continue;
    for (const auto& t : p.terms())
      if (t.mono.exps[v] != 0) return false;
  }
  return true;
}

void stability(VerificationReport& r, const std::string& lemma, std::vector<Param> params, const MultiPoly& small,
               const MultiPoly& big) {
  const bool ok = uses_only(big, small.context()) && restrict_to(big, small.context()) == small;
  r.add(lemma, std::move(params), ok, pj(small), pj(restrict_to(big, small.context())));
}

// Laurent ring in the given unit names plus t, for the pi-polynomial route.
ContextPtr laurent_ctx(const std::vector<std::string>& units) {
  std::vector<VarId> vars{{"t", false}};
  for (const auto& u : units) vars.push_back({u, true});
  return VarContext::make(vars);
}

// prod over sign choices of (1 + t * prod_k units[k]^{+-1}).
MultiPoly pi_poly(const ContextPtr& ctx, const std::vector<std::string>& units) {
  MultiPoly acc = MultiPoly::constant(ctx, 1);
  const std::size_t r = units.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
    Monomial m{std::vector<std::int32_t>(ctx->size(), 0)};
    m.exps[ctx->require("t")] = 1;
    for (std::size_t k = 0; k < r; ++k) m.exps[ctx->require(units[k])] = (mask >> k) & 1U ? -1 : 1;
    acc *= acc.one() + MultiPoly::monomial(ctx, std::move(m));
  }
  return acc;
}

MultiPoly t_coeff(const MultiPoly& p, int n) {
  const auto& ctx = p.context();
  const std::size_t ti = ctx->require("t");
  std::vector<poly::Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono.exps[ti] != n) continue;
    poly::Term c = t;
    c.mono.exps[ti] = 0;
    out.push_back(std::move(c));
  }
  return MultiPoly::from_terms(ctx, std::move(out));
}

// a + 1/a in the Laurent context.
MultiPoly ell_value(const ContextPtr& ctx, const std::string& unit) {
  return MultiPoly::variable(ctx, unit) + MultiPoly::variable(ctx, unit, -1);
}

MultiPoly rxy_expected(int n, const MultiPoly& x, const MultiPoly& y) {
  switch (n) {
    case 0: case 4: return x.one();
    case 1: case 3: return x * y;
    case 2: return x * x + y * y - x.one() * Integer(2);
    default: return x.zero();
  }
}

MultiPoly rabc_expected(int n, const MultiPoly& x, const MultiPoly& y, const MultiPoly& z) {
  const MultiPoly one = x.one();
  const MultiPoly x2 = x * x, y2 = y * y, z2 = z * z;
  switch (n) {
    case 0: case 8: return one;
    case 1: case 7: return x * y * z;
    case 2: case 6: return x2 * y2 + x2 * z2 + y2 * z2 - Integer(2) * (x2 + y2 + z2) + Integer(4) * one;
    case 3: case 5: return x2 * x * y * z + x * y2 * y * z + x * y * z2 * z - Integer(5) * x * y * z;
    case 4: return x2 * x2 + y2 * y2 + z2 * z2 + x2 * y2 * z2 - Integer(4) * (x2 + y2 + z2) + Integer(6) * one;
    default: return x.zero();
  }
}

MultiPoly rz_expected(int i, int j, const MultiPoly& x) {
  if (j == 1) {
    if (i == 0) return x.one();
    if (i == 1) return x;
    if (i == 2) return x.one();
    return x.zero();
  }
  if (i == 0 || (i == 1 && j == 2)) return x.one();
  return x.zero();
}

// Round trip of a P/Q/R reduction: re-expanding at sigma values recovers the product coefficient.
bool p_roundtrip(int n) {
  auto uv = family_context({{"U", n}, {"V", n}});
  std::vector<MultiPoly> c(n + 1, MultiPoly(uv));
  c[0] = MultiPoly::constant(uv, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      MultiPoly m = MultiPoly::variable(uv, "U" + std::to_string(i)) * MultiPoly::variable(uv, "V" + std::to_string(j));
      for (int k = n; k >= 1; --k) c[k] += c[k - 1] * m;
    }
  auto xyuv = family_context({{"X", n}, {"Y", n}, {"U", n}, {"V", n}});
  MultiPoly p = poly::embed(P_restricted(n, n, n), xyuv);
  p = expand_elementary(p, family("X", n), family("U", n), xyuv);
  p = expand_elementary(p, family("Y", n), family("V", n), xyuv);
  return restrict_to(p, uv) == c[n];
}

}  // namespace

VerificationReport check_appendix_a(int max_n) {
  VerificationReport r;
  r.suite = "appendix-a";
  auto xc = VarContext::make(std::vector<std::string>{"x"});
  const MultiPoly x = MultiPoly::variable(xc, "x");
  // lambda_dim1: Q_{i,j}(x, 0, ...) is x for i = j = 1, 1 for i = 0, else 0.
  for (int i = 0; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i * j > 6 || (i == 0 && j > 2)) continue;
      UniversalPoly q = universal_Q(i, j);
      std::map<std::string, MultiPoly> bind;
      for (const auto& v : q.value.context()->vars()) bind.emplace(v.name, v.name == "X1" ? x : x.zero());
      MultiPoly got = poly::substitute(q.value, bind, xc);
      MultiPoly want = i == 0 ? x.one() : (i == 1 && j == 1 ? x : x.zero());
      r.add("lambda_dim1", {long(i), long(j)}, got == want, pj(got), pj(want));
    }
  // product_dim1: P_n(f_1..f_n, x, 0, ...) = f_n x^n.
  for (int n = 1; n <= max_n; ++n) {
    auto fc = family_context({{"f", n}});
    std::vector<poly::VarId> vars = fc->vars();
    vars.push_back({"x", false});
    auto fx = VarContext::make(vars);
    UniversalPoly p = universal_P(n);
    std::map<std::string, MultiPoly> bind;
    for (int k = 1; k <= n; ++k) {
      bind.emplace("X" + std::to_string(k), MultiPoly::variable(fx, "f" + std::to_string(k)));
      bind.emplace("Y" + std::to_string(k), k == 1 ? MultiPoly::variable(fx, "x") : MultiPoly(fx));
    }
    MultiPoly got = poly::substitute(p.value, bind, fx);
    MultiPoly want = MultiPoly::variable(fx, "f" + std::to_string(n)) * MultiPoly::variable(fx, "x").pow(n);
    r.add("product_dim1", {long(n)}, got == want, pj(got), pj(want));
  }
  r.sort();
  return r;
}

VerificationReport check_appendix_b(const AppendixBOptions& opts) {
  VerificationReport r;
  r.suite = "appendix-b";
  const int N = opts.max_n;

  // Arity stability and reduction round trips.
  for (int n = 0; n <= N; ++n) {
    stability(r, "P_stability", {long(n)}, P_restricted(n, n, n), P_restricted(n, n + 1, n + 1));
    r.add("P_roundtrip", {long(n)}, p_roundtrip(n));
  }
  for (int i = 0; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i * j > 6 || (i == 0 && j > 1)) continue;
      stability(r, "Q_stability", {long(i), long(j)}, Q_restricted(i, j, i * j), Q_restricted(i, j, i * j + 1));
    }
  for (int n = 0; n <= std::min(N, 3); ++n)
    stability(r, "R_stability", {long(n)}, R_direct(n, n, n, n), R_direct(n, n + 1, n + 1, n + 1));
  for (int n = 0; n <= N; ++n)
    stability(r, "R_stability_composed", {long(n)}, R_composed(n, n, n, n), R_composed(n, n + 1, n + 1, n + 1));

  // Lemma R_P: direct and composed R_n agree.
  for (int n = 0; n <= std::min(N, opts.r4_direct ? 4 : 3); ++n) {
    MultiPoly d = R_direct(n, n, n, n), c = R_composed(n, n, n, n);
    r.add("R_P", {long(n)}, d == c, pj(d), pj(c));
  }

  auto xyz = VarContext::make(std::vector<std::string>{"x", "y", "z"});
  const MultiPoly x = MultiPoly::variable(xyz, "x"), y = MultiPoly::variable(xyz, "y"),
                  z = MultiPoly::variable(xyz, "z");

  auto lab = laurent_ctx({"a", "b", "c"});
  const MultiPoly xa = ell_value(lab, "a"), yb = ell_value(lab, "b"), zc = ell_value(lab, "c");
  const MultiPoly pi_a = pi_poly(lab, {"a"}), pi_ab = pi_poly(lab, {"a", "b"}), pi_abc = pi_poly(lab, {"a", "b", "c"});

  // Lemma RXY, through the universal polynomial and through pi_{a,b}.
  for (int n = 0; n <= 6; ++n) {
    MultiPoly p = n <= N ? universal_P(n).value : P_restricted(n, 2, 2);
    std::map<std::string, MultiPoly> bind;
    bind_ell(bind, "X", p.context(), x);
    bind_ell(bind, "Y", p.context(), y);
    MultiPoly got = poly::substitute(p, bind, xyz);
    MultiPoly want = rxy_expected(n, x, y);
    r.add("RXY", {long(n)}, got == want, pj(got), pj(want));
    MultiPoly via_pi = t_coeff(pi_ab, n), want_pi = rxy_expected(n, xa, yb);
    r.add("RXY_pi", {long(n)}, via_pi == want_pi, pj(via_pi), pj(want_pi));
  }

  // Lemma RB: P_n(r, ell(B)) - B^n r_n has degree < n in B.
  for (int n = 1; n <= N; ++n) {
    auto rb = family_context({{"r", n}});
    std::vector<VarId> vars = rb->vars();
    vars.push_back({"B", false});
    auto ctx = VarContext::make(vars);
    MultiPoly B = MultiPoly::variable(ctx, "B");
    UniversalPoly p = universal_P(n);
    std::map<std::string, MultiPoly> bind;
    for (int k = 1; k <= n; ++k) bind.emplace("X" + std::to_string(k), MultiPoly::variable(ctx, "r" + std::to_string(k)));
    bind_ell(bind, "Y", p.value.context(), B);
    MultiPoly diff = poly::substitute(p.value, bind, ctx) - B.pow(n) * MultiPoly::variable(ctx, "r" + std::to_string(n));
    const int deg = diff.is_zero() ? 0 : diff.degree_in(ctx->require("B"));
    r.add("RB", {long(n)}, deg <= n - 1, pj(diff), "deg_B <= " + std::to_string(n - 1));
  }

  // Lemma RZ, through Q_{i,j} and through the subsets of {a, 1/a}.
  auto xc = VarContext::make(std::vector<std::string>{"x"});
  const MultiPoly xx = MultiPoly::variable(xc, "x");
  for (int i = 0; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i * j > 6 || (i == 0 && j > 2)) continue;
      UniversalPoly q = universal_Q(i, j);
      std::map<std::string, MultiPoly> bind;
      bind_ell(bind, "X", q.value.context(), xx);
      MultiPoly got = poly::substitute(q.value, bind, xc);
      MultiPoly want = rz_expected(i, j, xx);
      r.add("RZ", {long(i), long(j)}, got == want, pj(got), pj(want));
      MultiPoly w_prod = MultiPoly::constant(lab, 1);
      const MultiPoly t = MultiPoly::variable(lab, "t");
      if (j == 1) w_prod = pi_a;
      else if (j == 2) w_prod = w_prod + t;  // a * 1/a
      MultiPoly via = t_coeff(w_prod, i), want_pi = rz_expected(i, j, xa);
      r.add("RZ_pi", {long(i), long(j)}, via == want_pi, pj(via), pj(want_pi));
    }

  // Lemma R_abc, through R_n (composed, universal up to N) and through pi_{a,b,c}.
  for (int n = 0; n <= 9; ++n) {
    MultiPoly rn = n <= N ? universal_R(n, RMethod::composed).value : R_composed(n, 2, 2, 2);
    std::map<std::string, MultiPoly> bind;
    bind_ell(bind, "X", rn.context(), x);
    bind_ell(bind, "Y", rn.context(), y);
    bind_ell(bind, "Z", rn.context(), z);
    MultiPoly got = poly::substitute(rn, bind, xyz);
    MultiPoly want = rabc_expected(n, x, y, z);
    r.add("R_abc", {long(n)}, got == want, pj(got), pj(want));
    MultiPoly via = t_coeff(pi_abc, n), want_pi = rabc_expected(n, xa, yb, zc);
    r.add("R_abc_pi", {long(n)}, via == want_pi, pj(via), pj(want_pi));
  }

  // pi recursion: pi_{a_1..a_r}(t) = pi_{a_1..a_{r-1}}(t a_r) pi_{a_1..a_{r-1}}(t / a_r).
  const std::vector<std::string> units{"a", "b", "c"};
  for (std::size_t rr = 1; rr <= units.size(); ++rr) {
    std::vector<std::string> head(units.begin(), units.begin() + rr - 1);
    MultiPoly prev = pi_poly(lab, head);
    const MultiPoly t = MultiPoly::variable(lab, "t"), ar = MultiPoly::variable(lab, units[rr - 1]),
                    ar_inv = MultiPoly::variable(lab, units[rr - 1], -1);
    MultiPoly rhs = poly::substitute(prev, {{"t", t * ar}}, lab) * poly::substitute(prev, {{"t", t * ar_inv}}, lab);
    MultiPoly lhs = pi_poly(lab, std::vector<std::string>(units.begin(), units.begin() + rr));
    r.add("pi_rec", {long(rr)}, lhs == rhs, pj(lhs), pj(rhs));
  }

  r.sort();
  return r;
}

}  // namespace gwadams::sym
