#include "gwadams/ktheory.hpp"

#include "gwadams/symfunc.hpp"

namespace gwadams::kth {

using poly::Integer;
using poly::PolySeries;

ContextPtr k_context(int k, const std::string& prefix) {
  std::vector<poly::VarId> vars{{"beta", true}};
  for (int i = 1; i <= k; ++i) vars.push_back({prefix + std::to_string(i), false});
  return poly::VarContext::make(vars);
}

MultiPoly forget(const lambda::SymClass& x, const ContextPtr& ctx, const std::string& prefix) {
  if (static_cast<int>(ctx->size()) != x.generators() + 1) throw ContextError("forget: context has the wrong size");
  MultiPoly out(ctx);
  for (const auto& [e, c] : x.terms()) {
    MultiPoly cp(ctx);
    for (const auto& [d, t] : c.slots()) {
      cp += MultiPoly::variable(ctx, "beta", 4 * d) * Integer(t.a - t.b);
      cp += MultiPoly::variable(ctx, "beta", 4 * d + 2) * Integer(2 * t.c);
    }
    for (int i = 0; i < x.generators(); ++i)
      if (e[i]) cp *= MultiPoly::variable(ctx, prefix + std::to_string(i + 1), e[i]);
    out += cp;
  }
  return out;
}

Integer rank(const MultiPoly& x) {
  Integer r = 0;
  for (const auto& t : x.terms()) {
    Integer f = t.coeff;
    for (std::size_t v = 1; v < t.mono.exps.size(); ++v) f <<= t.mono.exps[v];
    r += f;
  }
  return r;
}

namespace {

int top_index(const PolySeries& f) {
  for (int n = f.order(); n > 0; --n)
    if (!f[n].is_zero()) return n;
  return 0;
}

PolySeries product(const PolySeries& f, const PolySeries& g) {
  const int N = std::min(f.order(), g.order());
  const int a = top_index(f), b = top_index(g);
  std::vector<MultiPoly> out{f.one()};
  for (int n = 1; n <= N; ++n) {
    const int ra = std::min(n, a), rb = std::min(n, b);
    if (!ra || !rb) {
      out.push_back(f.zero());
      continue;
    }
    std::vector<MultiPoly> vals;
    for (int i = 1; i <= ra; ++i) vals.push_back(f[i]);
    for (int i = 1; i <= rb; ++i) vals.push_back(g[i]);
    out.push_back(poly::evaluate<MultiPoly>(sym::P_restricted(n, ra, rb), vals, f.one()));
  }
  return PolySeries(std::move(out), N, f.one());
}

}  // namespace

PolySeries lambda_t(const MultiPoly& x, int N) {
  if (N < 1) throw OrderError("lambda_t: truncation order must be at least 1");
  const ContextPtr& ctx = x.context();
  const MultiPoly one = MultiPoly::constant(ctx, 1);
  const MultiPoly b4 = MultiPoly::variable(ctx, "beta", 4);
  PolySeries total = PolySeries::identity(N, one);
  for (const auto& t : x.terms()) {
    PolySeries s({one, one}, N, one);
    bool first = true;
    for (std::size_t v = 1; v < ctx->size(); ++v)
      for (int p = 0; p < t.mono.exps[v]; ++p) {
        PolySeries c({one, MultiPoly::variable(ctx, ctx->var(v).name), b4}, N, one);
        s = first ? c : product(s, c);
        first = false;
      }
    // lambda^n(beta^j y) = beta^{jn} lambda^n(y).
    const int j = t.mono.exps[0];
    std::vector<MultiPoly> tw;
    for (int n = 0; n <= N; ++n) tw.push_back(s[n] * MultiPoly::variable(ctx, "beta", j * n));
    s = PolySeries(std::move(tw), N, one);
    if (!t.coeff.fits_slong_p()) throw OrderError("lambda_t: multiplicity too large");
    total = poly::series_mul(total, poly::series_pow(s, t.coeff.get_si()));
  }
  return total;
}

std::vector<MultiPoly> adams_all(int N, const MultiPoly& x) {
  const MultiPoly one = MultiPoly::constant(x.context(), 1);
  std::vector<MultiPoly> psi{one * rank(x)};
  if (N == 0) return psi;
  const PolySeries L = lambda_t(x, N);
  for (int n = 1; n <= N; ++n) {
    MultiPoly acc = L[n] * Integer(n % 2 ? n : -n);
    for (int k = 1; k < n; ++k) {
      MultiPoly t = L[k] * psi[n - k];
      if (k % 2) acc += t;
      else acc -= t;
    }
    psi.push_back(std::move(acc));
  }
  return psi;
}

MultiPoly adams(int n, const MultiPoly& x) {
  if (n < 0) throw OrderError("adams: negative index");
  return adams_all(n, x)[n];
}

}  // namespace gwadams::kth
