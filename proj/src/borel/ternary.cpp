#include <algorithm>
#include <numeric>

#include "gwadams/borel.hpp"
#include "gwadams/ktheory.hpp"
#include "gwadams/poly_json.hpp"
#include "gwadams/symfunc.hpp"

namespace gwadams::borel {

using poly::Integer;
using Rep = std::array<int, 3>;

namespace {

const GWElem kOne = GWElem::one(), kEps = GWElem::eps(), kTau = GWElem::tau();
const GWElem kH = GWElem::one() - GWElem::eps();

SymClass con(const GWElem& c) { return SymClass::constant(c, 3); }

std::vector<Rep> orbit(Rep rep) {
  std::sort(rep.begin(), rep.end());
  std::vector<Rep> out;
  do out.push_back(rep);
  while (std::next_permutation(rep.begin(), rep.end()));
  return out;
}

SymClass orbit_sum(const Rep& rep) {
  SymClass s(3);
  for (const auto& e : orbit(rep)) {
    SymClass m = con(kOne);
    for (int i = 0; i < 3; ++i)
      for (int p = 0; p < e[i]; ++p) m *= SymClass::u(i + 1, 3);
    s += m;
  }
  return s;
}

MultiPoly orbit_sum_k(const Rep& rep, const poly::ContextPtr& ctx) {
  MultiPoly s(ctx);
  for (const auto& e : orbit(rep)) {
    poly::Monomial m{{0, e[0], e[1], e[2]}};
    s += MultiPoly::monomial(ctx, m);
  }
  return s;
}

struct GWTerm {
  GWElem coeff;
  Rep rep;
};
struct KTerm {
  long c;
  int beta;
  Rep rep;
};

SymClass build(const std::vector<GWTerm>& terms) {
  SymClass s(3);
  for (const auto& t : terms) s += t.coeff * orbit_sum(t.rep);
  return s;
}

MultiPoly build_k(const std::vector<KTerm>& terms, const poly::ContextPtr& ctx) {
  MultiPoly s(ctx);
  for (const auto& t : terms) s += MultiPoly::variable(ctx, "beta", t.beta) * orbit_sum_k(t.rep, ctx) * Integer(t.c);
  return s;
}

GWElem gi(int k) { return GWElem::gamma(k); }
GWElem n(long c) { return GWElem::integer(c); }

// Published displays, term by term (coefficient, orbit representative).
std::vector<GWTerm> gw_display(int i) {
  const GWElem tg = kTau.shift(-1);
  switch (i) {
    case 1: return {{kH * Integer(2), {1, 0, 0}}, {tg, {1, 1, 0}}, {gi(-1), {1, 1, 1}}};
    case 2:
      return {{(kOne - kEps * Integer(2)) * Integer(2), {2, 0, 0}},
              {kH * Integer(2), {1, 1, 0}},
              {tg * Integer(2), {2, 1, 0}},
              {tg * Integer(-3), {1, 1, 1}},
              {gi(-1), {2, 2, 0}}};
    case 3:
      return {{kH * Integer(2), {3, 0, 0}},
              {kH * Integer(-2), {2, 1, 0}},
              {(n(2) - kEps * Integer(3)) * Integer(8), {1, 1, 1}},
              {tg, {3, 1, 0}},
              {tg * Integer(-2), {2, 2, 0}},
              {tg * Integer(3), {2, 1, 1}},
              {gi(-1), {3, 1, 1}}};
    case 4:
      return {{kOne, {4, 0, 0}},
              {kH * Integer(-2), {3, 1, 0}},
              {(kOne - kEps * Integer(2)) * Integer(2), {2, 2, 0}},
              {kH * Integer(2), {2, 1, 1}},
              {-tg, {3, 1, 1}},
              {tg * Integer(2), {2, 2, 1}},
              {gi(-1), {2, 2, 2}}};
    default: throw IndexError("ternary law index must be 1..4");
  }
}

std::vector<KTerm> k_display(int i) {
  switch (i) {
    case 1: return {{4, 0, {1, 0, 0}}, {2, -2, {1, 1, 0}}, {1, -4, {1, 1, 1}}};
    case 2: return {{6, 0, {2, 0, 0}}, {4, 0, {1, 1, 0}}, {4, -2, {2, 1, 0}}, {-6, -2, {1, 1, 1}}, {1, -4, {2, 2, 0}}};
    case 3:
      return {{4, 0, {3, 0, 0}},  {-4, 0, {2, 1, 0}}, {40, 0, {1, 1, 1}}, {2, -2, {3, 1, 0}},
              {-4, -2, {2, 2, 0}}, {6, -2, {2, 1, 1}}, {1, -4, {3, 1, 1}}};
    case 4:
      return {{1, 0, {4, 0, 0}},  {-4, 0, {3, 1, 0}}, {6, 0, {2, 2, 0}}, {4, 0, {2, 1, 1}},
              {-2, -2, {3, 1, 1}}, {4, -2, {2, 2, 1}}, {1, -4, {2, 2, 2}}};
    default: throw IndexError("ternary law index must be 1..4");
  }
}

// b_i(E1 x E2 x E3) in u1, u2, u3 as displayed.
std::vector<GWTerm> b_display(int i) {
  const GWElem tg = kTau.shift(-1);
  switch (i) {
    case 1: return {{gi(-1), {1, 1, 1}}, {kTau * Integer(-4), {0, 0, 0}}};
    case 2:
      return {{gi(-1), {2, 2, 0}}, {n(-2), {2, 0, 0}}, {tg * Integer(-3), {1, 1, 1}}, {(kH * Integer(12)).shift(1), {0, 0, 0}}};
    case 3:
      return {{gi(-1), {3, 1, 1}},
              {(kOne + kEps * Integer(3)) * Integer(-2), {1, 1, 1}},
              {tg * Integer(-2), {2, 2, 0}},
              {kTau * Integer(4), {2, 0, 0}},
              {kTau.shift(1) * Integer(-16), {0, 0, 0}}};
    case 4:
      return {{kOne, {4, 0, 0}},
              {gi(-1), {2, 2, 2}},
              {(kH * Integer(-4)).shift(1), {2, 0, 0}},
              {kEps * Integer(-2), {2, 2, 0}},
              {-tg, {3, 1, 1}},
              {kTau * Integer(4), {1, 1, 1}},
              {(kH * Integer(8)).shift(2), {0, 0, 0}}};
    default: throw IndexError("Borel class index must be 1..4");
  }
}

std::vector<GWTerm> explicit3fold_display(int i) {
  switch (i) {
    case 1: return {{kOne, {1, 1, 1}}};
    case 2: return {{gi(1), {2, 2, 0}}, {gi(2) * Integer(-2), {2, 0, 0}}, {gi(3) * Integer(4), {0, 0, 0}}};
    case 3: return {{gi(2), {3, 1, 1}}, {gi(3) * Integer(-5), {1, 1, 1}}};
    case 4:
      return {{gi(4), {4, 0, 0}}, {gi(3), {2, 2, 2}}, {gi(5) * Integer(-4), {2, 0, 0}}, {gi(6) * Integer(6), {0, 0, 0}}};
    default: throw IndexError("explicit3fold: closed form known for 1 <= i <= 4");
  }
}

poly::ContextPtr v_context() {
  static const auto ctx = kth::k_context(3, "v");
  return ctx;
}

}  // namespace

std::string to_string(Theory t) {
  switch (t) {
    case Theory::gw: return "gw";
    case Theory::k: return "k";
    case Theory::witt: return "witt";
  }
  return "?";
}

Theory theory_from_string(const std::string& s) {
  if (s == "gw") return Theory::gw;
  if (s == "k") return Theory::k;
  if (s == "witt") return Theory::witt;
  throw ParseError("unknown theory '" + s + "' (expected gw, k or witt)");
}

GWElem witt_specialize(const GWElem& x) {
  GWElem r;
  for (const auto& [k, t] : x.slots()) r += GWElem::make(t.a + t.b, 0, 0, k);
  return r;
}

SymClass lambda_triple_product(int i) {
  if (i < 0) throw OrderError("lambda_triple_product: negative index");
  if (i == 0) return con(kOne);
  const int a = std::min(i, 2);
  std::vector<SymClass> vals;
  for (int g = 1; g <= 3; ++g) {
    vals.push_back(SymClass::u(g, 3));
    if (a == 2) vals.push_back(con(GWElem::gamma()));
  }
  return poly::evaluate<SymClass>(sym::R_composed(i, a, a, a), vals, con(kOne));
}

SymClass explicit3fold(int i) { return build(explicit3fold_display(i)); }

SymClass ternary_borel_class(int i) {
  const SymClass e = GWElem::gamma(-1) * (SymClass::u(1, 3) * SymClass::u(2, 3) * SymClass::u(3, 3));
  const auto L = lambda::lambda_t(e, 4);
  return borel_formula<SymClass>(i, L.coeffs(), con(kTau), con(GWElem::gamma()), con(kEps));
}

SymClass displayed_ternary_borel_class(int i) { return build(b_display(i)); }

std::vector<TernaryLaw> ternary_laws(Theory t) {
  std::vector<TernaryLaw> out;
  if (t == Theory::k) {
    const auto cctx = kth::k_context(3, "c");
    const auto vctx = v_context();
    const MultiPoly beta2 = MultiPoly::variable(cctx, "beta", 2), beta4 = MultiPoly::variable(cctx, "beta", 4);
    MultiPoly e = MultiPoly::variable(cctx, "beta", -4);
    for (int g = 1; g <= 3; ++g) e *= MultiPoly::variable(cctx, "c" + std::to_string(g));
    const auto L = kth::lambda_t(e, 4);
    std::map<std::string, MultiPoly> shift{{"beta", MultiPoly::variable(vctx, "beta")}};
    for (int g = 1; g <= 3; ++g)
      shift.emplace("c" + std::to_string(g), MultiPoly::variable(vctx, "v" + std::to_string(g)) +
                                                 MultiPoly::variable(vctx, "beta", 2) * Integer(2));
    for (int i = 1; i <= 4; ++i) {
      const MultiPoly b =
          borel_formula<MultiPoly>(i, L.coeffs(), beta2 * Integer(2), beta4, MultiPoly::constant(cctx, -1));
      TernaryLaw f;
      f.index = i;
      f.theory = t;
      f.k = poly::substitute(b, shift, vctx);
      out.push_back(std::move(f));
    }
    return out;
  }
  std::vector<SymClass> shift;
  for (int g = 1; g <= 3; ++g) shift.push_back(SymClass::u(g, 3) + con(kTau));
  for (int i = 1; i <= 4; ++i) {
    TernaryLaw f;
    f.index = i;
    f.theory = t;
    f.sym = lambda::substitute_u(ternary_borel_class(i), shift);
    if (t == Theory::witt) f.sym = f.sym.map_coeffs(witt_specialize);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<TernaryLaw> displayed_laws(Theory t) {
  std::vector<TernaryLaw> out;
  for (int i = 1; i <= 4; ++i) {
    TernaryLaw f;
    f.index = i;
    f.theory = t;
    if (t == Theory::k) f.k = build_k(k_display(i), v_context());
    else f.sym = build(gw_display(i));
    if (t == Theory::witt) f.sym = f.sym.map_coeffs(witt_specialize);
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------- sigma rendering

namespace {

const char* kSup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string sup(long e) {
  std::string s = e < 0 ? "⁻" : "";
  for (char c : std::to_string(std::labs(e))) s += kSup[c - '0'];
  return s;
}

// value = scalar * inner; an empty inner stands for 1.
struct Coeff {
  Integer scalar;
  std::string inner;
  bool compound = false;
};

std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

Coeff gw_coeff(const GWElem& c, bool latex) {
  Integer g = 0;
  for (const auto& [k, t] : c.slots())
    for (const Integer* x : {&t.a, &t.b, &t.c}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x->get_mpz_t());
  GWElem q;
  for (const auto& [k, t] : c.slots()) q += GWElem::make(t.a / g, t.b / g, t.c / g, k);
  if (gw::to_text(q)[0] == '-') {
    q = -q;
    g = -g;
  }
  Coeff r{g, latex ? gw::to_latex(q) : strip_spaces(gw::to_pretty(q))};
  if (r.inner == "1") r.inner.clear();
  r.compound = latex ? r.inner.find(" + ") != std::string::npos || r.inner.find(" - ") != std::string::npos
                     : r.inner.find('+') != std::string::npos || r.inner.find('-', 1) != std::string::npos;
  return r;
}

// Coefficient of a K-theory law: a Laurent polynomial in beta.
Coeff k_coeff(const std::map<int, Integer>& c, bool latex) {
  Integer g = 0;
  for (const auto& [e, x] : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (c.rbegin()->second < 0) g = -g;
  std::string inner;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const Integer q = it->second / g;
    const Integer aq = abs(q);
    std::string t = aq == 1 && it->first != 0 ? "" : aq.get_str();
    if (it->first != 0) t += latex ? "\\beta^{" + std::to_string(it->first) + "}" : "β" + sup(it->first);
    inner += (it == c.rbegin() ? (q < 0 ? "-" : "") : (q < 0 ? "-" : "+")) + t;
  }
  Coeff r{g, inner};
  if (r.inner == "1") r.inner.clear();
  r.compound = c.size() > 1;
  return r;
}

std::string mono(const Rep& rep, const std::string& letter, bool latex) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (!rep[i]) continue;
    s += latex ? letter + "_" + std::to_string(i + 1) : letter + std::to_string(i + 1);
    if (rep[i] > 1) s += latex ? "^{" + std::to_string(rep[i]) + "}" : sup(rep[i]);
  }
  return s;
}

template <class C>
std::string render_sigma(const std::map<Rep, C>& terms, const std::string& letter, bool latex,
                         Coeff (*coeff)(const C&, bool)) {
  // Group by orbit, checking invariance.
  std::map<Rep, C> reps;
  for (const auto& [e, c] : terms) {
    Rep r = e;
    std::sort(r.begin(), r.end(), std::greater<>());
    for (const auto& p : orbit(r)) {
      auto it = terms.find(p);
      if (it == terms.end() || !(it->second == c))
        throw SymmetryError("not symmetric under permutations of " + letter + "1, " + letter + "2, " + letter + "3");
    }
    reps.emplace(r, c);
  }
  std::vector<std::pair<Rep, C>> order(reps.begin(), reps.end());
  auto deg = [](const Rep& r) { return r[0] + r[1] + r[2]; };
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    if (deg(a.first) != deg(b.first)) return deg(a.first) < deg(b.first);
    return a.first > b.first;
  });
  if (order.empty()) return "0";
  std::string out;
  for (const auto& [rep, c] : order) {
    const Coeff k = coeff(c, latex);
    std::string t = k.scalar == 1 ? "" : k.scalar == -1 ? "-" : k.scalar.get_str();
    t += k.compound ? (latex ? "\\left(" + k.inner + "\\right)" : "(" + k.inner + ")") : k.inner;
    const std::string m = mono(rep, letter, latex);
    const bool singleton = orbit(rep).size() == 1;
    if (m.empty()) {
      if (t.empty() || t == "-") t += "1";
    } else if (singleton) {
      t += (latex && !k.inner.empty() ? " " : "") + m;
    } else {
      t += latex ? (k.inner.empty() ? "" : " ") + std::string("\\sigma(") + m + ")" : "σ(" + m + ")";
    }
    if (out.empty()) out = t;
    else if (t[0] == '-') out += latex ? " - " + t.substr(1) : t;
    else out += latex ? " + " + t : "+" + t;
  }
  return out;
}

Coeff gw_coeff_text(const GWElem& c, bool latex) { return gw_coeff(c, latex); }
Coeff k_coeff_text(const std::map<int, Integer>& c, bool latex) { return k_coeff(c, latex); }

std::map<Rep, GWElem> sym_terms(const SymClass& x) {
  if (x.generators() != 3) throw ContextError("sigma notation needs three generators");
  std::map<Rep, GWElem> m;
  for (const auto& [e, c] : x.terms()) m.emplace(Rep{e[0], e[1], e[2]}, c);
  return m;
}

std::map<Rep, std::map<int, Integer>> k_terms(const MultiPoly& p) {
  std::map<Rep, std::map<int, Integer>> m;
  for (const auto& t : p.terms()) m[Rep{t.mono.exps[1], t.mono.exps[2], t.mono.exps[3]}][t.mono.exps[0]] = t.coeff;
  return m;
}

}  // namespace

std::string sigma_text(const SymClass& x, const std::string& letter) {
  return render_sigma<GWElem>(sym_terms(x), letter, false, gw_coeff_text);
}

std::string sigma_latex(const SymClass& x, const std::string& letter) {
  return render_sigma<GWElem>(sym_terms(x), letter, true, gw_coeff_text);
}

std::string to_text(const TernaryLaw& f) {
  if (f.theory == Theory::k) return render_sigma<std::map<int, Integer>>(k_terms(f.k), "v", false, k_coeff_text);
  return sigma_text(f.sym, "v");
}

std::string to_latex(const TernaryLaw& f) {
  if (f.theory == Theory::k) return render_sigma<std::map<int, Integer>>(k_terms(f.k), "v", true, k_coeff_text);
  return sigma_latex(f.sym, "v");
}

nlohmann::json to_json(const TernaryLaw& f) {
  return {{"theory", to_string(f.theory)},
          {"index", f.index},
          {"value", f.theory == Theory::k ? poly::to_json(f.k) : lambda::to_json(f.sym)},
          {"text", to_text(f)}};
}

// ---------------------------------------------------------------- checks

VerificationReport check_triple_product(int max_i) {
  VerificationReport r;
  r.suite = "triple-product";
  const SymClass x = SymClass::u(1, 3) * SymClass::u(2, 3) * SymClass::u(3, 3);
  const auto L = lambda::lambda_t(x, max_i);
  for (int i = 1; i <= max_i; ++i) {
    const SymClass via_r = lambda_triple_product(i);
    r.add("lambda_xyz", {long(i)}, via_r == L[i], lambda::to_text(via_r), lambda::to_text(L[i]));
    if (i <= 4) {
      const SymClass closed = explicit3fold(i);
      r.add("explicit3fold", {long(i)}, via_r == closed, sigma_text(via_r, "u"), sigma_text(closed, "u"));
    }
  }
  return r;
}

VerificationReport check_ternary() {
  VerificationReport r;
  r.suite = "ternary";
  r.append(check_triple_product(8));
  const auto gw_c = ternary_laws(Theory::gw), gw_d = displayed_laws(Theory::gw);
  const auto k_c = ternary_laws(Theory::k), k_d = displayed_laws(Theory::k);
  const auto w_c = ternary_laws(Theory::witt), w_d = displayed_laws(Theory::witt);
  auto txt = [](const TernaryLaw& f) {
    try {
      return to_text(f);
    } catch (const SymmetryError&) {
      return f.theory == Theory::k ? poly::to_text(f.k) : lambda::to_text(f.sym);
    }
  };
  const auto vctx = v_context();
  const auto plain = poly::VarContext::make(std::vector<std::string>{"v1", "v2", "v3"});
  std::map<std::string, MultiPoly> beta_one{{"beta", MultiPoly::constant(plain, 1)}};
  for (int g = 1; g <= 3; ++g) {
    const std::string v = "v" + std::to_string(g);
    beta_one.emplace(v, MultiPoly::variable(plain, v));
  }
  for (int i = 1; i <= 4; ++i) {
    const auto b = ternary_borel_class(i), bd = displayed_ternary_borel_class(i);
    r.add("ternary_b", {long(i)}, b == bd, sigma_text(b, "u"), sigma_text(bd, "u"));
    const auto& G = gw_c[i - 1];
    r.add("ternary_gw", {long(i)}, G.sym == gw_d[i - 1].sym, txt(G), txt(gw_d[i - 1]));
    r.add("ternary_k", {long(i)}, k_c[i - 1].k == k_d[i - 1].k, txt(k_c[i - 1]), txt(k_d[i - 1]));
    r.add("ternary_witt", {long(i)}, w_c[i - 1].sym == w_d[i - 1].sym, txt(w_c[i - 1]), txt(w_d[i - 1]));
    const MultiPoly fg = kth::forget(G.sym, vctx, "v");
    r.add("ternary_forget", {long(i)}, fg == k_d[i - 1].k, poly::to_text(fg), poly::to_text(k_d[i - 1].k));
    // rank applied to the coefficients against the K-law at beta = 1.
    MultiPoly ranked(plain);
    for (const auto& [e, c] : G.sym.terms()) {
      poly::Monomial m{{e[0], e[1], e[2]}};
      ranked += MultiPoly::monomial(plain, m, gw::rank(c));
    }
    const MultiPoly at_one = poly::substitute(k_d[i - 1].k, beta_one, plain);
    r.add("ternary_rank", {long(i)}, ranked == at_one, poly::to_text(ranked), poly::to_text(at_one));
    for (const auto* f : {&G, &k_c[i - 1]}) {
      bool symmetric = true;
      try {
        to_text(*f);
      } catch (const SymmetryError&) {
        symmetric = false;
      }
      r.add("ternary_symmetric", {to_string(f->theory), long(i)}, symmetric, txt(*f), "invariant under S3");
    }
  }
  r.sort();
  return r;
}

}  // namespace gwadams::borel
