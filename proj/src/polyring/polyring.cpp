#include "gwadams/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gwadams::poly {

VarContext::VarContext(std::vector<VarId> vars) : vars_(std::move(vars)) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw ContextError("empty variable name");
    if (!seen.insert(v.name).second) throw ContextError("duplicate variable name: " + v.name);
  }
}

std::shared_ptr<const VarContext> VarContext::make(std::vector<VarId> vars) {
  return std::make_shared<const VarContext>(std::move(vars));
}

std::shared_ptr<const VarContext> VarContext::make(const std::vector<std::string>& names) {
  std::vector<VarId> vars;
  vars.reserve(names.size());
  for (const auto& n : names) vars.push_back({n, false});
  return make(std::move(vars));
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VarContext::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw ContextError("unknown variable: " + std::string(name));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

long Monomial::total_degree() const {
  return std::accumulate(exps.begin(), exps.end(), 0L);
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r{a.exps};
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exps) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(e));
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

void validate(const VarContext& ctx, const Monomial& m) {
  if (m.exps.size() != ctx.size()) throw ContextError("monomial arity does not match context");
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    if (m.exps[i] < 0 && !ctx.var(i).laurent_allowed)
      throw ExponentError("negative exponent on non-Laurent variable " + ctx.var(i).name);
}

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
}

}  // namespace

MultiPoly::MultiPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw ContextError("null ring context");
}

MultiPoly MultiPoly::constant(ContextPtr ctx, const Integer& c) {
  MultiPoly p(std::move(ctx));
  if (c != 0) p.terms_.push_back({Monomial{std::vector<std::int32_t>(p.ctx_->size(), 0)}, c});
  return p;
}

MultiPoly MultiPoly::variable(ContextPtr ctx, std::string_view name, int exponent) {
  Monomial m{std::vector<std::int32_t>(ctx->size(), 0)};
  m.exps[ctx->require(name)] = exponent;
  return monomial(std::move(ctx), std::move(m));
}

MultiPoly MultiPoly::monomial(ContextPtr ctx, Monomial m, const Integer& c) {
  MultiPoly p(std::move(ctx));
  validate(*p.ctx_, m);
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

MultiPoly MultiPoly::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  MultiPoly p(std::move(ctx));
  for (const auto& t : terms) validate(*p.ctx_, t.mono);
  sort_terms(terms);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  p.terms_ = std::move(out);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Integer MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  // Laurent monomials of degree 0 may sort after the constant; fall back to search.
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return 0;
}

Integer MultiPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grlex_greater(t.mono, key);
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.mono.exps[var] > d) d = t.mono.exps[var];
    first = false;
  }
  return d;
}

void MultiPoly::check_same(const MultiPoly& q) const {
  if (!same_context(ctx_, q.ctx_)) throw ContextError("mismatched ring contexts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  check_same(q);
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = q.terms_.begin(), be = q.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && grlex_greater(a->mono, b->mono))) {
      out.push_back(std::move(*a++));
    } else if (a == ae || grlex_greater(b->mono, a->mono)) {
      out.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) out.push_back({std::move(a->mono), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) { return *this += -q; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  p.check_same(q);
  MultiPoly r(p.ctx_);
  if (p.is_zero() || q.is_zero()) return r;
  if (q.size() == 1 || p.size() == 1) {
    const MultiPoly& big = q.size() == 1 ? p : q;
    const Term& s = q.size() == 1 ? q.terms_[0] : p.terms_[0];
    r.terms_.reserve(big.size());
    // Multiplying by a single monomial preserves the term order.
    for (const auto& t : big.terms_) {
      Monomial m = t.mono * s.mono;
      validate(*r.ctx_, m);
      r.terms_.push_back({std::move(m), t.coeff * s.coeff});
    }
    return r;
  }
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(p.size() * q.size());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) {
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono);
      if (inserted) {
        it->second = a.coeff * b.coeff;
      } else {
        mpz_addmul(it->second.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
      }
    }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c == 0) continue;
    validate(*r.ctx_, m);
    r.terms_.push_back({m, std::move(c)});
  }
  sort_terms(r.terms_);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& q) { return *this = *this * q; }

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = one();
  MultiPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& q) const {
  if (!same_context(ctx_, q.ctx_)) return false;
  if (terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == q.terms_[i].mono) || terms_[i].coeff != q.terms_[i].coeff) return false;
  return true;
}

MultiPoly MultiPoly::renormalized() const { return from_terms(ctx_, terms_); }

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings,
                     const ContextPtr& target) {
  const VarContext& src = *p.context();
  const std::size_t nv = src.size();
  // Per source variable: either a bound polynomial or a target variable index.
  std::vector<const MultiPoly*> bound(nv, nullptr);
  std::vector<std::size_t> passthrough(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    auto it = bindings.find(src.var(v).name);
    if (it != bindings.end()) {
      if (!same_context(it->second.context(), target))
        throw ContextError("substitute: binding for " + src.var(v).name + " lives in another context");
      bound[v] = &it->second;
    } else {
      auto idx = target->index_of(src.var(v).name);
      if (!idx) throw ContextError("substitute: no binding or target variable for " + src.var(v).name);
      passthrough[v] = *idx;
    }
  }
  auto inverse_of_unit = [&](std::size_t v) {
    const MultiPoly& b = *bound[v];
    if (b.size() != 1 || (b.terms()[0].coeff != 1 && b.terms()[0].coeff != -1))
      throw SubstitutionError("substitute: negative power of " + src.var(v).name +
                              " requires a unit monomial binding");
    Monomial m = b.terms()[0].mono;
    for (auto& e : m.exps) e = -e;
    return MultiPoly::monomial(target, std::move(m), b.terms()[0].coeff);
  };
  std::vector<std::map<int, MultiPoly>> cache(nv);
  auto power = [&](std::size_t v, int e) -> const MultiPoly& {
    auto it = cache[v].find(e);
    if (it != cache[v].end()) return it->second;
    MultiPoly base = e < 0 ? inverse_of_unit(v) : *bound[v];
    MultiPoly val = base.pow(static_cast<unsigned>(e < 0 ? -e : e));
    return cache[v].emplace(e, std::move(val)).first->second;
  };
  std::vector<MultiPoly> parts;
  MultiPoly result(target);
  for (const auto& t : p.terms()) {
    Monomial m{std::vector<std::int32_t>(target->size(), 0)};
    for (std::size_t v = 0; v < nv; ++v)
      if (!bound[v]) m.exps[passthrough[v]] += t.mono.exps[v];
    MultiPoly acc = MultiPoly::monomial(target, std::move(m), t.coeff);
    for (std::size_t v = 0; v < nv && !acc.is_zero(); ++v)
      if (bound[v] && t.mono.exps[v] != 0) acc *= power(v, t.mono.exps[v]);
    result += acc;
  }
  return result;
}

MultiPoly embed(const MultiPoly& p, const ContextPtr& target) {
  if (same_context(p.context(), target)) return p;
  return substitute(p, {}, target);
}

std::optional<long> graded_degree(const MultiPoly& p, const std::map<std::string, long>& weights) {
  const VarContext& ctx = *p.context();
  std::vector<long> w(ctx.size(), 0);
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    auto it = weights.find(ctx.var(i).name);
    if (it != weights.end()) w[i] = it->second;
  }
  std::optional<long> deg;
  for (const auto& t : p.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * t.mono.exps[i];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg.value_or(0);
}

namespace {

std::string latex_var(const std::string& name) {
  std::size_t k = name.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
  if (k == 0 || k == name.size()) return name;
  return name.substr(0, k) + "_{" + name.substr(k) + "}";
}

template <class VarFn, class PowFn>
std::string render(const MultiPoly& p, const char* times, VarFn var, PowFn pow) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Integer c = t.coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t v = 0; v < t.mono.exps.size(); ++v) {
      int e = t.mono.exps[v];
      if (e == 0) continue;
      if (wrote) os << times;
      os << var(v);
      if (e != 1) os << pow(e);
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace

std::string to_text(const MultiPoly& p) {
  const auto& ctx = *p.context();
  return render(
      p, "*", [&](std::size_t v) { return ctx.var(v).name; },
      [](int e) { return "^" + std::to_string(e); });
}

std::string to_latex(const MultiPoly& p) {
  const auto& ctx = *p.context();
  return render(
      p, " ", [&](std::size_t v) { return latex_var(ctx.var(v).name); },
      [](int e) { return "^{" + std::to_string(e) + "}"; });
}

}  // namespace gwadams::poly
