#include "gwadams/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gwadams::sym {

using poly::Monomial;
using poly::Term;
using poly::VarContext;
using poly::VarId;

std::vector<std::string> family(const std::string& prefix, int m) {
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

ContextPtr family_context(const std::vector<std::pair<std::string, int>>& families) {
  std::vector<std::string> names;
  for (const auto& [prefix, m] : families)
    for (auto& n : family(prefix, m)) names.push_back(std::move(n));
  return VarContext::make(names);
}

MultiPoly elementary(int m, int n) {
  auto ctx = family_context({{"U", m}});
  if (n < 0 || n > m) return MultiPoly(ctx);
  std::vector<Term> terms;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    Monomial mono{std::vector<std::int32_t>(m, 0)};
    for (int i = 0; i < m; ++i) mono.exps[i] = pick[i] ? 1 : 0;
    terms.push_back({std::move(mono), 1});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return MultiPoly::from_terms(ctx, std::move(terms));
}

namespace {

using Exps = std::vector<std::int32_t>;

struct GrlexGreater {
  bool operator()(const Exps& a, const Exps& b) const {
    return poly::grlex_greater(Monomial{a}, Monomial{b});
  }
};

bool is_sorted_desc(const Exps& e) {
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] > e[i - 1]) return false;
  return true;
}

// Expansions of sigma_1^{d_1}...sigma_m^{d_m}, keyed by (m, d), kept only on
// non-increasing exponent vectors.
class SigmaProducts {
 public:
  const std::vector<std::pair<Exps, Integer>>& sorted_part(int m, const Exps& d) {
    std::lock_guard lock(mu_);
    Key key{m, d};
    auto it = sorted_.find(key);
    if (it != sorted_.end()) return it->second;
    const MultiPoly& full = full_locked(m, d);
    std::vector<std::pair<Exps, Integer>> out;
    for (const auto& t : full.terms())
      if (is_sorted_desc(t.mono.exps)) out.emplace_back(t.mono.exps, t.coeff);
    return sorted_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  using Key = std::pair<int, Exps>;
  std::mutex mu_;
  std::map<Key, MultiPoly> full_;
  std::map<Key, std::vector<std::pair<Exps, Integer>>> sorted_;

  const MultiPoly& full_locked(int m, const Exps& d) {
    Key key{m, d};
    auto it = full_.find(key);
    if (it != full_.end()) return it->second;
    MultiPoly value = MultiPoly::constant(family_context({{"U", m}}), 1);
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == 0) continue;
      Exps lower = d;
      --lower[k];
      value = full_locked(m, lower) * elementary(m, static_cast<int>(k) + 1);
      break;
    }
    return full_.emplace(std::move(key), std::move(value)).first->second;
  }
};

SigmaProducts& sigma_products() {
  static SigmaProducts cache;
  return cache;
}

std::string mono_text(const VarContext& ctx, const std::vector<std::size_t>& idx, const Exps& e) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx.var(idx[k]).name;
    if (e[k] != 1) out += "^" + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

MultiPoly symmetric_reduce(const MultiPoly& p, const std::vector<std::string>& sym_vars,
                           const std::vector<std::string>& targets, const ContextPtr& target_ctx) {
  if (sym_vars.size() != targets.size())
    throw ContextError("symmetric_reduce: need one target symbol per symmetric variable");
  const VarContext& src = *p.context();
  const std::size_t m = sym_vars.size();
  std::vector<std::size_t> sidx(m), tidx(m);
  std::vector<bool> is_sym(src.size(), false);
  for (std::size_t k = 0; k < m; ++k) {
    sidx[k] = src.require(sym_vars[k]);
    is_sym[sidx[k]] = true;
    tidx[k] = target_ctx->require(targets[k]);
  }
  std::vector<std::size_t> rest_to(src.size(), 0);
  for (std::size_t v = 0; v < src.size(); ++v)
    if (!is_sym[v]) rest_to[v] = target_ctx->require(src.var(v).name);

  std::map<Exps, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    Exps key(m);
    for (std::size_t k = 0; k < m; ++k) key[k] = t.mono.exps[sidx[k]];
    Monomial rest{Exps(target_ctx->size(), 0)};
    for (std::size_t v = 0; v < src.size(); ++v)
      if (!is_sym[v]) rest.exps[rest_to[v]] = t.mono.exps[v];
    groups[key].push_back({std::move(rest), t.coeff});
  }
  std::map<Exps, MultiPoly> coeffs;
  for (auto& [key, terms] : groups) coeffs.emplace(key, MultiPoly::from_terms(target_ctx, std::move(terms)));

  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (const auto& [key, c] : coeffs) {
      Exps swapped = key;
      std::swap(swapped[i], swapped[i + 1]);
      auto it = coeffs.find(swapped);
      if (it == coeffs.end() || !(it->second == c))
        throw SymmetryError("not symmetric: transposition (" + sym_vars[i] + " " + sym_vars[i + 1] +
                            ") moves the coefficient of " + mono_text(src, sidx, key));
    }
  }

  std::map<Exps, MultiPoly, GrlexGreater> rem;
  for (auto& [key, c] : coeffs)
    if (is_sorted_desc(key)) rem.emplace(key, std::move(c));

  MultiPoly result(target_ctx);
  while (!rem.empty()) {
    auto lead = rem.begin();
    const Exps alpha = lead->first;
    const MultiPoly c = lead->second;
    Exps d(m);
    for (std::size_t k = 0; k < m; ++k) d[k] = alpha[k] - (k + 1 < m ? alpha[k + 1] : 0);
    Monomial xd{Exps(target_ctx->size(), 0)};
    for (std::size_t k = 0; k < m; ++k) xd.exps[tidx[k]] = d[k];
    result += c * MultiPoly::monomial(target_ctx, std::move(xd));
    for (const auto& [beta, k] : sigma_products().sorted_part(static_cast<int>(m), d)) {
      auto it = rem.find(beta);
      MultiPoly delta = c * k;
      if (it == rem.end()) {
        rem.emplace(beta, -delta);
      } else {
        it->second -= delta;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
  }
  return result;
}

MultiPoly symmetric_reduce(const MultiPoly& p) {
  const auto& ctx = *p.context();
  std::vector<std::string> us, xs;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    us.push_back(ctx.var(i).name);
    xs.push_back("X" + std::to_string(i + 1));
  }
  return symmetric_reduce(p, us, xs, VarContext::make(xs));
}

MultiPoly expand_elementary(const MultiPoly& q, const std::vector<std::string>& targets,
                            const std::vector<std::string>& sym_vars, const ContextPtr& ctx) {
  const int m = static_cast<int>(sym_vars.size());
  std::map<std::string, MultiPoly> bind;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const int n = static_cast<int>(k) + 1;
    MultiPoly s(ctx);
    if (n <= m) {
      std::vector<bool> pick(m, false);
      std::fill(pick.begin(), pick.begin() + n, true);
      do {
        Monomial mono{Exps(ctx->size(), 0)};
        for (int i = 0; i < m; ++i)
          if (pick[i]) mono.exps[ctx->require(sym_vars[i])] = 1;
        s += MultiPoly::monomial(ctx, std::move(mono));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    bind.emplace(targets[k], std::move(s));
  }
  return poly::substitute(q, bind, ctx);
}

MultiPoly restrict_to(const MultiPoly& p, const ContextPtr& target) {
  std::map<std::string, MultiPoly> bind;
  for (const auto& v : p.context()->vars())
    if (!target->index_of(v.name)) bind.emplace(v.name, MultiPoly(target));
  return poly::substitute(p, bind, target);
}

}  // namespace gwadams::sym
