#pragma once

// Exact multivariate Laurent polynomials over the integers.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gwadams/errors.hpp"

namespace gwadams::poly {

using Integer = mpz_class;

struct VarId {
  std::string name;
  bool laurent_allowed = false;

  bool operator==(const VarId&) const = default;
};

/// An ordered, immutable set of variables. The declaration order is the
/// variable order used by the graded-lexicographic monomial order.
class VarContext {
 public:
  explicit VarContext(std::vector<VarId> vars);

  static std::shared_ptr<const VarContext> make(std::vector<VarId> vars);
  /// Convenience: all variables polynomial (non-Laurent).
  static std::shared_ptr<const VarContext> make(const std::vector<std::string>& names);

  std::size_t size() const { return vars_.size(); }
  const VarId& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<VarId>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws ContextError when the name is unknown.
  std::size_t require(std::string_view name) const;

  bool operator==(const VarContext& other) const { return vars_ == other.vars_; }

 private:
  std::vector<VarId> vars_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Dense exponent vector parallel to the variables of a context. A zero entry
/// means the variable is absent from the monomial.
struct Monomial {
  std::vector<std::int32_t> exps;

  long total_degree() const;
  bool is_one() const;
  bool operator==(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Graded-lexicographic comparison: true when a is strictly greater than b.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial mono;
  Integer coeff;
};

class MultiPoly {
 public:
  explicit MultiPoly(ContextPtr ctx);

  static MultiPoly constant(ContextPtr ctx, const Integer& c);
  static MultiPoly variable(ContextPtr ctx, std::string_view name, int exponent = 1);
  static MultiPoly monomial(ContextPtr ctx, Monomial m, const Integer& c = 1);
  /// Canonicalizes arbitrary terms: merges duplicates, drops zeros, sorts, and
  /// validates exponents against the context.
  static MultiPoly from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const { return ctx_; }
  /// Terms in descending graded-lex order.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Integer constant_term() const;
  Integer coeff(const Monomial& m) const;
  /// Highest exponent of the given variable (0 for the zero polynomial).
  int degree_in(std::size_t var) const;

  MultiPoly pow(unsigned e) const;
  MultiPoly zero() const { return MultiPoly(ctx_); }
  MultiPoly one() const { return constant(ctx_, 1); }

  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);
  MultiPoly& operator*=(const MultiPoly& q);
  MultiPoly& operator*=(const Integer& c);

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(MultiPoly p, const Integer& c) { return p *= c; }
  friend MultiPoly operator*(const Integer& c, MultiPoly p) { return p *= c; }
  MultiPoly operator-() const;

  bool operator==(const MultiPoly& q) const;

  /// Re-runs canonicalization; the identity on any stored value.
  MultiPoly renormalized() const;

 private:
  ContextPtr ctx_;
  std::vector<Term> terms_;

  void check_same(const MultiPoly& q) const;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);

/// Image under the evaluation homomorphism sending each bound variable to its
/// binding and every other variable to the same-named variable of `target`.
/// A variable occurring with a negative exponent must be bound to a unit
/// monomial (coefficient +-1).
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings,
                     const ContextPtr& target);

/// Same-named embedding of p into a context that contains all its variables.
MultiPoly embed(const MultiPoly& p, const ContextPtr& target);

/// Common weighted degree of all terms; nullopt marks an inhomogeneous
/// polynomial. Unlisted variables weigh 0. The zero polynomial has degree 0.
std::optional<long> graded_degree(const MultiPoly& p, const std::map<std::string, long>& weights);

/// Evaluates p at ring values (one per context variable). Exponents must be
/// non-negative. R needs +, * and multiplication by Integer.
template <class R>
R evaluate(const MultiPoly& p, std::span<const R> values, const R& one) {
  const std::size_t nv = p.context()->size();
  if (values.size() != nv) throw ContextError("evaluate: value count does not match context");
  std::vector<std::vector<R>> powers(nv);
  auto power = [&](std::size_t v, int e) -> const R& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(one);
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values[v]);
    return cache[e];
  };
  R result = one * Integer(0);
  for (const Term& t : p.terms()) {
    R acc = one;
    bool first = true;
    for (std::size_t v = 0; v < nv; ++v) {
      int e = t.mono.exps[v];
      if (e < 0) throw ExponentError("evaluate: negative exponent");
      if (e == 0) continue;
      if (first) {
        acc = power(v, e);
        first = false;
      } else {
        acc = acc * power(v, e);
      }
    }
    result += acc * t.coeff;
  }
  return result;
}

// Rendering. Text uses `*` and `^`; LaTeX splits trailing digits into a
// subscript (X1 -> X_{1}). Both follow the stored graded-lex order.
std::string to_text(const MultiPoly& p);
std::string to_latex(const MultiPoly& p);

}  // namespace gwadams::poly
