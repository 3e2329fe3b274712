#pragma once

// Lambda-ring engine over the coefficient ring extended by rank-2 symplectic
// generators u_1..u_k (each of degree 2, with lambda_t(u) = 1 + u t + gamma t^2).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gwadams/gwring.hpp"
#include "gwadams/report.hpp"
#include "gwadams/series.hpp"

namespace gwadams::lambda {

using gw::GWElem;
using poly::Integer;
using UExps = std::vector<int>;

class SymClass {
 public:
  explicit SymClass(int generators = 0, bool quotient = false);

  static SymClass constant(const GWElem& c, int generators = 0, bool quotient = false);
  /// u_i, 1-based.
  static SymClass u(int i, int generators, bool quotient = false);

  int generators() const { return k_; }
  bool quotient() const { return quotient_; }
  const std::map<UExps, GWElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GWElem coeff(const UExps& e) const;
  /// Coefficient of the empty u-monomial.
  GWElem constant_part() const;

  /// Same value with more generators, or with the quotient imposed / lifted.
  SymClass with_generators(int k) const;
  SymClass with_quotient(bool q) const;

  std::optional<int> degree() const;
  std::map<int, SymClass> components() const;

  SymClass& operator+=(const SymClass& o);
  SymClass& operator-=(const SymClass& o);
  SymClass& operator*=(const SymClass& o);
  SymClass& operator*=(const Integer& n);
  friend SymClass operator+(SymClass x, const SymClass& y) { return x += y; }
  friend SymClass operator-(SymClass x, const SymClass& y) { return x -= y; }
  friend SymClass operator*(const SymClass& x, const SymClass& y);
  friend SymClass operator*(SymClass x, const Integer& n) { return x *= n; }
  friend SymClass operator*(const Integer& n, SymClass x) { return x *= n; }
  friend SymClass operator*(const GWElem& c, const SymClass& x);
  friend SymClass operator*(const SymClass& x, const GWElem& c) { return c * x; }
  SymClass operator-() const;
  bool operator==(const SymClass& o) const;

  SymClass pow(unsigned e) const;
  SymClass one() const { return constant(GWElem::one(), k_, quotient_); }

  /// Applies f to every coefficient.
  template <class F>
  SymClass map_coeffs(F&& f) const {
    SymClass r(k_, quotient_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

 private:
  int k_;
  bool quotient_;
  std::map<UExps, GWElem> terms_;

  void add_term(const UExps& e, const GWElem& c);
  void check_same(const SymClass& o) const;
  void reduce_quotient();
};

/// Ring map eps -> -1, tau -> 2, gamma -> 1, u_i -> 2. Throws GradingError when inhomogeneous.
Integer rank(const SymClass& x);

/// Ring map u_i -> images[i-1], coefficients kept; the result lives in the images' ring.
SymClass substitute_u(const SymClass& x, const std::vector<SymClass>& images);

std::string to_text(const SymClass& x);
std::string to_latex(const SymClass& x);
nlohmann::json to_json(const SymClass& x);
SymClass sym_from_json(const nlohmann::json& j);

using LambdaSeries = poly::TruncSeries<SymClass>;

/// lambda_t(x) modulo t^{N+1}. The result of a homogeneous argument is checked
/// against the degree law (lambda^n of degree 2i lands in degree 2ni).
LambdaSeries lambda_t(const SymClass& x, int N);
SymClass lambda_n(int n, const SymClass& x);

/// Lambda-ring product of series (coefficientwise P_n).
LambdaSeries lambda_product(const LambdaSeries& f, const LambdaSeries& g);

/// psi^0..psi^N of x by Newton's identity; x must be homogeneous.
std::vector<SymClass> adams_all(int N, const SymClass& x);
SymClass adams(int n, const SymClass& x);
/// psi^n for n < 0 (duality rule); n >= 0 is forwarded to adams.
SymClass adams_negative(int n, const SymClass& x);
GWElem adams(int n, const GWElem& x);

// Alternative decomposition for the independence test: signed words of
// (possibly non-normal) factors, each folded into the series one at a time.
struct Factor {
  enum Kind { Tau, U, MinusOne, Eps, Gamma } kind;
  int index = 0;  // u index (1-based) or gamma exponent
};
struct Word {
  Integer mult;
  std::vector<Factor> factors;
};
LambdaSeries lambda_t_words(const std::vector<Word>& words, int generators, int N);
SymClass evaluate_words(const std::vector<Word>& words, int generators);

// Hyperbolic classes h_{2i}(1).
struct HyperbolicComparison {
  int n = 0;
  long i = 0;
  GWElem engine;        // default convention lambda^2(h_{2i}(1)) = <det>
  GWElem literal;       // lambda^2 = gamma^i for every rank-2 hyperbolic class
  GWElem closed_form;   // the published formula
  bool in_Z_h = false;  // engine value in Z * h_{2in}(1) (checked for odd n)
  Status status = Status::pass;
};
HyperbolicComparison adams_on_hyperbolic(int n, long i);
/// The closed formula for psi^n(h_{2i}(1)).
GWElem hyperbolic_closed_form(int n, long i);
/// psi^n(tau) as stated for the class tau.
GWElem psi_tau_closed_form(int n);

struct AxiomOptions {
  int l1_max_n = 6;
  int l2_max_ij = 8;
  int psi_max = 4;
  int psi_pair_max = 6;
};

/// Default sample set {u1, u2, tau, <-1>, u1u2, u1 + tau} on two generators.
std::vector<std::pair<std::string, SymClass>> default_samples();

VerificationReport check_lambda_axioms(const AxiomOptions& opts = {});
VerificationReport check_adams_hyperbolic(int max_n = 5, long max_i = 2);
/// psi^n(tau) against the closed formula, 0 <= n <= max_n.
VerificationReport check_psi_tau(int max_n = 10);
/// Lambda twist lemma and negative Adams operations (the Appendix A side of the engine).
VerificationReport check_twist_rules(int max_n = 4);

}  // namespace gwadams::lambda
