#pragma once

// The graded coefficient ring Z[eps, tau, gamma^{+-1}] / (eps^2 - 1, eps*tau + tau, tau^2 - 2(1 - eps)gamma).

#include <functional>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "gwadams/polyring.hpp"
#include "gwadams/report.hpp"

namespace gwadams::gw {

using poly::Integer;

/// a + b*eps + c*tau.
struct Triple {
  Integer a, b, c;

  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  bool operator==(const Triple&) const = default;
};

/// Normal form: a finite sum over gamma exponents k of gamma^k * (a + b eps + c tau).
/// The (a, b) part of the gamma^k slot has degree 4k, the tau part 4k + 2.
class GWElem {
 public:
  GWElem() = default;

  static GWElem integer(const Integer& n);
  static GWElem one() { return integer(1); }
  static GWElem eps();
  static GWElem tau();
  static GWElem gamma(int k = 1);
  /// gamma^k * (a + b eps + c tau).
  static GWElem make(const Integer& a, const Integer& b, const Integer& c, int k = 0);

  const std::map<int, Triple>& slots() const { return slots_; }
  bool is_zero() const { return slots_.empty(); }

  /// Homogeneous pieces keyed by degree.
  std::map<int, GWElem> components() const;
  /// The common degree, or nullopt when inhomogeneous. Zero has degree 0.
  std::optional<int> degree() const;
  bool is_homogeneous() const { return degree().has_value(); }

  GWElem& operator+=(const GWElem& o);
  GWElem& operator-=(const GWElem& o);
  GWElem& operator*=(const GWElem& o);
  GWElem& operator*=(const Integer& n);
  friend GWElem operator+(GWElem x, const GWElem& y) { return x += y; }
  friend GWElem operator-(GWElem x, const GWElem& y) { return x -= y; }
  friend GWElem operator*(const GWElem& x, const GWElem& y);
  friend GWElem operator*(GWElem x, const Integer& n) { return x *= n; }
  friend GWElem operator*(const Integer& n, GWElem x) { return x *= n; }
  GWElem operator-() const;
  bool operator==(const GWElem&) const = default;

  GWElem pow(unsigned e) const;
  /// Multiplies by gamma^k.
  GWElem shift(int k) const;

 private:
  std::map<int, Triple> slots_;
  void add_slot(int k, const Triple& t);
};

// Named constants.
GWElem h();
GWElem minus_one_form();  // <-1> = -eps
/// h_{2i}(1): tau gamma^{(i-1)/2} for odd i, h gamma^{i/2} for even i.
GWElem hyperbolic_unit(long i);
/// n* = n for odd n, (n/2) h for even n.
GWElem n_star(long n);

/// Ring map eps -> -1, tau -> 2, gamma -> 1. Throws GradingError on inhomogeneous input.
Integer rank(const GWElem& x);

/// eps^a tau^b gamma^d evaluated by the closed power formulas (independent of GWElem products).
GWElem word_normal_form(long a, long b, long d);

std::string to_text(const GWElem& x);   // 3*gamma - 6*eps*gamma
std::string to_latex(const GWElem& x);  // 3 \gamma - 6 \varepsilon \gamma
std::string to_pretty(const GWElem& x); // 3γ - 6εγ

nlohmann::json to_json(const GWElem& x);
GWElem gw_from_json(const nlohmann::json& j);

struct CoefficientCheckOptions {
  int max_ij = 4;
  int max_star = 6;
  int max_witness = 9;
};

/// omega(n) is injected to keep this module below borel.
using OmegaProvider = std::function<GWElem(int)>;

VerificationReport check_coefficient_identities(const OmegaProvider& omega,
                                                const CoefficientCheckOptions& opts = {});

}  // namespace gwadams::gw
