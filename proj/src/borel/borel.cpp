#include "gwadams/borel.hpp"

#include <mutex>

namespace gwadams::borel {

using poly::Integer;

namespace {

nlohmann::json j(const GWElem& x) { return gw::to_text(x); }
nlohmann::json j(const SymClass& x) { return lambda::to_text(x); }

// psi^0..psi^N(tau), grown on demand.
GWElem psi_tau(int n) {
  static std::mutex mu;
  static std::vector<GWElem> table;
  std::lock_guard lock(mu);
  if (static_cast<int>(table.size()) <= n) {
    table.clear();
    for (const auto& s : lambda::adams_all(std::max(n, 16), SymClass::constant(GWElem::tau())))
      table.push_back(s.constant_part());
  }
  return table[n];
}

GWElem omega_closed(int n) {
  if (n == 0) return GWElem();
  if (n % 2 == 0) return GWElem::tau().shift((n - 2) / 2) * Integer(n * n / 2);
  const int m = (n - 1) / 2;
  return ((gw::h() * Integer(m) + gw::minus_one_form().pow(m)) * Integer(n)).shift(m);
}

}  // namespace

GWElem omega(int n, OmegaMethod method) {
  if (n < 0) throw OrderError("omega: n must be non-negative");
  if (method == OmegaMethod::closed_form) return omega_closed(n);
  GWElem prev = GWElem(), cur = GWElem::one();
  if (n == 0) return prev;
  const GWElem tau = GWElem::tau(), gamma = GWElem::gamma();
  for (int m = 2; m <= n; ++m) {
    GWElem next = tau * cur - gamma * prev + psi_tau(m - 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

QuotientSplit psi_u_minus_tau(int n) {
  const SymClass u = SymClass::u(1, 1, true);
  const SymClass x = u - SymClass::constant(GWElem::tau(), 1, true);
  const SymClass p = lambda::adams(n, x);
  // r0 + r1 u = (r0 + r1 tau) + r1 (u - tau).
  const GWElem r0 = p.coeff({0}), r1 = p.coeff({1});
  return {r0 + r1 * GWElem::tau(), r1};
}

VerificationReport check_omega_laws(int max_m, int max_n) {
  VerificationReport r;
  r.suite = "omega";
  for (int n = 0; n <= 10; ++n) {
    const GWElem a = omega(n), b = omega(n, OmegaMethod::closed_form);
    r.add("omega_explicit", {long(n)}, a == b, j(a), j(b));
    if (n >= 1) {
      const auto d = a.degree();
      r.add("omega_degree", {long(n)}, d && *d == 2 * n - 2, d ? std::to_string(*d) : "inhomogeneous",
            std::to_string(2 * n - 2));
    }
  }
  for (int m = 2; m <= max_m; ++m)
    for (int n = 2; n <= max_n; ++n) {
      const GWElem lhs = omega(m * n), rhs = omega(n) * lambda::adams(n, omega(m));
      r.add("omega_psi", {long(m), long(n)}, lhs == rhs, j(lhs), j(rhs));
    }
  for (int n = 1; n <= 8; ++n) {
    const auto s = psi_u_minus_tau(n);
    r.add("omega_n", {long(n)}, s.constant.is_zero() && s.linear == omega(n),
          gw::to_text(s.constant) + " + (" + gw::to_text(s.linear) + ")*(u - tau)",
          "0 + (" + gw::to_text(omega(n)) + ")*(u - tau)");
  }
  // Localization witnesses.
  const GWElem E = GWElem::eps();
  for (int n = 1; n <= 9; n += 2) {
    const int m = (n - 1) / 2;
    const GWElem lhs = omega(n) * ((GWElem::one() + E) * Integer(m) + E.pow(m));
    const GWElem rhs = GWElem::gamma(m) * Integer(m % 2 ? -n * n : n * n);
    r.add("localization_odd", {long(n)}, lhs == rhs, j(lhs), j(rhs));
  }
  for (int n = 2; n <= 9; n += 2) {
    const GWElem lhs = omega(n) * omega(n);
    const GWElem rhs = (gw::n_star(n) * Integer(n * n * n)).shift(n - 1);
    r.add("omega_sq", {long(n)}, lhs == rhs, j(lhs), j(rhs));
  }
  r.sort();
  return r;
}

SymClass borel_sum_classes(int k, int i) {
  if (i < 1 || i > k) throw IndexError("borel_sum_classes: need 1 <= i <= k");
  const SymClass tau = SymClass::constant(GWElem::tau(), k);
  // Coefficient of t^i in prod_j (1 + (e_j - tau) t).
  std::vector<SymClass> c(i + 1, SymClass(k));
  c[0] = tau.one();
  for (int jj = 1; jj <= k; ++jj) {
    const SymClass root = SymClass::u(jj, k) - tau;
    for (int d = std::min(jj, i); d >= 1; --d) c[d] += c[d - 1] * root;
  }
  return c[i];
}

namespace {

// Elementary symmetric sigma_i(e_1..e_4) as a SymClass.
SymClass sigma(int i, int k) {
  std::vector<SymClass> c(i + 1, SymClass(k));
  c[0] = SymClass::constant(GWElem::one(), k);
  for (int jj = 1; jj <= k; ++jj)
    for (int d = std::min(jj, i); d >= 1; --d) c[d] += c[d - 1] * SymClass::u(jj, k);
  return c[i];
}

// lambda^i(e_1 + ... + e_4) as displayed in terms of sigma_k and gamma.
SymClass preliminary(int i) {
  const SymClass G = SymClass::constant(GWElem::gamma(), 4);
  switch (i) {
    case 1: return sigma(1, 4);
    case 2: return sigma(2, 4) + G * Integer(4);
    case 3: return sigma(3, 4) + sigma(1, 4) * G * Integer(3);
    case 4: return sigma(4, 4) + sigma(2, 4) * G * Integer(2) + G * G * Integer(6);
    default: throw IndexError("preliminary: i must be 1..4");
  }
}

}  // namespace

VerificationReport check_borel_prop() {
  VerificationReport r;
  r.suite = "borel";
  const int k = 4;
  SymClass e(k);
  for (int jj = 1; jj <= k; ++jj) e += SymClass::u(jj, k);
  const auto L = lambda::lambda_t(e, 4);
  const SymClass one = e.one();
  const SymClass tau = SymClass::constant(GWElem::tau(), k), gamma = SymClass::constant(GWElem::gamma(), k),
                 eps = SymClass::constant(GWElem::eps(), k);
  std::vector<SymClass> Lp{one};
  for (int i = 1; i <= 4; ++i) {
    r.add("preliminary", {long(i)}, L[i] == preliminary(i), j(L[i]), j(preliminary(i)));
    Lp.push_back(preliminary(i));
  }
  for (int i = 1; i <= 4; ++i) {
    const SymClass lhs = borel_sum_classes(k, i);
    const SymClass rhs = borel_formula<SymClass>(i, Lp, tau, gamma, eps);
    r.add("borel", {long(i)}, lhs == rhs, j(lhs), j(rhs));
  }
  // Lemma symmetric in Z[x_1..x_4, y]: sigma_i(x - y) against the displayed expansion.
  auto ctx = poly::VarContext::make(std::vector<std::string>{"x1", "x2", "x3", "x4", "y"});
  const MultiPoly y = MultiPoly::variable(ctx, "y");
  std::vector<MultiPoly> s(5, MultiPoly(ctx)), sy(5, MultiPoly(ctx));
  s[0] = sy[0] = MultiPoly::constant(ctx, 1);
  for (int jj = 1; jj <= 4; ++jj) {
    const MultiPoly x = MultiPoly::variable(ctx, "x" + std::to_string(jj));
    for (int d = jj; d >= 1; --d) {
      s[d] += s[d - 1] * x;
      sy[d] += sy[d - 1] * (x - y);
    }
  }
  const MultiPoly want[] = {
      s[0],
      s[1] - y * Integer(4),
      s[2] - y * s[1] * Integer(3) + y.pow(2) * Integer(6),
      s[3] - s[2] * y * Integer(2) + s[1] * y.pow(2) * Integer(3) - y.pow(3) * Integer(4),
      s[4] - s[3] * y + s[2] * y.pow(2) - s[1] * y.pow(3) + y.pow(4)};
  for (int i = 1; i <= 4; ++i)
    r.add("symmetric", {long(i)}, sy[i] == want[i], poly::to_text(sy[i]), poly::to_text(want[i]));
  r.sort();
  return r;
}

}  // namespace gwadams::borel
