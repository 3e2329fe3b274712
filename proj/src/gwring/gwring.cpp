#include "gwadams/gwring.hpp"

#include <sstream>

namespace gwadams::gw {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

void GWElem::add_slot(int k, const Triple& t) {
  if (t.is_zero()) return;
  auto [it, inserted] = slots_.try_emplace(k, t);
  if (inserted) return;
  it->second.a += t.a;
  it->second.b += t.b;
  it->second.c += t.c;
  if (it->second.is_zero()) slots_.erase(it);
}

GWElem GWElem::integer(const Integer& n) { return make(n, 0, 0, 0); }
GWElem GWElem::eps() { return make(0, 1, 0, 0); }
GWElem GWElem::tau() { return make(0, 0, 1, 0); }
GWElem GWElem::gamma(int k) { return make(1, 0, 0, k); }

GWElem GWElem::make(const Integer& a, const Integer& b, const Integer& c, int k) {
  GWElem x;
  x.add_slot(k, Triple{a, b, c});
  return x;
}

std::map<int, GWElem> GWElem::components() const {
  std::map<int, GWElem> out;
  for (const auto& [k, t] : slots_) {
    if (t.a != 0 || t.b != 0) out[4 * k].add_slot(k, Triple{t.a, t.b, 0});
    if (t.c != 0) out[4 * k + 2].add_slot(k, Triple{0, 0, t.c});
  }
  return out;
}

std::optional<int> GWElem::degree() const {
  auto comps = components();
  if (comps.empty()) return 0;
  if (comps.size() > 1) return std::nullopt;
  return comps.begin()->first;
}

GWElem& GWElem::operator+=(const GWElem& o) {
  for (const auto& [k, t] : o.slots_) add_slot(k, t);
  return *this;
}

GWElem& GWElem::operator-=(const GWElem& o) { return *this += -o; }

GWElem GWElem::operator-() const {
  GWElem r = *this;
  for (auto& [k, t] : r.slots_) {
    t.a = -t.a;
    t.b = -t.b;
    t.c = -t.c;
  }
  return r;
}

GWElem& GWElem::operator*=(const Integer& n) {
  if (n == 0) {
    slots_.clear();
    return *this;
  }
  for (auto& [k, t] : slots_) {
    t.a *= n;
    t.b *= n;
    t.c *= n;
  }
  return *this;
}

GWElem operator*(const GWElem& x, const GWElem& y) {
  GWElem r;
  for (const auto& [k1, s] : x.slots_)
    for (const auto& [k2, t] : y.slots_) {
      // eps^2 = 1, eps*tau = -tau, tau^2 = 2(1 - eps) gamma.
      r.add_slot(k1 + k2, Triple{s.a * t.a + s.b * t.b, s.a * t.b + s.b * t.a,
                                 s.a * t.c + s.c * t.a - s.b * t.c - s.c * t.b});
      const Integer cc = s.c * t.c;
      if (cc != 0) r.add_slot(k1 + k2 + 1, Triple{2 * cc, -2 * cc, 0});
    }
  return r;
}

GWElem& GWElem::operator*=(const GWElem& o) { return *this = *this * o; }

GWElem GWElem::pow(unsigned e) const {
  GWElem r = one(), base = *this;
  while (e) {
    if (e & 1U) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

GWElem GWElem::shift(int k) const {
  GWElem r;
  for (const auto& [j, t] : slots_) r.slots_.emplace(j + k, t);
  return r;
}

GWElem h() { return GWElem::make(1, -1, 0); }
GWElem minus_one_form() { return GWElem::make(0, -1, 0); }

GWElem hyperbolic_unit(long i) {
  if (i % 2 != 0) return GWElem::tau().shift(static_cast<int>(floor_div(i - 1, 2)));
  return h().shift(static_cast<int>(floor_div(i, 2)));
}

GWElem n_star(long n) {
  if (n % 2 != 0) return GWElem::integer(n);
  return h() * Integer(n / 2);
}

Integer rank(const GWElem& x) {
  if (!x.is_homogeneous()) throw GradingError("rank: inhomogeneous element");
  Integer r = 0;
  for (const auto& [k, t] : x.slots()) r += t.a - t.b + 2 * t.c;
  return r;
}

GWElem word_normal_form(long a, long b, long d) {
  if (b < 0) throw ExponentError("word_normal_form: negative tau exponent");
  const long q = b / 2, r = b % 2;
  const bool odd_eps = (a % 2 + 2) % 2 == 1;
  const int k = static_cast<int>(d + q);
  if (q == 0) {
    if (r == 0) return odd_eps ? GWElem::eps().shift(k) : GWElem::gamma(k);
    return GWElem::tau().shift(k) * Integer(odd_eps ? -1 : 1);
  }
  Integer coeff;
  if (r == 0) {
    mpz_ui_pow_ui(coeff.get_mpz_t(), 2, static_cast<unsigned long>(2 * q - 1));
    return h().shift(k) * Integer(odd_eps ? -coeff : coeff);
  }
  mpz_ui_pow_ui(coeff.get_mpz_t(), 2, static_cast<unsigned long>(2 * q));
  return GWElem::tau().shift(k) * Integer(odd_eps ? -coeff : coeff);
}

namespace {

struct Symbols {
  const char* eps;
  const char* tau;
  const char* gamma;
  const char* times;
  bool superscripts;  // unicode superscript digits instead of ^{..} / ^
  bool latex;
};

std::string sup(int e, const Symbols& s) {
  if (s.latex) return "^{" + std::to_string(e) + "}";
  if (!s.superscripts) return "^" + std::to_string(e);
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = e < 0 ? "⁻" : "";
  for (char ch : std::to_string(e < 0 ? -e : e)) out += digits[ch - '0'];
  return out;
}

std::string render(const GWElem& x, const Symbols& s) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, t] : x.slots()) {
    const std::pair<const Integer*, const char*> parts[] = {{&t.a, nullptr}, {&t.b, s.eps}, {&t.c, s.tau}};
    for (const auto& [cp, sym] : parts) {
      Integer c = *cp;
      if (c == 0) continue;
      const bool neg = c < 0;
      if (neg) c = -c;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      std::vector<std::string> factors;
      if (c != 1 || (!sym && k == 0)) factors.push_back(c.get_str());
      if (sym) factors.emplace_back(sym);
      if (k != 0) factors.push_back(std::string(s.gamma) + (k != 1 ? sup(k, s) : ""));
      for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? s.times : "") << factors[i];
    }
  }
  return os.str();
}

}  // namespace

std::string to_text(const GWElem& x) { return render(x, {"eps", "tau", "gamma", "*", false, false}); }
std::string to_latex(const GWElem& x) { return render(x, {"\\varepsilon", "\\tau", "\\gamma", " ", false, true}); }
std::string to_pretty(const GWElem& x) { return render(x, {"ε", "τ", "γ", "", true, false}); }

nlohmann::json to_json(const GWElem& x) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& [deg, piece] : x.components()) {
    const int kmin = piece.slots().begin()->first, kmax = piece.slots().rbegin()->first;
    std::vector<std::string> a, b, c;
    for (int k = kmin; k <= kmax; ++k) {
      auto it = piece.slots().find(k);
      Triple t = it == piece.slots().end() ? Triple{} : it->second;
      a.push_back(t.a.get_str());
      b.push_back(t.b.get_str());
      c.push_back(t.c.get_str());
    }
    comps.push_back({{"deg", deg}, {"gamma_min", kmin}, {"a", a}, {"b", b}, {"c", c}});
  }
  return {{"components", comps}};
}

GWElem gw_from_json(const nlohmann::json& j) {
  auto parse_int = [](const nlohmann::json& v) {
    if (v.is_number_integer()) return Integer(v.get<long>());
    Integer n;
    if (!v.is_string() || n.set_str(v.get<std::string>(), 10) != 0) throw ParseError("GW JSON: bad integer");
    return n;
  };
  try {
    GWElem x;
    for (const auto& comp : j.at("components")) {
      const int kmin = comp.value("gamma_min", 0);
      auto arr = [&](const char* key) {
        std::vector<Integer> v;
        if (comp.contains(key))
          for (const auto& e : comp.at(key)) v.push_back(parse_int(e));
        return v;
      };
      auto a = arr("a"), b = arr("b"), c = arr("c");
      const std::size_t len = std::max({a.size(), b.size(), c.size()});
      GWElem piece;
      for (std::size_t i = 0; i < len; ++i) {
        auto at = [&](const std::vector<Integer>& v) { return i < v.size() ? v[i] : Integer(0); };
        piece += GWElem::make(at(a), at(b), at(c), kmin + static_cast<int>(i));
      }
      if (comp.contains("deg") && !piece.is_zero() && piece.degree() != comp.at("deg").get<int>())
        throw ParseError("GW JSON: component does not match its stated degree");
      x += piece;
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("GW JSON: ") + e.what());
  }
}

VerificationReport check_coefficient_identities(const OmegaProvider& omega, const CoefficientCheckOptions& opts) {
  VerificationReport r;
  r.suite = "coefficient-ring";
  auto j = [](const GWElem& x) { return nlohmann::json(to_text(x)); };
  auto check = [&](const std::string& lemma, std::vector<Param> params, const GWElem& lhs, const GWElem& rhs) {
    r.add(lemma, std::move(params), lhs == rhs, j(lhs), j(rhs));
  };
  const GWElem H = h(), T = GWElem::tau(), G = GWElem::gamma(), E = GWElem::eps(), one = GWElem::one();

  check("tau_sq", {std::string("h^2=2h")}, H * H, H * Integer(2));
  check("tau_sq", {std::string("h*tau=2tau")}, H * T, T * Integer(2));
  check("tau_sq", {std::string("tau^2=2gamma*h")}, T * T, G * H * Integer(2));

  const int M = opts.max_ij;
  for (long i = -M; i <= M; ++i) {
    check("2_sigma", {i}, (one + E) * hyperbolic_unit(i), GWElem());
    check("h_periodic", {i}, G * hyperbolic_unit(i), hyperbolic_unit(i + 2));
    r.add("rank_h", {i}, rank(hyperbolic_unit(i)) == 2, rank(hyperbolic_unit(i)).get_str(), "2");
    for (long jj = -M; jj <= M; ++jj)
      check("product_h", {i, jj}, hyperbolic_unit(i) * hyperbolic_unit(jj), hyperbolic_unit(i + jj) * Integer(2));
  }

  // Lemma proj_h with a = 1 and f = rank: h_{2i}(1) b = rank(b) h_{2(i+j)}(1), b of degree 2j.
  for (long i = -M; i <= M; ++i)
    for (int k = -1; k <= 1; ++k) {
      const std::pair<std::string, GWElem> bs[] = {
          {"gamma^k", GWElem::gamma(k)}, {"eps*gamma^k", E.shift(k)}, {"tau*gamma^k", T.shift(k)}};
      for (const auto& [name, b] : bs) {
        const long deg = *b.degree();
        check("proj_h", {i, long(k), name}, hyperbolic_unit(i) * b,
              hyperbolic_unit(i + deg / 2) * rank(b));
      }
    }

  for (long m = 1; m <= opts.max_star; ++m)
    for (long n = 1; n <= opts.max_star; ++n) check("m_n_star", {m, n}, n_star(m * n), n_star(m) * n_star(n));

  for (int n = 1; n <= opts.max_witness; ++n) {
    const GWElem w = omega(n);
    if (n % 2 == 1) {
      const long m = (n - 1) / 2;
      const GWElem lhs = w * ((one + E) * Integer(m) + (m % 2 ? E : one));
      const GWElem rhs = GWElem::gamma(static_cast<int>(m)) * Integer(long(n) * n * (m % 2 ? -1 : 1));
      check("localization_odd", {long(n)}, lhs, rhs);
    } else {
      check("omega_sq", {long(n)}, w * w, n_star(n).shift(n - 1) * Integer(long(n) * n * n));
    }
  }
  r.sort();
  return r;
}

}  // namespace gwadams::gw
