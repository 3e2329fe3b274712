#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gwadams/gwring.hpp"

using namespace gwadams;
using namespace gwadams::gw;

namespace {

const GWElem E = GWElem::eps(), T = GWElem::tau(), G = GWElem::gamma(), ONE = GWElem::one();

// Independent oracle: the 4x4 integer matrix model. On the Z-basis (1, eps, tau, gamma-shift
// bookkeeping aside) eps and tau act on Z^3 = span(1, eps, tau) with gamma = 1:
//   eps: 1 -> eps, eps -> 1, tau -> -tau
//   tau: 1 -> tau, eps -> -tau, tau -> 2 - 2 eps
// Products of words are checked against GWElem after collapsing gamma.
struct Vec3 {
  long a, b, c;
  bool operator==(const Vec3&) const = default;
};
Vec3 act_eps(Vec3 v) { return {v.b, v.a, -v.c}; }
Vec3 act_tau(Vec3 v) { return {2 * v.c, -2 * v.c, v.a - v.b}; }

Vec3 collapse(const GWElem& x) {
  Vec3 v{0, 0, 0};
  for (const auto& [k, t] : x.slots()) {
    v.a += t.a.get_si();
    v.b += t.b.get_si();
    v.c += t.c.get_si();
  }
  return v;
}

}  // namespace

TEST(Gwring, MultiplicationExamples) {
  EXPECT_EQ(h() * h(), h() * Integer(2));
  EXPECT_EQ(T * T, G * Integer(2) - E * G * Integer(2));
  EXPECT_TRUE(((ONE + E) * T).is_zero());
  EXPECT_EQ(to_text(T * T), "2*gamma - 2*eps*gamma");
}

TEST(Gwring, Rank) {
  EXPECT_EQ(rank(h()), 2);
  EXPECT_EQ(rank(T * T), 4);
  EXPECT_EQ(rank(E), -1);
  EXPECT_THROW(rank(ONE + T), GradingError);
}

TEST(Gwring, HyperbolicUnits) {
  EXPECT_EQ(hyperbolic_unit(0), ONE - E);
  EXPECT_EQ(hyperbolic_unit(1), T);
  EXPECT_EQ(hyperbolic_unit(3), T * G);
  EXPECT_EQ(hyperbolic_unit(-1), T.shift(-1));
  EXPECT_EQ(hyperbolic_unit(-2), h().shift(-1));
  for (long i = -6; i <= 6; ++i) {
    EXPECT_EQ(G * hyperbolic_unit(i), hyperbolic_unit(i + 2));
    EXPECT_EQ(hyperbolic_unit(i).degree(), 2 * i);
  }
}

TEST(Gwring, NStar) {
  EXPECT_EQ(n_star(3), GWElem::integer(3));
  EXPECT_EQ(n_star(4), h() * Integer(2));
  EXPECT_EQ(n_star(6), n_star(2) * n_star(3));
  EXPECT_EQ(n_star(6), h() * Integer(3));
}

TEST(Gwring, Rendering) {
  EXPECT_EQ(to_text(T.shift(1) * Integer(8)), "8*tau*gamma");
  EXPECT_EQ(to_text(E.shift(1) * Integer(-2)), "-2*eps*gamma");
  EXPECT_EQ(to_pretty(GWElem::make(3, -6, 0, 1)), "3γ - 6εγ");
  EXPECT_EQ(to_pretty(T.shift(-1)), "τγ⁻¹");
  EXPECT_EQ(to_latex(GWElem::make(3, -6, 0, 1)), "3 \\gamma - 6 \\varepsilon \\gamma");
  EXPECT_EQ(to_text(GWElem()), "0");
  EXPECT_EQ(to_text(ONE), "1");
}

TEST(Gwring, JsonRoundTrip) {
  GWElem x = GWElem::make(1, 2, 3, -2) + GWElem::make(0, 0, 5, 1) + GWElem::make(7, 0, 0, 3);
  EXPECT_EQ(gw_from_json(to_json(x)), x);
  EXPECT_THROW(gw_from_json(nlohmann::json::parse(R"({"components":[{"deg":2,"gamma_min":0,"a":["1"]}]})")), ParseError);
  EXPECT_THROW(gw_from_json(nlohmann::json::parse(R"({"nope":1})")), ParseError);
}

TEST(GwringProperty, WordConfluence) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 600; ++trial) {
    const int len = std::uniform_int_distribution<int>(0, 12)(rng);
    std::vector<int> word(len);
    for (auto& w : word) w = std::uniform_int_distribution<int>(0, 3)(rng);  // eps, tau, gamma, gamma^-1
    long a = 0, b = 0, d = 0;
    for (int w : word) (w == 0 ? a : w == 1 ? b : d) += (w == 3 ? -1 : 1);
    auto letter = [](int w) { return w == 0 ? GWElem::eps() : w == 1 ? GWElem::tau() : GWElem::gamma(w == 2 ? 1 : -1); };
    GWElem left = GWElem::one();
    for (int w : word) left = left * letter(w);
    std::shuffle(word.begin(), word.end(), rng);
    GWElem right = GWElem::one();
    for (auto it = word.rbegin(); it != word.rend(); ++it) right = letter(*it) * right;
    ASSERT_EQ(left, right);
    ASSERT_EQ(left, word_normal_form(a, b, d));
    // Matrix model with gamma collapsed to 1.
    Vec3 v{1, 0, 0};
    for (int w : word) v = w == 0 ? act_eps(v) : w == 1 ? act_tau(v) : v;
    ASSERT_EQ(collapse(left), v);
  }
}

TEST(GwringProperty, RankAndDegreeLaws) {
  std::mt19937 rng(8);
  auto random_homogeneous = [&](int deg) {
    std::uniform_int_distribution<int> c(-5, 5);
    if (deg % 4 == 0) return GWElem::make(c(rng), c(rng), 0, deg / 4);
    return GWElem::make(0, 0, c(rng), (deg - 2) / 4);
  };
  for (int trial = 0; trial < 500; ++trial) {
    const int d1 = 2 * std::uniform_int_distribution<int>(-4, 4)(rng);
    const int d2 = 2 * std::uniform_int_distribution<int>(-4, 4)(rng);
    auto x = random_homogeneous(d1), y = random_homogeneous(d2);
    auto p = x * y;
    ASSERT_EQ(rank(p), rank(x) * rank(y));
    if (!p.is_zero()) {
      ASSERT_EQ(p.degree(), d1 + d2);
    }
  }
}

TEST(Gwring, CoefficientSuiteWithClosedOmega) {
  // Closed-form omega used only as an injected oracle here.
  auto omega = [](int n) {
    if (n == 0) return GWElem();
    if (n % 2 == 0) return T.shift((n - 2) / 2) * Integer(n * n / 2);
    const int m = (n - 1) / 2;
    return (h() * Integer(m) + minus_one_form().pow(m)).shift(m) * Integer(n);
  };
  auto r = check_coefficient_identities(omega);
  for (const auto& e : r.entries) EXPECT_EQ(e.status, Status::pass) << e.lemma << params_text(e.params);
  EXPECT_GT(r.entries.size(), 100u);
}
