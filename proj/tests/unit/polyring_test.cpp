#include <gtest/gtest.h>

#include <random>

#include "gwadams/poly_json.hpp"
#include "gwadams/polyring.hpp"
#include "gwadams/series.hpp"

using namespace gwadams;
using namespace gwadams::poly;

namespace {

ContextPtr xy() { return VarContext::make(std::vector<std::string>{"x", "y"}); }

MultiPoly random_poly(std::mt19937& rng, const ContextPtr& ctx, int max_terms = 5, int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms), coef(-9, 9);
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m{std::vector<std::int32_t>(ctx->size(), 0)};
    for (std::size_t v = 0; v < ctx->size(); ++v) {
      const int lo = ctx->var(v).laurent_allowed ? -max_exp : 0;
      m.exps[v] = std::uniform_int_distribution<int>(lo, max_exp)(rng);
    }
    terms.push_back({m, coef(rng)});
  }
  return MultiPoly::from_terms(ctx, terms);
}

ContextPtr random_context(std::mt19937& rng) {
  const int nv = std::uniform_int_distribution<int>(1, 6)(rng);
  std::vector<VarId> vars;
  for (int i = 0; i < nv; ++i) vars.push_back({"v" + std::to_string(i), (rng() & 1U) != 0});
  return VarContext::make(vars);
}

}  // namespace

TEST(Polyring, AddExamples) {
  auto c = xy();
  auto x = MultiPoly::variable(c, "x"), y = MultiPoly::variable(c, "y");
  EXPECT_TRUE((x + -x).is_zero());
  EXPECT_EQ(to_text((x + y) + y), "x + 2*y");
  EXPECT_EQ((x * x - x.one()) + x.one(), x * x);
}

TEST(Polyring, MulExamples) {
  auto c = xy();
  auto x = MultiPoly::variable(c, "x"), y = MultiPoly::variable(c, "y");
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);

  auto g = VarContext::make({VarId{"gamma", true}});
  auto gm = MultiPoly::variable(g, "gamma");
  EXPECT_EQ(gm * MultiPoly::variable(g, "gamma", -1), gm.one());
}

TEST(Polyring, NegativeExponentOnPolynomialVariable) {
  auto c = xy();
  EXPECT_THROW(MultiPoly::variable(c, "x", -1), ExponentError);
}

TEST(Polyring, ContextMismatch) {
  auto a = MultiPoly::variable(xy(), "x");
  auto b = MultiPoly::variable(VarContext::make(std::vector<std::string>{"x", "z"}), "x");
  EXPECT_THROW(a + b, ContextError);
  EXPECT_THROW(VarContext::make(std::vector<std::string>{"x", "x"}), ContextError);
}

TEST(Polyring, SeriesProductOfLinearFactors) {
  auto c = VarContext::make(std::vector<std::string>{"x", "y"});
  auto x = MultiPoly::variable(c, "x"), y = MultiPoly::variable(c, "y"), one = x.one();
  PolySeries f({one, x}, 2, one), g({one, y}, 2, one);
  auto fg = series_mul(f, g);
  EXPECT_EQ(fg[0], one);
  EXPECT_EQ(fg[1], x + y);
  EXPECT_EQ(fg[2], x * y);
}

TEST(Polyring, SubstituteExamples) {
  auto src = VarContext::make(std::vector<std::string>{"x"});
  auto tgt = VarContext::make({VarId{"a", true}});
  auto x = MultiPoly::variable(src, "x");
  auto a = MultiPoly::variable(tgt, "a");
  auto ainv = MultiPoly::variable(tgt, "a", -1);
  auto r = substitute(x * x, {{"x", a + ainv}}, tgt);
  EXPECT_EQ(r, a * a + MultiPoly::constant(tgt, 2) + ainv * ainv);
  EXPECT_EQ(substitute(x + x.one(), {{"x", MultiPoly(tgt)}}, tgt), MultiPoly::constant(tgt, 1));
}

TEST(Polyring, SubstituteIntoLaurentNeedsUnit) {
  auto src = VarContext::make({VarId{"g", true}});
  auto tgt = VarContext::make(std::vector<std::string>{"y"});
  auto p = MultiPoly::variable(src, "g", -1);
  auto y = MultiPoly::variable(tgt, "y");
  EXPECT_THROW(substitute(p, {{"g", y + y.one()}}, tgt), SubstitutionError);
  EXPECT_THROW(substitute(p, {{"g", y * Integer(2)}}, tgt), SubstitutionError);
}

TEST(Polyring, SeriesInverseGeometric) {
  auto c = VarContext::make(std::vector<std::string>{"x"});
  auto x = MultiPoly::variable(c, "x"), one = x.one();
  PolySeries f({one, x}, 2, one);
  auto inv = series_inverse(f);
  EXPECT_EQ(inv[1], -x);
  EXPECT_EQ(inv[2], x * x);
  EXPECT_EQ(series_mul(f, inv), PolySeries::identity(2, one));
  PolySeries bad({one + one, x}, 2, one);
  EXPECT_THROW(series_inverse(bad), InvertibilityError);
  EXPECT_THROW(f[3], OrderError);
}

TEST(Polyring, SeriesSquareOfRankTwo) {
  auto c = VarContext::make({VarId{"tau", false}, VarId{"gamma", true}});
  auto tau = MultiPoly::variable(c, "tau"), gam = MultiPoly::variable(c, "gamma"), one = tau.one();
  PolySeries f({one, tau, gam}, 2, one);
  EXPECT_EQ(series_mul(f, f)[2], tau * tau + gam * Integer(2));
}

TEST(Polyring, GradedDegree) {
  auto c = VarContext::make({VarId{"tau", false}, VarId{"gamma", true}, VarId{"u1", false},
                             VarId{"u2", false}, VarId{"u3", false}});
  std::map<std::string, long> w{{"tau", 2}, {"gamma", 4}, {"u1", 2}, {"u2", 2}, {"u3", 2}};
  auto v = [&](const char* n, int e = 1) { return MultiPoly::variable(c, n, e); };
  EXPECT_EQ(graded_degree(v("tau", 2) * v("gamma", -1), w), 0);
  EXPECT_EQ(graded_degree(v("u1") * v("u2") * v("u3") * v("gamma", -1), w), 2);
  EXPECT_EQ(graded_degree(v("tau") + v("tau").one(), w), std::nullopt);
}

TEST(Polyring, Rendering) {
  auto c = VarContext::make(std::vector<std::string>{"X1", "Y1"});
  auto p = MultiPoly::variable(c, "X1") * MultiPoly::variable(c, "Y1");
  EXPECT_EQ(to_text(p), "X1*Y1");
  EXPECT_EQ(to_latex(p * p - p.one() * Integer(3)), "X_{1}^{2} Y_{1}^{2} - 3");
  EXPECT_EQ(to_text(p.zero()), "0");
}

TEST(Polyring, JsonRoundTrip) {
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    auto ctx = random_context(rng);
    auto p = random_poly(rng, ctx);
    EXPECT_EQ(poly_from_json(to_json(p)), p);
  }
  EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"({"vars":[]})")), ParseError);
}

TEST(PolyringProperty, RingAxioms) {
  std::mt19937 rng(20240611);
  for (int k = 0; k < 1000; ++k) {
    auto ctx = random_context(rng);
    auto a = random_poly(rng, ctx), b = random_poly(rng, ctx), c = random_poly(rng, ctx);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(PolyringProperty, SubstituteIsHomomorphism) {
  std::mt19937 rng(99);
  auto src = VarContext::make(std::vector<std::string>{"x", "y", "z"});
  auto tgt = VarContext::make({VarId{"a", true}, VarId{"b", false}, VarId{"y", false}});
  for (int k = 0; k < 200; ++k) {
    auto p = random_poly(rng, src, 4, 2), q = random_poly(rng, src, 4, 2);
    std::map<std::string, MultiPoly> bind{{"x", random_poly(rng, tgt, 3, 2)},
                                          {"z", random_poly(rng, tgt, 3, 2)}};
    ASSERT_EQ(substitute(p * q, bind, tgt), substitute(p, bind, tgt) * substitute(q, bind, tgt));
    ASSERT_EQ(substitute(p + q, bind, tgt), substitute(p, bind, tgt) + substitute(q, bind, tgt));
  }
}

TEST(PolyringProperty, SeriesGroup) {
  std::mt19937 rng(5);
  auto ctx = VarContext::make(std::vector<std::string>{"x", "y"});
  for (int k = 0; k < 60; ++k) {
    const int order = std::uniform_int_distribution<int>(1, 12)(rng);
    auto one = MultiPoly::constant(ctx, 1);
    auto make = [&] {
      std::vector<MultiPoly> cs{one};
      for (int i = 1; i <= order; ++i) cs.push_back(random_poly(rng, ctx, 2, 1));
      return PolySeries(cs, order, one);
    };
    auto f = make(), g = make();
    ASSERT_EQ(series_mul(f, series_inverse(f)), PolySeries::identity(order, one));
    ASSERT_EQ(series_inverse(series_mul(f, g)), series_mul(series_inverse(f), series_inverse(g)));
    ASSERT_EQ(series_pow(f, -2), series_inverse(series_mul(f, f)));
  }
}

TEST(PolyringProperty, RenormalizeIsIdentity) {
  std::mt19937 rng(11);
  for (int k = 0; k < 300; ++k) {
    auto ctx = random_context(rng);
    auto p = random_poly(rng, ctx) * random_poly(rng, ctx);
    ASSERT_EQ(p.renormalized(), p);
    for (std::size_t i = 1; i < p.size(); ++i) ASSERT_TRUE(grlex_greater(p.terms()[i - 1].mono, p.terms()[i].mono));
    for (const auto& t : p.terms()) ASSERT_NE(t.coeff, 0);
  }
}
