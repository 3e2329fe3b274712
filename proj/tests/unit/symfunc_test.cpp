#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "gwadams/symfunc.hpp"

using namespace gwadams;
using namespace gwadams::sym;
using poly::MultiPoly;

namespace {

MultiPoly var(const poly::ContextPtr& c, const std::string& n, int e = 1) { return MultiPoly::variable(c, n, e); }

// Independent oracle for the t^n coefficient of prod_{i,j <= m}(1 + t U_i V_j):
// sum over n-subsets of the m*m factor list.
MultiPoly brute_P_coefficient(int n, int m, const poly::ContextPtr& ctx) {
  std::vector<MultiPoly> factors;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) factors.push_back(var(ctx, "U" + std::to_string(i)) * var(ctx, "V" + std::to_string(j)));
  MultiPoly sum(ctx);
  std::vector<bool> pick(factors.size(), false);
  if (n > static_cast<int>(factors.size())) return sum;
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    MultiPoly term = MultiPoly::constant(ctx, 1);
    for (std::size_t f = 0; f < factors.size(); ++f)
      if (pick[f]) term *= factors[f];
    sum += term;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return sum;
}

}  // namespace

TEST(Symfunc, Elementary) {
  auto u = family_context({{"U", 2}});
  EXPECT_EQ(elementary(2, 1), var(u, "U1") + var(u, "U2"));
  EXPECT_EQ(elementary(2, 2), var(u, "U1") * var(u, "U2"));
  EXPECT_TRUE(elementary(2, 3).is_zero());
  EXPECT_EQ(elementary(2, 0), MultiPoly::constant(u, 1));
}

TEST(Symfunc, ReduceExamples) {
  auto u = family_context({{"U", 2}});
  auto x = family_context({{"X", 2}});
  auto U1 = var(u, "U1"), U2 = var(u, "U2");
  auto X1 = var(x, "X1"), X2 = var(x, "X2");
  EXPECT_EQ(symmetric_reduce(U1 * U1 + U2 * U2), X1 * X1 - poly::Integer(2) * X2);
  EXPECT_EQ(symmetric_reduce(U1 * U2), X2);
  auto p = U1 * U1 * U2 + U1 * U2 * U2;
  auto q = symmetric_reduce(p);
  EXPECT_EQ(q, X1 * X2);
  auto ux = family_context({{"X", 2}, {"U", 2}});
  EXPECT_EQ(restrict_to(expand_elementary(poly::embed(q, ux), family("X", 2), family("U", 2), ux), u), p);
}

TEST(Symfunc, NonSymmetricInputNamesTransposition) {
  auto u = family_context({{"U", 3}});
  auto p = var(u, "U1") * var(u, "U1") + var(u, "U2") * var(u, "U2");
  try {
    symmetric_reduce(p);
    FAIL() << "expected SymmetryError";
  } catch (const SymmetryError& e) {
    EXPECT_NE(std::string(e.what()).find("(U2 U3)"), std::string::npos) << e.what();
  }
}

TEST(Symfunc, UniversalPValues) {
  EXPECT_EQ(poly::to_text(universal_P(0).value), "1");
  EXPECT_EQ(poly::to_text(universal_P(1).value), "X1*Y1");
  auto p2 = universal_P(2).value;
  auto c = p2.context();
  auto want = var(c, "X1", 2) * var(c, "Y2") + var(c, "X2") * var(c, "Y1", 2) - poly::Integer(2) * var(c, "X2") * var(c, "Y2");
  EXPECT_EQ(p2, want);
}

TEST(Symfunc, UniversalPAgainstBruteForce) {
  for (int n = 1; n <= 3; ++n) {
    const int m = n;
    auto xyuv = family_context({{"X", m}, {"Y", m}, {"U", m}, {"V", m}});
    auto uv = family_context({{"U", m}, {"V", m}});
    auto p = poly::embed(universal_P(n).value, xyuv);
    p = expand_elementary(p, family("X", m), family("U", m), xyuv);
    p = expand_elementary(p, family("Y", m), family("V", m), xyuv);
    EXPECT_EQ(restrict_to(p, uv), brute_P_coefficient(n, m, uv)) << "n=" << n;
  }
}

TEST(Symfunc, UniversalQSimpleCases) {
  for (int j = 1; j <= 4; ++j) EXPECT_EQ(poly::to_text(universal_Q(1, j).value), "X" + std::to_string(j));
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(poly::to_text(universal_Q(i, 1).value), "X" + std::to_string(i));
}

TEST(Symfunc, UniversalQ22) {
  // Oracle: expand prod_{a<b<=4}(1 + U_a U_b t) by hand, take t^2, reduce.
  auto u = family_context({{"U", 4}});
  std::vector<MultiPoly> pairs;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) pairs.push_back(var(u, "U" + std::to_string(a)) * var(u, "U" + std::to_string(b)));
  MultiPoly t2(u);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) t2 += pairs[i] * pairs[j];
  auto q = universal_Q(2, 2).value;
  EXPECT_EQ(q, symmetric_reduce(t2));
  // Q_{2,2} = X1 X3 - X4.
  auto c = q.context();
  EXPECT_EQ(q, var(c, "X1") * var(c, "X3") - var(c, "X4"));
}

TEST(Symfunc, RMethodsAgree) {
  EXPECT_EQ(poly::to_text(universal_R(1, RMethod::direct).value), "X1*Y1*Z1");
  for (int n = 0; n <= 2; ++n)
    EXPECT_EQ(universal_R(n, RMethod::direct).value, universal_R(n, RMethod::composed).value) << n;
}

TEST(SymfuncProperty, RoundTripRandomSymmetric) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    auto u = family_context({{"U", m}});
    // Symmetrize a random monomial sum over all permutations.
    MultiPoly p(u);
    const int nterms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < nterms; ++k) {
      std::vector<int> e(m);
      for (auto& x : e) x = std::uniform_int_distribution<int>(0, 3)(rng);
      const int c = std::uniform_int_distribution<int>(-5, 5)(rng);
      std::vector<int> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        poly::Monomial mono{std::vector<std::int32_t>(m)};
        for (int i = 0; i < m; ++i) mono.exps[i] = e[perm[i]];
        p += MultiPoly::monomial(u, mono, c);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    auto q = symmetric_reduce(p);
    auto ux = family_context({{"X", m}, {"U", m}});
    EXPECT_EQ(restrict_to(expand_elementary(poly::embed(q, ux), family("X", m), family("U", m), ux), u), p);
  }
}

TEST(Symfunc, AppendixSuitesPass) {
  auto a = check_appendix_a(4);
  for (const auto& e : a.entries) EXPECT_EQ(e.status, Status::pass) << e.lemma << params_text(e.params);
  auto b = check_appendix_b({});
  for (const auto& e : b.entries)
    EXPECT_EQ(e.status, Status::pass) << e.lemma << params_text(e.params) << " " << e.lhs.dump() << " vs " << e.rhs.dump();
  EXPECT_GT(b.entries.size(), 40u);
}

TEST(Symfunc, RabcExampleThroughComposedR4) {
  auto r4 = universal_R(4, RMethod::composed).value;
  auto xyz = poly::VarContext::make(std::vector<std::string>{"x", "y", "z"});
  std::map<std::string, MultiPoly> bind;
  for (const auto& v : r4.context()->vars()) {
    const int k = std::stoi(v.name.substr(1));
    MultiPoly val = k == 1 ? var(xyz, v.name[0] == 'X' ? "x" : v.name[0] == 'Y' ? "y" : "z")
                           : (k == 2 ? MultiPoly::constant(xyz, 1) : MultiPoly(xyz));
    bind.emplace(v.name, val);
  }
  EXPECT_EQ(poly::to_text(poly::substitute(r4, bind, xyz)),
            "x^2*y^2*z^2 + x^4 + y^4 + z^4 - 4*x^2 - 4*y^2 - 4*z^2 + 6");
}
