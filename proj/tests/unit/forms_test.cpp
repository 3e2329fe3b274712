#include <gtest/gtest.h>

#include <random>

#include "gwadams/forms.hpp"

using namespace gwadams;
using namespace gwadams::forms;

namespace {

const GramForm Hp = hyperbolic(1, 1);
const GramForm Hm = hyperbolic(1, -1);

Matrix random_matrix(std::mt19937& rng, std::size_t n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  Matrix b;
  do b = random_matrix(rng, n);
  while (b.determinant() == 0);
  return b;
}

GramForm random_form(std::mt19937& rng, std::size_t n, int sym) {
  Matrix a = random_matrix(rng, n);
  return GramForm(a + a.transpose() * Rational(sym), sym);
}

GramForm congruent(const GramForm& f, const Matrix& b) { return GramForm(b.transpose() * f.matrix * b, f.sym); }

}  // namespace

TEST(Forms, ExteriorPowers) {
  EXPECT_EQ(ext_power(Hp, 1), Hp);
  EXPECT_EQ(ext_power(Hp, 2), GramForm(Matrix{{-1}}, 1));
  EXPECT_EQ(ext_power(Hm, 2), GramForm(Matrix{{1}}, 1));
  EXPECT_EQ(ext_power(Hm, 0), GramForm(Matrix{{1}}, 1));
  EXPECT_THROW(ext_power(Hm, 3), IndexError);
  EXPECT_THROW(ext_power(Hm, -1), IndexError);
  EXPECT_EQ(sym_power(diagonal_form({3}), 2), diagonal_form({18}));
  // Sym^2 of <a, b>: v1^2, v1 v2, v2^2 pair to 2a^2, ab, 2b^2.
  EXPECT_EQ(sym_power(diagonal_form({2, 5}), 2), diagonal_form({8, 10, 50}));
  EXPECT_EQ(sym_power(Hm, 2).sym, 1);
  EXPECT_EQ(ext_power(hyperbolic(2, -1), 3).sym, -1);
}

TEST(Forms, Constructions) {
  EXPECT_EQ(tensor(diagonal_form({2}), diagonal_form({-3})), diagonal_form({-6}));
  EXPECT_EQ(tensor(Hm, Hm).sym, 1);
  EXPECT_EQ(scale(2, diagonal_form({1})), diagonal_form({2}));
  EXPECT_THROW(direct_sum(Hp, Hm), TypeError);
  EXPECT_EQ(direct_sum(Hm, Hm).rank(), 4u);
  EXPECT_EQ(hyperbolic(1, 1).matrix, (Matrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(hyperbolic(1, -1).matrix, (Matrix{{0, 1}, {-1, 0}}));
  EXPECT_EQ(hyperbolic(2, 1).rank(), 4u);
  EXPECT_EQ(dual(diagonal_form({2, 3})), diagonal_form({Rational(1, 2), Rational(1, 3)}));
  EXPECT_THROW(GramForm(Matrix{{0, 1}, {2, 0}}, 1), TypeError);
  EXPECT_THROW(dual(diagonal_form({0})), DegeneracyError);
}

TEST(Forms, Congruence) {
  EXPECT_TRUE(check_congruence(Matrix::identity(2), Hp, Hp));
  EXPECT_FALSE(check_congruence(Matrix::identity(2), Hp, diagonal_form({1, -1})));
  // Columns (1, 1) and (1/2, -1/2) span isotropic lines of <1, -1> pairing to 1.
  EXPECT_TRUE(check_congruence(Matrix{{1, Rational(1, 2)}, {1, Rational(-1, 2)}}, diagonal_form({1, -1}),
                               GramForm(Matrix{{0, 1}, {1, 0}}, 1)));
  EXPECT_THROW(check_congruence(Matrix{{1, 1}, {1, 1}}, Hp, Hp), WitnessError);
}

TEST(Forms, FunctorialityOfExteriorPowers) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 2 + trial % 3;
    const int sym = trial % 2 ? -1 : 1;
    const GramForm f = random_form(rng, r, sym);
    const Matrix b = random_invertible(rng, r);
    for (int n = 0; n <= std::min<int>(3, r); ++n) {
      const GramForm lhs = ext_power(congruent(f, b), n);
      EXPECT_TRUE(check_congruence(ext_power_map(b, n), ext_power(f, n), lhs));
      EXPECT_EQ(lhs.rank(), subsets(r, n).size());
      EXPECT_EQ(lhs.sym, (sym == -1 && n % 2) ? -1 : 1);
    }
  }
}

TEST(Forms, Invariants) {
  const auto a = invariants(diagonal_form({1, -1}));
  EXPECT_EQ(a.rank, 2);
  EXPECT_EQ(a.signature, 0);
  EXPECT_EQ(a.disc, -1);
  for (const auto& [p, h] : a.hasse) EXPECT_EQ(h, 1) << p;
  const auto b = invariants(diagonal_form({1, 1}));
  EXPECT_EQ(b.signature, 2);
  EXPECT_EQ(b.disc, 1);
  EXPECT_EQ(invariants(diagonal_form({2})).disc, 2);
  EXPECT_FALSE(gw_equal(diagonal_form({1}), diagonal_form({2})));
  EXPECT_EQ(invariants(diagonal_form({Rational(12, 5)})).disc, 15);
  // <3, 3> and <1, 1> agree except for the Hasse symbol at 3.
  const auto c = invariants(diagonal_form({3, 3}));
  EXPECT_EQ(c.disc, 1);
  EXPECT_EQ(c.hasse_at(3), -1);
  EXPECT_FALSE(gw_equal(diagonal_form({3, 3}), diagonal_form({1, 1})));
  EXPECT_TRUE(gw_equal(diagonal_form({2, 2}), diagonal_form({1, 1})));
  EXPECT_TRUE(gw_equal(Hp, diagonal_form({1, -1})));
  EXPECT_THROW(invariants(Hm), TypeError);
  EXPECT_THROW(invariants(diagonal_form({1, 0})), DegeneracyError);
  // Hyperbolic plane squared: determinant class <-1>.
  EXPECT_EQ(invariants(ext_power(Hp, 2)).disc, -1);
}

TEST(Forms, HilbertSymbolTable) {
  EXPECT_EQ(hilbert_symbol(-1, -1, kRealPlace), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, 2), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, 3), 1);
  EXPECT_EQ(hilbert_symbol(2, 5, 5), -1);
  EXPECT_EQ(hilbert_symbol(2, 3, 3), -1);
  EXPECT_EQ(hilbert_symbol(3, 3, 3), -1);
  EXPECT_EQ(hilbert_symbol(5, 5, 5), 1);
  EXPECT_EQ(hilbert_symbol(2, 7, 2), 1);
  EXPECT_EQ(hilbert_symbol(3, 5, 2), 1);
  EXPECT_EQ(hilbert_symbol(3, 7, 2), -1);
  EXPECT_EQ(hilbert_symbol(2, 3, 2), -1);
}

TEST(Forms, HilbertSymbolLaws) {
  const int places[] = {0, 2, 3, 5, 7, 11, 13};
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-30, 30);
  auto nz = [&] {
    int v;
    do v = d(rng);
    while (v == 0);
    return Integer(v);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Integer a = nz(), b = nz(), c = nz();
    for (int p : places) {
      const Integer P = p;
      EXPECT_EQ(hilbert_symbol(a, b, P), hilbert_symbol(b, a, P));
      EXPECT_EQ(hilbert_symbol(a, b * c, P), hilbert_symbol(a, b, P) * hilbert_symbol(a, c, P));
      EXPECT_EQ(hilbert_symbol(a, -a, P), 1);
      EXPECT_EQ(hilbert_symbol(a, b * b, P), 1);
      if (a != 1) {
        EXPECT_EQ(hilbert_symbol(a, 1 - a, P), 1);
      }
    }
    // Product over all places: primes up to 61 cover every divisor here.
    int prod = hilbert_symbol(a, b, 0);
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61})
      prod *= hilbert_symbol(a, b, p);
    EXPECT_EQ(prod, 1) << a << " " << b;
  }
}

TEST(Forms, GWIdentityProperties) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    GramForm f, g;
    do f = random_form(rng, 3, 1);
    while (!f.nondegenerate());
    do g = random_form(rng, 3, 1);
    while (!g.nondegenerate());
    const Matrix b = random_invertible(rng, 3);
    EXPECT_TRUE(gw_equal(f, f));
    EXPECT_EQ(gw_equal(f, g), gw_equal(g, f));
    EXPECT_TRUE(gw_equal(f, congruent(f, b)));
    EXPECT_EQ(gw_equal(congruent(f, b), g), gw_equal(f, g));
    // Witt cancellation: f + g - g = f.
    EXPECT_TRUE(gw_identity_check({{1, f}, {1, g}, {-1, g}}, {{1, f}}));
  }
  std::string why;
  EXPECT_FALSE(gw_identity_check({{1, diagonal_form({1})}}, {{1, Hp}}, &why));
  EXPECT_EQ(why, "rank 1 vs 2");
  EXPECT_FALSE(gw_identity_check({{1, diagonal_form({1})}}, {{1, diagonal_form({2})}}));
}

TEST(Forms, ClassEquations) {
  const GramForm e = Hm;
  const GramForm lhs = ext_power(tensor(e, e), 2);
  EXPECT_TRUE(gw_identity_check({{1, lhs}, {1, diagonal_form({1, 1})}}, {{1, tensor(e, e)}, {1, tensor(e, e)}}));
  const GramForm v = diagonal_form({1, -1});
  EXPECT_TRUE(gw_identity_check({{1, tensor(v, v)}},
                                {{1, scale(2, sym_power(v, 2))}, {1, scale(2, ext_power(v, 2))}}));
}

TEST(Forms, Json) {
  const GramForm f(Matrix{{0, Rational(1, 2)}, {Rational(-1, 2), 0}}, -1);
  const auto j = to_json(f);
  EXPECT_EQ(j.dump(), R"({"matrix":[["0","1/2"],["-1/2","0"]],"sym":"skew"})");
  EXPECT_EQ(gram_from_json(j), f);
  EXPECT_EQ(gram_from_json(nlohmann::json::parse(R"({"sym":"symmetric","matrix":[[1,"2/4"],["1/2",3]]})")),
            GramForm(Matrix{{1, Rational(1, 2)}, {Rational(1, 2), 3}}, 1));
  EXPECT_THROW(gram_from_json(nlohmann::json::parse(R"({"sym":"symmetric","matrix":[[1,2],[3,4]]})")), ParseError);
  EXPECT_THROW(gram_from_json(nlohmann::json::parse(R"({"sym":"odd","matrix":[[1]]})")), ParseError);
  EXPECT_THROW(gram_from_json(nlohmann::json::parse(R"({"sym":"symmetric","matrix":[["x"]]})")), ParseError);
  EXPECT_THROW(gram_from_json(nlohmann::json::parse(R"({"sym":"symmetric","matrix":[["1/0"]]})")), ParseError);
  EXPECT_EQ(to_text(Hm), "[[0,1],[-1,0]] skew");
}

TEST(Forms, SuitePasses) {
  const auto r = check_forms();
  EXPECT_GE(r.entries.size(), 200u);
  for (const auto& e : r.entries) EXPECT_EQ(e.status, Status::pass) << e.lemma << params_text(e.params) << e.note;
  std::size_t hilbert = 0, pairs = 0;
  for (const auto& e : r.entries) {
    hilbert += e.lemma == "hilbert_product";
    pairs += e.lemma == "lambda_22" && std::get<long>(e.params[1]) == 2;
  }
  EXPECT_GE(hilbert, 100u);
  EXPECT_GE(pairs, 10u);
}
