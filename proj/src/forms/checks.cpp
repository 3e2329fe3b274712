#include <random>

#include "gwadams/forms.hpp"

namespace gwadams::forms {

namespace {

const GramForm& plane() {
  static const GramForm p(Matrix{{0, 1}, {-1, 0}}, -1);
  return p;
}

std::string sign_name(int d) { return d == 1 ? "+" : "-"; }

// The whole exterior algebra, degrees 0..r stacked on the sorted-tuple bases.
struct ExtAlgebra {
  std::vector<std::vector<std::size_t>> basis;
  std::vector<std::size_t> offset;  // first index of each degree
  Matrix form;                      // mixed symmetry: degree i is (-1)^i-symmetric
};

ExtAlgebra ext_algebra(const GramForm& v) {
  ExtAlgebra a;
  Matrix m;
  for (std::size_t i = 0; i <= v.rank(); ++i) {
    a.offset.push_back(a.basis.size());
    for (auto& s : subsets(v.rank(), i)) a.basis.push_back(s);
    m = i == 0 ? ext_power(v, 0).matrix : block_diagonal(m, ext_power(v, i).matrix);
  }
  a.offset.push_back(a.basis.size());
  a.form = std::move(m);
  return a;
}

// s_V for V an orthogonal sum of m symplectic planes, assembled plane by plane:
// s(1) = v1 v2, s(v1) = v1, s(v2) = v2, s(v1 v2) = 1.
Matrix s_witness(int m, const ExtAlgebra& alg) {
  const Matrix s1{{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}};
  const std::vector<std::vector<std::size_t>> plane_basis{{}, {0}, {1}, {0, 1}};
  Matrix k = Matrix::identity(1);
  for (int p = 0; p < m; ++p) k = kronecker(k, s1);
  // Kronecker index (digits base 4, first plane most significant) -> algebra index.
  const std::size_t n = k.rows();
  std::vector<std::size_t> to_alg(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::vector<std::size_t> set;
    std::size_t rest = idx;
    std::vector<std::size_t> digits(m);
    for (int p = m - 1; p >= 0; --p) {
      digits[p] = rest % 4;
      rest /= 4;
    }
    for (int p = 0; p < m; ++p)
      for (auto e : plane_basis[digits[p]]) set.push_back(2 * p + e);
    to_alg[idx] = std::find(alg.basis.begin(), alg.basis.end(), set) - alg.basis.begin();
  }
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(to_alg[i], to_alg[j]) = k(i, j);
  return s;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r;
  for (std::size_t i = from; i < to; ++i) r.push_back(i);
  return r;
}

void check_lambda_n_rank_n(VerificationReport& r, int max_m) {
  for (int m = 1; m <= max_m; ++m) {
    GramForm v = plane();
    for (int p = 1; p < m; ++p) v = direct_sum(v, plane());
    const int n = 2 * m;
    const ExtAlgebra alg = ext_algebra(v);
    const Matrix s = s_witness(m, alg);
    const bool whole = s.determinant() != 0 && s.transpose() * alg.form * s == alg.form;
    r.add("lambda_n_rank_n", {long(m), std::string("sum")}, whole,
          "s_V^T (ext V) s_V", "ext V");
    for (int i = 0; i <= n; ++i) {
      const auto cols = range(alg.offset[i], alg.offset[i + 1]);
      const auto rows = range(alg.offset[n - i], alg.offset[n - i + 1]);
      // s_V must vanish outside the block ext^i -> ext^{n-i}.
      bool graded = true;
      for (std::size_t a = 0; a < s.rows(); ++a)
        for (auto c : cols)
          if (s(a, c) != 0 && (a < rows.front() || a > rows.back())) graded = false;
      const GramForm fi = ext_power(v, i), fni = ext_power(v, n - i);
      const bool ok = graded && check_congruence(s.submatrix(rows, cols), fni, fi);
      r.add("lambda_n_rank_n", {long(m), long(i)}, ok, to_json(fi), to_json(fni));
    }
  }
}

// Columns v_a v_b -> v_a (x) v_b +- v_b (x) v_a.
Matrix symmetrizer(std::size_t r, int sign) {
  const auto basis = sign == 1 ? multisets(r, 2) : subsets(r, 2);
  Matrix b(r * r, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const std::size_t a = basis[c][0], d = basis[c][1];
    b(a * r + d, c) += 1;
    b(d * r + a, c) += sign;
  }
  return b;
}

Matrix swap_matrix(std::size_t r) {
  Matrix s(r * r, r * r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) s(b * r + a, a * r + b) = 1;
  return s;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

void check_tensor_square(VerificationReport& r) {
  const std::pair<std::string, GramForm> spaces[] = {{"<1,-1>", diagonal_form({1, -1})}, {"plane", plane()}};
  for (const auto& [name, v] : spaces) {
    const std::size_t n = v.rank();
    const GramForm v2 = tensor(v, v);
    const GramForm s2 = scale(2, sym_power(v, 2)), e2 = scale(2, ext_power(v, 2));
    const Matrix bp = symmetrizer(n, 1), bm = symmetrizer(n, -1), sw = swap_matrix(n);
    const bool plus = sw * bp == bp && check_isometric_embedding(bp, v2, s2);
    const bool minus = sw * bm == -bm && check_isometric_embedding(bm, v2, e2);
    r.add("+-_SymLambda", {name, std::string("+")}, plus, to_json(v2), to_json(s2));
    r.add("+-_SymLambda", {name, std::string("-")}, minus, to_json(v2), to_json(e2));
    const GramForm split = direct_sum(s2, e2);
    const bool iso = check_congruence(hstack(bp, bm), v2, split);
    r.add("tens2_decomp", {name}, iso, to_json(v2), to_json(split));
  }
}

// A random rank-2 form of the given type, pushed through a random basis change.
GramForm random_rank2(std::mt19937& rng, int sym) {
  std::uniform_int_distribution<int> coef(-6, 6), nz(1, 9);
  auto nonzero = [&] { return Rational(std::bernoulli_distribution(0.5)(rng) ? nz(rng) : -nz(rng)); };
  Matrix base = sym == 1 ? Matrix::diagonal({nonzero(), nonzero()}) : Matrix{{0, nonzero()}, {0, 0}};
  if (sym == -1) base(1, 0) = -base(0, 1);
  Matrix b;
  do {
    b = Matrix{{coef(rng), coef(rng)}, {coef(rng), coef(rng)}};
  } while (b.determinant() == 0);
  return GramForm(b.transpose() * base * b, sym);
}

void check_lambda_ef(VerificationReport& r, std::mt19937& rng) {
  long k = 0;
  for (int se : {1, -1})
    for (int sf : {1, -1})
      for (int rep = 0; rep < 3; ++rep, ++k) {
        const GramForm e = random_rank2(rng, se), f = random_rank2(rng, sf);
        const GramForm lhs = ext_power(tensor(e, f), 2);
        const GramForm a = scale(2, tensor(sym_power(e, 2), ext_power(f, 2)));
        const GramForm b = scale(2, tensor(ext_power(e, 2), sym_power(f, 2)));
        std::string why;
        const bool ok = gw_identity_check({{1, lhs}}, {{1, a}, {1, b}}, &why);
        r.add("lambda_EF", {k}, ok, to_json(invariants(lhs)), to_json(invariants(direct_sum(a, b))), why);
      }
}

void check_lambda_22(VerificationReport& r, std::mt19937& rng, int pairs) {
  const GramForm one = diagonal_form({1});
  for (long k = 0; k < pairs; ++k) {
    const GramForm e = random_rank2(rng, -1), f = random_rank2(rng, -1);
    const GramForm ef = tensor(e, f);
    for (int n = 0; n <= 4; ++n) {
      const GramForm x = ext_power(ef, n);
      FormSum lhs{{1, x}}, rhs;
      if (n == 1 || n == 3) rhs = {{1, ef}};
      else if (n == 2) {
        lhs.push_back({2, one});
        rhs = {{1, tensor(e, e)}, {1, tensor(f, f)}};
      } else rhs = {{1, one}};
      std::string why;
      const bool ok = gw_identity_check(lhs, rhs, &why);
      r.add("lambda_22", {k, long(n)}, ok, to_json(invariants(x)), nlohmann::json(), why);
    }
    r.add("lambda_22", {k, 5L}, subsets(ef.rank(), 5).empty(), "0", "0");
  }
}

// F-part: tuples with at most (n-1)/2 vectors from E; its partner is the rest,
// rescaled by the inverse pairing so that the Gram becomes [[0, I], [delta I, 0]].
void check_lambda_hyp(VerificationReport& r) {
  for (int rk = 1; rk <= 2; ++rk)
    for (int n : {1, 3, 5})
      for (int delta : {1, -1}) {
        const std::vector<Param> params{long(rk), long(n), sign_name(delta)};
        long rank_f = 0;
        auto binom = [](long a, long b) { return long(subsets(a, b).size()); };
        for (int j = 0; j <= (n - 1) / 2; ++j) rank_f += binom(rk, j) * binom(rk, n - j);
        const long rank_ext = binom(2 * rk, n);
        r.add("lambda_hyp", params, rank_ext == 2 * rank_f, std::to_string(rank_ext), std::to_string(2 * rank_f));
        if (n > 2 * rk) continue;
        const GramForm h = hyperbolic(rk, delta);
        const GramForm x = ext_power(h, n);
        const auto basis = subsets(2 * rk, n);
        std::vector<std::size_t> fpart, gpart;
        for (std::size_t b = 0; b < basis.size(); ++b) {
          const auto from_e = std::count_if(basis[b].begin(), basis[b].end(), [&](std::size_t e) { return e < std::size_t(rk); });
          (from_e <= (n - 1) / 2 ? fpart : gpart).push_back(b);
        }
        bool ok = fpart.size() == gpart.size();
        GramForm target;
        if (ok) {
          const Matrix pairing = x.matrix.submatrix(fpart, gpart);
          const Matrix partner = pairing.inverse();
          Matrix w(basis.size(), basis.size());
          for (std::size_t c = 0; c < fpart.size(); ++c) w(fpart[c], c) = 1;
          for (std::size_t c = 0; c < gpart.size(); ++c)
            for (std::size_t k = 0; k < gpart.size(); ++k) w(gpart[k], fpart.size() + c) = partner(k, c);
          target = hyperbolic(int(fpart.size()), delta);
          ok = check_congruence(w, x, target);
          if (ok && delta == 1) ok = gw_equal(x, target);
        }
        r.add("lambda_hyp_witness", params, ok, to_json(x), ok ? to_json(target) : nlohmann::json());
      }
}

void check_proj_h(VerificationReport& r) {
  for (int e : {1, -1})
    for (int b : {1, 2, -3}) {
      const GramForm f(Matrix{{0, 1}, {e, 0}}, e), g(Matrix{{0, b}, {e * b, 0}}, e);
      r.add("proj_h", {long(e), long(b)}, check_congruence(Matrix::diagonal({1, b}), f, g), to_json(f), to_json(g));
    }
}

void check_hilbert(VerificationReport& r, std::mt19937& rng, int count) {
  std::uniform_int_distribution<int> len(1, 6), entry(-20, 19);
  for (long k = 0; k < count; ++k) {
    std::vector<Rational> d(len(rng));
    for (auto& x : d) {
      const int v = entry(rng);
      x = v >= 0 ? v + 1 : v;
    }
    const auto inv = invariants(diagonal_form(d));
    r.add("hilbert_product", {k}, hilbert_product_holds(inv), to_json(inv));
  }
}

}  // namespace

VerificationReport check_forms(const FormsOptions& opts) {
  VerificationReport r;
  r.suite = "forms";
  std::mt19937 rng(opts.seed);
  check_lambda_n_rank_n(r, opts.max_m);
  check_tensor_square(r);
  check_lambda_ef(r, rng);
  check_lambda_22(r, rng, opts.random_pairs);
  check_lambda_hyp(r);
  check_proj_h(r);
  check_hilbert(r, rng, opts.random_forms);
  // Second exterior power of the hyperbolic plane: determinant class <-1>, not <1>.
  const auto h2 = invariants(ext_power(hyperbolic(1, 1), 2)), one = invariants(diagonal_form({1}));
  r.add("lambda2_hyperbolic", {}, h2.disc == -1 && !(h2 == one), to_json(h2), to_json(one));
  r.sort();
  return r;
}

}  // namespace gwadams::forms
