#include "gwadams/forms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gwadams::forms {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw TypeError("Matrix: ragged rows");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw TypeError("Matrix: dimension mismatch in product");
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

Matrix Matrix::operator*(const Rational& c) const {
  Matrix p = *this;
  for (auto& x : p.a_) x *= c;
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw TypeError("Matrix: dimension mismatch in sum");
  Matrix p = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) p.a_[k] += o.a_[k];
  return p;
}

namespace {

// Row echelon form in place; returns (rank, sign * product of pivots) for square input.
std::pair<std::size_t, Rational> eliminate(Matrix& m) {
  std::size_t r = 0;
  Rational det = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) {
      det = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      det = -det;
    }
    det *= m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return {r, det};
}

}  // namespace

Rational Matrix::determinant() const {
  if (!square()) throw TypeError("determinant of a non-square matrix");
  if (rows_ == 0) return 1;
  Matrix m = *this;
  auto [r, det] = eliminate(m);
  return r == rows_ ? det : Rational(0);
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return eliminate(m).first;
}

Matrix Matrix::inverse() const {
  if (!square()) throw TypeError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this, inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw DegeneracyError("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  Matrix s(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
  return s;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// Ryser's formula.
Rational permanent(const Matrix& m) {
  if (!m.square()) throw TypeError("permanent of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational total = 0;
  for (unsigned long s = 1; s < (1ul << n); ++s) {
    Rational prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) {
      Rational row = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (s >> j & 1) row += m(i, j);
      prod *= row;
    }
    const int bits = __builtin_popcountl(s);
    if ((n - bits) % 2) total -= prod;
    else total += prod;
  }
  return total;
}

GramForm::GramForm(Matrix m, int s) : matrix(std::move(m)), sym(s) {
  if (s != 1 && s != -1) throw TypeError("GramForm: sym must be +1 or -1");
  if (!matrix.square()) throw TypeError("GramForm: matrix must be square");
  if (matrix.transpose() != matrix * Rational(s))
    throw TypeError(s == 1 ? "GramForm: matrix is not symmetric" : "GramForm: matrix is not skew-symmetric");
}

GramForm diagonal_form(const std::vector<Rational>& entries) { return GramForm(Matrix::diagonal(entries), 1); }

std::vector<std::vector<std::size_t>> subsets(std::size_t r, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n > r) return out;
  std::vector<std::size_t> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = n;
    while (k > 0 && cur[k - 1] == r - n + k - 1) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (std::size_t j = k; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<std::vector<std::size_t>> multisets(std::size_t r, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (r == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = n;
    while (k > 0 && cur[k - 1] == r - 1) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (std::size_t j = k; j < n; ++j) cur[j] = cur[k - 1];
  }
  return out;
}

namespace {

void check_power_index(const GramForm& f, int n, const char* what) {
  if (n < 0 || static_cast<std::size_t>(n) > f.rank())
    throw IndexError(std::string(what) + ": n must satisfy 0 <= n <= rank");
}

int sign_power(int s, int n) { return (s == -1 && n % 2) ? -1 : 1; }

}  // namespace

GramForm ext_power(const GramForm& f, int n) {
  check_power_index(f, n, "ext_power");
  const auto basis = subsets(f.rank(), n);
  Matrix m(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) m(a, b) = f.matrix.submatrix(basis[a], basis[b]).determinant();
  return GramForm(std::move(m), sign_power(f.sym, n));
}

GramForm sym_power(const GramForm& f, int n) {
  if (n < 0) throw IndexError("sym_power: n must be non-negative");
  const auto basis = multisets(f.rank(), n);
  Matrix m(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) m(a, b) = permanent(f.matrix.submatrix(basis[a], basis[b]));
  return GramForm(std::move(m), sign_power(f.sym, n));
}

Matrix ext_power_map(const Matrix& b, int n) {
  if (n < 0) throw IndexError("ext_power_map: n must be non-negative");
  const auto rows = subsets(b.rows(), n), cols = subsets(b.cols(), n);
  Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = b.submatrix(rows[i], cols[j]).determinant();
  return m;
}

GramForm tensor(const GramForm& f, const GramForm& g) { return GramForm(kronecker(f.matrix, g.matrix), f.sym * g.sym); }

GramForm direct_sum(const GramForm& f, const GramForm& g) {
  if (f.sym != g.sym) throw TypeError("direct_sum: symmetry types differ");
  return GramForm(block_diagonal(f.matrix, g.matrix), f.sym);
}

GramForm scale(const Rational& a, const GramForm& f) {
  if (a == 0) throw DegeneracyError("scale: factor must be nonzero");
  return GramForm(f.matrix * a, f.sym);
}

GramForm dual(const GramForm& f) { return GramForm(f.matrix.inverse().transpose(), f.sym); }

GramForm hyperbolic(int r, int delta) {
  if (r < 1) throw IndexError("hyperbolic: rank must be positive");
  if (delta != 1 && delta != -1) throw TypeError("hyperbolic: delta must be + or -");
  Matrix m(2 * r, 2 * r);
  for (int i = 0; i < r; ++i) {
    m(i, r + i) = 1;
    m(r + i, i) = delta;
  }
  return GramForm(std::move(m), delta);
}

bool check_congruence(const Matrix& b, const GramForm& f, const GramForm& g) {
  if (!b.square() || b.rows() != f.rank() || b.cols() != g.rank())
    throw TypeError("check_congruence: dimensions disagree");
  if (b.determinant() == 0) throw WitnessError("check_congruence: witness is singular");
  return b.transpose() * f.matrix * b == g.matrix;
}

bool check_isometric_embedding(const Matrix& b, const GramForm& f, const GramForm& g) {
  if (b.rows() != f.rank() || b.cols() != g.rank()) throw TypeError("check_isometric_embedding: dimensions disagree");
  if (b.rank() != b.cols()) throw WitnessError("check_isometric_embedding: map is not injective");
  return b.transpose() * f.matrix * b == g.matrix;
}

// ---------------------------------------------------------------- invariants

namespace {

std::map<Integer, unsigned> factor(Integer n) {
  std::map<Integer, unsigned> out;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

unsigned valuation(Integer& x, const Integer& p) {
  unsigned v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int mod_positive(const Integer& x, long m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return static_cast<int>(r.get_si());
}

GWQInvariants invariants_of_diagonal(const std::vector<Rational>& diag) {
  GWQInvariants inv;
  inv.rank = static_cast<long>(diag.size());
  std::vector<Integer> a;
  Integer disc = 1;
  std::set<Integer> places{kRealPlace, Integer(2)};
  for (const auto& d : diag) {
    if (d == 0) throw DegeneracyError("invariants: form is degenerate");
    inv.signature += d > 0 ? 1 : -1;
    a.push_back(squarefree_class(d));
    disc *= a.back();
    for (const auto& [p, e] : factor(a.back())) places.insert(p);
  }
  inv.disc = squarefree_class(Rational(disc));
  for (const auto& p : places) {
    int h = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) h *= hilbert_symbol(a[i], a[j], p);
    inv.hasse[p] = h;
  }
  return inv;
}

}  // namespace

int GWQInvariants::hasse_at(const Integer& p) const {
  auto it = hasse.find(p);
  return it == hasse.end() ? 1 : it->second;
}

bool GWQInvariants::operator==(const GWQInvariants& o) const {
  if (rank != o.rank || signature != o.signature || disc != o.disc) return false;
  for (const auto& [p, h] : hasse)
    if (o.hasse_at(p) != h) return false;
  for (const auto& [p, h] : o.hasse)
    if (hasse_at(p) != h) return false;
  return true;
}

Integer squarefree_class(const Rational& q) {
  if (q == 0) throw DegeneracyError("squarefree_class of zero");
  Integer n = q.get_num() * q.get_den();
  Integer out = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factor(n))
    if (e % 2) out *= p;
  return out;
}

int hilbert_symbol(const Integer& a, const Integer& b, const Integer& p) {
  if (a == 0 || b == 0) throw DegeneracyError("hilbert_symbol of zero");
  if (p == kRealPlace) return (a < 0 && b < 0) ? -1 : 1;
  Integer u = a, v = b;
  const unsigned alpha = valuation(u, p), beta = valuation(v, p);
  if (p == 2) {
    auto e = [](const Integer& x) { return (mod_positive(x, 4) - 1) / 2; };
    auto w = [](const Integer& x) {
      const int r = mod_positive(x, 8);
      return ((r * r - 1) / 8) % 2;
    };
    const int ex = e(u) * e(v) + static_cast<int>(alpha) * w(v) + static_cast<int>(beta) * w(u);
    return ex % 2 ? -1 : 1;
  }
  int s = 1;
  if (alpha % 2 && beta % 2 && mod_positive(p, 4) == 3) s = -s;
  if (beta % 2) s *= mpz_legendre(Integer(u % p + p).get_mpz_t(), p.get_mpz_t());
  if (alpha % 2) s *= mpz_legendre(Integer(v % p + p).get_mpz_t(), p.get_mpz_t());
  return s;
}

std::vector<Rational> diagonalize(const GramForm& f) {
  if (f.sym != 1) throw TypeError("diagonalize: form must be symmetric");
  Matrix a = f.matrix;
  const std::size_t n = a.rows();
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  // e_i += e_j, applied on both sides.
  auto add_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
    for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) throw DegeneracyError("diagonalize: form is degenerate");
        add_index(k, j);
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational c = a(i, k) / a(k, k);
      for (std::size_t t = 0; t < n; ++t) a(i, t) -= c * a(k, t);
      for (std::size_t t = 0; t < n; ++t) a(t, i) -= c * a(t, k);
    }
  }
  std::vector<Rational> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return d;
}

GWQInvariants invariants(const GramForm& f) {
  if (f.sym != 1) throw TypeError("invariants: form must be symmetric");
  return invariants_of_diagonal(diagonalize(f));
}

bool hilbert_product_holds(const GWQInvariants& inv) {
  int prod = 1;
  for (const auto& [p, h] : inv.hasse) prod *= h;
  return prod == 1;
}

namespace {

std::string invariant_text(const GWQInvariants& x) { return to_json(x).dump(); }

}  // namespace

bool gw_identity_check(const FormSum& lhs, const FormSum& rhs, std::string* diagnostic) {
  std::vector<Rational> left, right;
  auto add = [](std::vector<Rational>& side, long copies, const GramForm& f) {
    if (f.sym != 1) throw TypeError("gw_identity_check: forms must be symmetric");
    const auto d = diagonalize(f);
    for (long c = 0; c < copies; ++c) side.insert(side.end(), d.begin(), d.end());
  };
  for (const auto& [c, f] : lhs) add(c >= 0 ? left : right, c >= 0 ? c : -c, f);
  for (const auto& [c, f] : rhs) add(c >= 0 ? right : left, c >= 0 ? c : -c, f);
  if (left.size() != right.size()) {
    if (diagnostic) *diagnostic = "rank " + std::to_string(left.size()) + " vs " + std::to_string(right.size());
    return false;
  }
  const auto a = invariants_of_diagonal(left), b = invariants_of_diagonal(right);
  const bool eq = a == b;
  if (diagnostic) *diagnostic = eq ? std::string() : invariant_text(a) + " vs " + invariant_text(b);
  return eq;
}

bool gw_equal(const GramForm& f, const GramForm& g, std::string* diagnostic) {
  return gw_identity_check({{1, f}}, {{1, g}}, diagnostic);
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const GramForm& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < f.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < f.rank(); ++j) row.push_back(f.matrix(i, j).get_str());
    rows.push_back(row);
  }
  return {{"sym", f.sym == 1 ? "symmetric" : "skew"}, {"matrix", rows}};
}

namespace {

Rational parse_rational(const nlohmann::json& x) {
  if (x.is_number_integer()) return Rational(x.get<long>());
  if (!x.is_string()) throw ParseError("Gram entry must be a string \"num/den\" or an integer");
  const std::string s = x.get<std::string>();
  const auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return k < t.size() && std::all_of(t.begin() + k, t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::string num = s.substr(0, slash), den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw ParseError("bad rational: " + s);
  Rational q(Integer(num[0] == '+' ? num.substr(1) : num), Integer(den));
  if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace

GramForm gram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sym") || !j.contains("matrix")) throw ParseError("Gram JSON needs sym and matrix");
  const auto& s = j["sym"];
  int sym;
  if (s == "symmetric") sym = 1;
  else if (s == "skew") sym = -1;
  else throw ParseError("sym must be \"symmetric\" or \"skew\"");
  const auto& rows = j["matrix"];
  if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = parse_rational(rows[i][k]);
  }
  try {
    return GramForm(std::move(m), sym);
  } catch (const TypeError& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json to_json(const GWQInvariants& inv) {
  nlohmann::json h = nlohmann::json::object();
  for (const auto& [p, v] : inv.hasse) h[p == kRealPlace ? "inf" : p.get_str()] = v;
  return {{"rank", inv.rank}, {"signature", inv.signature}, {"disc", inv.disc.get_str()}, {"hasse", h}};
}

std::string to_text(const GramForm& f) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < f.rank(); ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < f.rank(); ++j) out << (j ? "," : "") << f.matrix(i, j).get_str();
    out << ']';
  }
  out << "] " << (f.sym == 1 ? "symmetric" : "skew");
  return out.str();
}

}  // namespace gwadams::forms
