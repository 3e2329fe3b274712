#pragma once

// Bilinear forms over Q: Gram matrices of exterior, symmetric and tensor powers,
// congruence witnesses and GW(Q) classes through Hasse-Minkowski invariants.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "gwadams/errors.hpp"
#include "gwadams/report.hpp"

namespace gwadams::forms {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Rational>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& c) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-() const { return *this * Rational(-1); }
  bool operator==(const Matrix& o) const = default;

  Rational determinant() const;
  std::size_t rank() const;
  /// Throws DegeneracyError when singular.
  Matrix inverse() const;
  /// Rows rs, columns cs.
  Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
Rational permanent(const Matrix& m);

/// matrix(i, j) = nu(e_i, e_j); sym = +1 symmetric, -1 skew.
struct GramForm {
  Matrix matrix;
  int sym = 1;

  GramForm() = default;
  /// Checks matrix^T = sym * matrix (TypeError otherwise).
  GramForm(Matrix m, int s);

  std::size_t rank() const { return matrix.rows(); }
  bool nondegenerate() const { return matrix.determinant() != 0; }
  bool operator==(const GramForm& o) const = default;
};

GramForm diagonal_form(const std::vector<Rational>& entries);

/// Sorted n-subsets of {0..r-1}, the basis of the n-th exterior power.
std::vector<std::vector<std::size_t>> subsets(std::size_t r, std::size_t n);
/// Sorted n-multisets of {0..r-1}, the monomial basis of the n-th symmetric power.
std::vector<std::vector<std::size_t>> multisets(std::size_t r, std::size_t n);

/// Determinants of minors on the sorted-tuple basis.
GramForm ext_power(const GramForm& f, int n);
/// Permanents on the monomial basis, unnormalized: Sym^2<a> = <2a^2>.
GramForm sym_power(const GramForm& f, int n);
/// The n-th exterior power of a linear map, on sorted-tuple bases.
Matrix ext_power_map(const Matrix& b, int n);

GramForm tensor(const GramForm& f, const GramForm& g);
GramForm direct_sum(const GramForm& f, const GramForm& g);
GramForm scale(const Rational& a, const GramForm& f);
GramForm dual(const GramForm& f);
/// [[0, I], [delta I, 0]] of size 2r.
GramForm hyperbolic(int r, int delta);

/// B^T F B == G for square invertible B.
bool check_congruence(const Matrix& b, const GramForm& f, const GramForm& g);
/// B^T F B == G for an injective B with more rows than columns.
bool check_isometric_embedding(const Matrix& b, const GramForm& f, const GramForm& g);

/// Key 0 stands for the real place.
inline const Integer kRealPlace = 0;

struct GWQInvariants {
  long rank = 0;
  long signature = 0;
  Integer disc;
  std::map<Integer, int> hasse;

  /// Unlisted places count as +1.
  int hasse_at(const Integer& p) const;
  bool operator==(const GWQInvariants& o) const;
};

/// Squarefree representative of the square class of q.
Integer squarefree_class(const Rational& q);
/// (a, b)_p for nonzero integers; p = 0 is the real place.
int hilbert_symbol(const Integer& a, const Integer& b, const Integer& p);
/// Congruence diagonalization of a symmetric matrix.
std::vector<Rational> diagonalize(const GramForm& f);

GWQInvariants invariants(const GramForm& f);
bool hilbert_product_holds(const GWQInvariants& inv);

/// GW(Q) equality of sums of forms with integer multiplicities. Negative
/// multiplicities are moved to the other side. The optional diagnostic names
/// the first invariant that differs.
using FormSum = std::vector<std::pair<long, GramForm>>;
bool gw_identity_check(const FormSum& lhs, const FormSum& rhs, std::string* diagnostic = nullptr);
bool gw_equal(const GramForm& f, const GramForm& g, std::string* diagnostic = nullptr);

nlohmann::json to_json(const GramForm& f);
GramForm gram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GWQInvariants& inv);
std::string to_text(const GramForm& f);

struct FormsOptions {
  int max_m = 3;
  int random_pairs = 12;
  int random_forms = 120;
  unsigned seed = 20240;
};

VerificationReport check_forms(const FormsOptions& opts = {});

}  // namespace gwadams::forms
