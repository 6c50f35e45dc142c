#pragma once

#include <optional>
#include <vector>

#include "liealg/scalar.hpp"

namespace liealg {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, size_t rows);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Scalar& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_real() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);
Vec operator*(const Matrix& a, const Vec& v);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& s, const Vec& a);
void vec_axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x
bool vec_is_zero(const Vec& v);
Vec unit_vec(size_t n, size_t i);

struct Echelon {
  Matrix R;                   // reduced row echelon form, zero rows dropped
  std::vector<size_t> pivots; // pivot column of each row of R
};

Echelon rref(const Matrix& m);
size_t rank(const Matrix& m);
Scalar det(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
std::vector<Vec> kernel(const Matrix& m);
// Solution with every free variable set to zero, if A x = b is consistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Fraction-free elimination on the integer matrix obtained by clearing row
// denominators; real entries only.
size_t bareiss_rank(const Matrix& m);
mpq_class bareiss_det(const Matrix& m);

struct Signature {
  size_t pos = 0, neg = 0, zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Congruence diagonalization of a symmetric rational matrix.
Signature congruence_signature(const Matrix& sym);

}  // namespace liealg
