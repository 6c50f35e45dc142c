#include "liealg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace liealg {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, size_t rows) {
  Matrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::col(size_t j) const {
  Vec v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : a_)
    if (!x.is_real()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  Matrix c = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  Matrix c = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out(a.rows());
  for (size_t j = 0; j < a.cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) out[i] += a(i, j) * v[j];
  }
  return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec c = a;
  for (size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec c = a;
  for (size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

Vec vec_scale(const Scalar& s, const Vec& a) {
  Vec c = a;
  for (auto& x : c) x *= s;
  return c;
}

void vec_axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (y.size() != x.size()) throw std::invalid_argument("vector length mismatch");
  if (a.is_zero()) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

Echelon rref(const Matrix& m) {
  Matrix a = m;
  const size_t R = a.rows(), C = a.cols();
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t p = r;
    while (p < R && a(p, c).is_zero()) ++p;
    if (p == R) continue;
    if (p != r)
      for (size_t j = 0; j < C; ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = Scalar(1) / a(r, c);
    for (size_t j = c; j < C; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (size_t j = c; j < C; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  Matrix out(r, C);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < C; ++j) out(i, j) = a(i, j);
  return {out, piv};
}

size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.is_real()) return bareiss_rank(m);
  return rref(m).pivots.size();
}

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  if (m.is_real()) return Scalar(bareiss_det(m));
  Matrix a = m;
  const size_t n = a.rows();
  Scalar d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    Scalar inv = Scalar(1) / a(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.R(i, n + j);
  return inv;
}

std::vector<Vec> kernel(const Matrix& m) {
  Echelon e = rref(m);
  const size_t C = m.cols();
  std::vector<bool> is_piv(C, false);
  for (size_t p : e.pivots) is_piv[p] = true;
  std::vector<Vec> out;
  for (size_t f = 0; f < C; ++f) {
    if (is_piv[f]) continue;
    Vec v(C);
    v[f] = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.R(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve shape mismatch");
  const size_t C = a.cols();
  Matrix aug(a.rows(), C + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < C; ++j) aug(i, j) = a(i, j);
    aug(i, C) = b[i];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == C) return std::nullopt;
  Vec x(C);
  for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.R(i, C);
  return x;
}

namespace {

std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_real()) throw std::domain_error("Bareiss elimination needs real entries");
      mpz_class d = m(i, j).re().get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j).re();
      rows[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  return rows;
}

// Returns rank; `sign` and `last` describe the final pivot for determinants.
size_t bareiss(std::vector<std::vector<mpz_class>>& a, int& sign, mpz_class& last) {
  const size_t R = a.size(), C = R ? a[0].size() : 0;
  mpz_class prev = 1;
  sign = 1;
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (size_t i = r + 1; i < R; ++i) {
      for (size_t j = c + 1; j < C; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  last = prev;
  return r;
}

}  // namespace

size_t bareiss_rank(const Matrix& m) {
  auto a = integer_rows(m);
  int sign;
  mpz_class last;
  return bareiss(a, sign, last);
}

mpq_class bareiss_det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return 1;
  mpq_class scale = 1;
  for (size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < n; ++j) {
      mpz_class d = m(i, j).re().get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    scale *= mpq_class(l);
  }
  auto a = integer_rows(m);
  int sign;
  mpz_class last;
  if (bareiss(a, sign, last) < n) return 0;
  mpq_class d(last * sign);
  d /= scale;
  d.canonicalize();
  return d;
}

Signature congruence_signature(const Matrix& sym) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("signature of non-square matrix");
  if (!sym.is_real()) throw std::domain_error("signature needs a real form");
  if (!(sym == sym.transpose())) throw std::invalid_argument("signature of non-symmetric matrix");
  Matrix a = sym;
  const size_t n = a.rows();
  Signature s;
  std::vector<bool> done(n, false);
  size_t remaining = n;
  // Symmetric elimination: pick a nonzero diagonal pivot, or create one from
  // an off-diagonal entry by the congruence e_i -> e_i + e_j.
  while (remaining > 0) {
    size_t p = n;
    for (size_t i = 0; i < n; ++i)
      if (!done[i] && !a(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p == n) {
      size_t pi = n, pj = n;
      for (size_t i = 0; i < n && pi == n; ++i)
        if (!done[i])
          for (size_t j = i + 1; j < n; ++j)
            if (!done[j] && !a(i, j).is_zero()) {
              pi = i;
              pj = j;
              break;
            }
      if (pi == n) break;
      for (size_t k = 0; k < n; ++k) a(pi, k) += a(pj, k);
      for (size_t k = 0; k < n; ++k) a(k, pi) += a(k, pj);
      p = pi;
    }
    Scalar d = a(p, p);
    if (d.sign() > 0)
      ++s.pos;
    else
      ++s.neg;
    done[p] = true;
    --remaining;
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, p).is_zero()) continue;
      Scalar f = a(i, p) / d;
      for (size_t k = 0; k < n; ++k) a(i, k) -= f * a(p, k);
      for (size_t k = 0; k < n; ++k) a(k, i) -= f * a(k, p);
    }
  }
  s.zero = remaining;
  return s;
}

}  // namespace liealg
