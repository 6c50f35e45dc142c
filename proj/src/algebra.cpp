#include "liealg/algebra.hpp"

#include <algorithm>

namespace liealg {

StructureConstants::StructureConstants(size_t n) : n_(n), pairs_(n * (n > 0 ? n - 1 : 0) / 2) {}

size_t StructureConstants::pair_index(size_t i, size_t j) const {
  // i < j; row-major over the strict upper triangle
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

void StructureConstants::check(size_t i, size_t j, size_t k) const {
  if (i >= n_ || j >= n_ || k >= n_) throw std::out_of_range("structure constant index out of range");
}

Scalar StructureConstants::get(size_t i, size_t j, size_t k) const {
  check(i, j, k);
  if (i == j) return 0;
  bool neg = i > j;
  if (neg) std::swap(i, j);
  const auto& row = pairs_[pair_index(i, j)];
  auto it = std::lower_bound(row.begin(), row.end(), k,
                             [](const auto& e, size_t key) { return e.first < key; });
  if (it == row.end() || it->first != k) return 0;
  return neg ? -it->second : it->second;
}

void StructureConstants::set(size_t i, size_t j, size_t k, const Scalar& v) {
  check(i, j, k);
  if (i == j) {
    if (!v.is_zero()) throw std::invalid_argument("diagonal structure constants must vanish");
    return;
  }
  Scalar val = v;
  if (i > j) {
    std::swap(i, j);
    val = -val;
  }
  auto& row = pairs_[pair_index(i, j)];
  auto it = std::lower_bound(row.begin(), row.end(), k,
                             [](const auto& e, size_t key) { return e.first < key; });
  if (it != row.end() && it->first == k) {
    if (val.is_zero()) row.erase(it);
    else it->second = val;
  } else if (!val.is_zero()) {
    row.insert(it, {k, val});
  }
}

void StructureConstants::add(size_t i, size_t j, size_t k, const Scalar& v) {
  if (i == j) return;
  set(i, j, k, get(i, j, k) + v);
}

StructureConstants StructureConstants::from_full_table(const std::vector<std::vector<Vec>>& t) {
  const size_t n = t.size();
  StructureConstants sc(n);
  for (size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) throw std::invalid_argument("structure table has wrong shape");
    for (size_t j = 0; j < n; ++j) {
      if (t[i][j].size() != n) throw std::invalid_argument("structure table has wrong shape");
      for (size_t k = 0; k < n; ++k) {
        if (!(t[i][j][k] == -t[j][i][k]))
          throw std::invalid_argument("structure table is not antisymmetric");
        if (i < j) sc.set(i, j, k, t[i][j][k]);
      }
    }
  }
  return sc;
}

bool StructureConstants::is_real() const {
  for (const auto& row : pairs_)
    for (const auto& e : row)
      if (!e.second.is_real()) return false;
  return true;
}

bool StructureConstants::is_zero() const {
  for (const auto& row : pairs_)
    if (!row.empty()) return false;
  return true;
}

namespace {

// Accumulates c * mu(e_a, v) into out, where v is dense.
void add_bracket_basis_dense(const StructureConstants& sc, size_t a, const Vec& v, const Scalar& c, Vec& out) {
  for (size_t b = 0; b < sc.n(); ++b) {
    if (v[b].is_zero() || a == b) continue;
    Scalar f = c * v[b];
    if (a > b) f = -f;
    const auto& row = a < b ? sc.pair(a, b) : sc.pair(b, a);
    for (const auto& [k, x] : row) out[k] += f * x;
  }
}

}  // namespace

ValidationReport validate_jacobi(const StructureConstants& sc) {
  ValidationReport rep;
  const size_t n = sc.n();
  // Sparse mu(e_i, e_j) as a dense vector for reuse.
  auto basis_bracket = [&](size_t i, size_t j) {
    Vec v(n);
    if (i == j) return v;
    if (i < j)
      for (const auto& [k, x] : sc.pair(i, j)) v[k] = x;
    else
      for (const auto& [k, x] : sc.pair(j, i)) v[k] = -x;
    return v;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec ij = basis_bracket(i, j);
      for (size_t k = j + 1; k < n; ++k) {
        Vec jk = basis_bracket(j, k);
        Vec ki = basis_bracket(k, i);
        Vec total(n);
        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
        add_bracket_basis_dense(sc, k, ij, Scalar(-1), total);
        add_bracket_basis_dense(sc, i, jk, Scalar(-1), total);
        add_bracket_basis_dense(sc, j, ki, Scalar(-1), total);
        for (size_t s = 0; s < n; ++s)
          if (!total[s].is_zero()) {
            rep.ok = false;
            rep.residuals.push_back({i, j, k, s, total[s]});
          }
      }
    }
  return rep;
}

LieAlgebra::LieAlgebra(StructureConstants sc, Field field, std::string name)
    : sc_(std::move(sc)), field_(field), name_(std::move(name)) {
  if (field_ == Field::Q && !sc_.is_real())
    throw std::invalid_argument("non-rational structure constants with field Q");
  ValidationReport rep = validate_jacobi(sc_);
  if (!rep.ok) throw JacobiError(std::move(rep));
  status_ = JacobiStatus::Verified;
}

LieAlgebra LieAlgebra::unchecked(StructureConstants sc, Field field, std::string name) {
  if (field == Field::Q && !sc.is_real())
    throw std::invalid_argument("non-rational structure constants with field Q");
  LieAlgebra g;
  g.sc_ = std::move(sc);
  g.field_ = field;
  g.name_ = std::move(name);
  g.status_ = JacobiStatus::Unchecked;
  return g;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra g = *this;
  g.name_ = std::move(name);
  return g;
}

Vec LieAlgebra::basis_bracket(size_t i, size_t j) const {
  Vec v(dim());
  if (i == j) return v;
  if (i < j)
    for (const auto& [k, x] : sc_.pair(i, j)) v[k] = x;
  else
    for (const auto& [k, x] : sc_.pair(j, i)) v[k] = -x;
  return v;
}

Subspace Subspace::span(size_t n, const std::vector<Vec>& vectors) {
  Subspace s;
  s.n_ = n;
  if (vectors.empty()) return s;
  for (const auto& v : vectors)
    if (v.size() != n) throw std::invalid_argument("vector length does not match ambient dimension");
  Echelon e = rref(Matrix::from_rows(vectors, n));
  for (size_t i = 0; i < e.pivots.size(); ++i) s.basis_.push_back(e.R.row(i));
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::whole(size_t n) {
  std::vector<Vec> b;
  for (size_t i = 0; i < n; ++i) b.push_back(unit_vec(n, i));
  return span(n, b);
}

Subspace Subspace::zero(size_t n) {
  Subspace s;
  s.n_ = n;
  return s;
}

Subspace Subspace::coordinate(size_t n, const std::vector<size_t>& indices) {
  std::vector<Vec> b;
  for (size_t i : indices) {
    if (i >= n) throw std::out_of_range("coordinate index out of range");
    b.push_back(unit_vec(n, i));
  }
  return span(n, b);
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length does not match ambient dimension");
  Vec r = v;
  for (size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) vec_axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& s) const {
  for (const auto& v : s.basis())
    if (!contains(v)) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  std::vector<Vec> vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), vs);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  const size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  // Solve sum x_i a_i - sum y_j b_j = 0.
  std::vector<Vec> cols = a.basis();
  for (const auto& v : b.basis()) cols.push_back(vec_scale(Scalar(-1), v));
  Matrix m = Matrix::from_columns(cols, n);
  std::vector<Vec> out;
  for (const auto& k : kernel(m)) {
    Vec v(n);
    for (size_t i = 0; i < a.dim(); ++i) vec_axpy(v, k[i], a.basis()[i]);
    out.push_back(v);
  }
  return Subspace::span(n, out);
}

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
  const size_t n = g.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: vector length mismatch");
  Vec out(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero() && y[i].is_zero()) continue;
    for (size_t j = i + 1; j < n; ++j) {
      Scalar c = x[i] * y[j] - x[j] * y[i];
      if (c.is_zero()) continue;
      for (const auto& [k, v] : g.sc().pair(i, j)) out[k] += c * v;
    }
  }
  return out;
}

Matrix ad_matrix(const LieAlgebra& g, const Vec& x) {
  const size_t n = g.dim();
  Matrix m(n, n);
  for (size_t j = 0; j < n; ++j) {
    Vec c = bracket(g, x, unit_vec(n, j));
    for (size_t i = 0; i < n; ++i) m(i, j) = c[i];
  }
  return m;
}

Matrix ad_basis(const LieAlgebra& g, size_t a) {
  const size_t n = g.dim();
  Matrix m(n, n);
  for (size_t j = 0; j < n; ++j) {
    Vec c = g.basis_bracket(a, j);
    for (size_t i = 0; i < n; ++i) m(i, j) = c[i];
  }
  return m;
}

LieAlgebra act(const LieAlgebra& g, const Matrix& f) {
  const size_t n = g.dim();
  if (f.rows() != n || f.cols() != n) throw std::invalid_argument("act: matrix has wrong size");
  auto finv = inverse(f);
  if (!finv) throw std::invalid_argument("act: singular matrix");
  StructureConstants sc(n);
  std::vector<Vec> cols(n);
  for (size_t j = 0; j < n; ++j) cols[j] = f.col(j);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec v = *finv * bracket(g, cols[i], cols[j]);
      for (size_t k = 0; k < n; ++k) sc.set(i, j, k, v[k]);
    }
  if (g.status() == JacobiStatus::Verified) return LieAlgebra(std::move(sc), g.field(), g.name());
  return LieAlgebra::unchecked(std::move(sc), g.field(), g.name());
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field()) throw std::invalid_argument("direct_sum: field mismatch");
  const size_t n = a.dim(), m = b.dim();
  StructureConstants sc(n + m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (const auto& [k, v] : a.sc().pair(i, j)) sc.set(i, j, k, v);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      for (const auto& [k, v] : b.sc().pair(i, j)) sc.set(n + i, n + j, n + k, v);
  std::string name;
  if (!a.name().empty() || !b.name().empty()) name = a.name() + "+" + b.name();
  return LieAlgebra(std::move(sc), a.field(), name);
}

Vec quotient_projection(const Subspace& ideal, const Vec& v) {
  Vec r = ideal.reduce(v);
  std::vector<bool> piv(ideal.ambient(), false);
  for (size_t p : ideal.pivots()) piv[p] = true;
  Vec out;
  for (size_t i = 0; i < ideal.ambient(); ++i)
    if (!piv[i]) out.push_back(r[i]);
  return out;
}

LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient() != g.dim()) throw std::invalid_argument("quotient: ambient mismatch");
  if (!is_ideal(g, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
  std::vector<bool> piv(g.dim(), false);
  for (size_t p : ideal.pivots()) piv[p] = true;
  std::vector<size_t> reps;
  for (size_t i = 0; i < g.dim(); ++i)
    if (!piv[i]) reps.push_back(i);
  const size_t m = reps.size();
  StructureConstants sc(m);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b) {
      Vec v = quotient_projection(ideal, g.basis_bracket(reps[a], reps[b]));
      for (size_t k = 0; k < m; ++k) sc.set(a, b, k, v[k]);
    }
  return LieAlgebra(std::move(sc), g.field());
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vec> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      Vec v = bracket(g, x, y);
      if (!vec_is_zero(v)) vs.push_back(std::move(v));
    }
  return Subspace::span(g.dim(), vs);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  const auto& B = s.basis();
  for (size_t i = 0; i < B.size(); ++i)
    for (size_t j = i + 1; j < B.size(); ++j)
      if (!s.contains(bracket(g, B[i], B[j]))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (const auto& x : s.basis())
    for (size_t j = 0; j < g.dim(); ++j)
      if (!s.contains(bracket(g, x, unit_vec(g.dim(), j)))) return false;
  return true;
}

Vec bch_truncated(const LieAlgebra& g, const Vec& x, const Vec& y, int order) {
  if (order < 1 || order > 3) throw std::invalid_argument("BCH order must be 1, 2 or 3");
  Vec z = vec_add(x, y);
  if (order == 1) return z;
  Vec xy = bracket(g, x, y);
  vec_axpy(z, Scalar(1, 2), xy);
  if (order == 2) return z;
  vec_axpy(z, Scalar(1, 12), bracket(g, xy, y));
  vec_axpy(z, Scalar(-1, 12), bracket(g, xy, x));
  return z;
}

}  // namespace liealg
