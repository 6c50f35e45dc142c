#include "liealg/forms.hpp"

#include <stdexcept>

namespace liealg {

ScalarForm::ScalarForm(size_t n, size_t p) : n_(n), p_(p), c_(binomial(n, p)) {}

ScalarForm::ScalarForm(size_t n, size_t p, Vec coeffs) : n_(n), p_(p), c_(std::move(coeffs)) {
  if (c_.size() != binomial(n, p)) throw std::invalid_argument("form coefficient count mismatch");
}

ScalarForm ScalarForm::basis(size_t n, Tuple idx) {
  ScalarForm f(n, idx.size());
  int s = sort_with_sign(idx);
  if (s == 0) return f;
  f.c_[combinations(n, idx.size()).index(idx)] = s;
  return f;
}

ScalarForm ScalarForm::one_form(const Vec& a) { return ScalarForm(a.size(), 1, a); }

Scalar ScalarForm::value(const Tuple& t) const {
  if (t.size() != p_) throw std::invalid_argument("form arity mismatch");
  Tuple s = t;
  int sign = sort_with_sign(s);
  if (sign == 0) return 0;
  const Scalar& v = c_[combinations(n_, p_).index(s)];
  return sign > 0 ? v : -v;
}

Scalar ScalarForm::evaluate(const std::vector<Vec>& args) const {
  if (args.size() != p_) throw std::invalid_argument("form arity mismatch");
  // Determinant expansion over each increasing tuple.
  Scalar total = 0;
  const auto& comb = combinations(n_, p_);
  for (size_t idx = 0; idx < comb.size(); ++idx) {
    if (c_[idx].is_zero()) continue;
    Matrix m(p_, p_);
    for (size_t a = 0; a < p_; ++a)
      for (size_t b = 0; b < p_; ++b) m(a, b) = args[b][comb[idx][a]];
    total += c_[idx] * det(m);
  }
  return total;
}

Scalar ScalarForm::top_coefficient() const {
  if (p_ != n_) throw std::invalid_argument("not a top-degree form");
  return c_.empty() ? Scalar(1) : c_[0];
}

ScalarForm& ScalarForm::operator+=(const ScalarForm& o) {
  if (n_ != o.n_ || p_ != o.p_) throw std::invalid_argument("form shape mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

ScalarForm& ScalarForm::operator-=(const ScalarForm& o) {
  if (n_ != o.n_ || p_ != o.p_) throw std::invalid_argument("form shape mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

ScalarForm operator*(const Scalar& s, const ScalarForm& a) {
  ScalarForm r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

Matrix ScalarForm::matrix() const {
  if (p_ != 2) throw std::invalid_argument("Gram matrix needs a 2-form");
  Matrix m(n_, n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = i + 1; j < n_; ++j) {
      Scalar v = value({i, j});
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

ScalarForm ScalarForm::from_matrix(const Matrix& m) {
  const size_t n = m.rows();
  ScalarForm f(n, 2);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (!(m(i, j) == -m(j, i))) throw std::invalid_argument("2-form matrix is not antisymmetric");
      f.c_[combinations(n, 2).index({i, j})] = m(i, j);
    }
  return f;
}

ScalarForm wedge(const ScalarForm& a, const ScalarForm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: dimension mismatch");
  const size_t n = a.n(), p = a.p(), q = b.p();
  ScalarForm out(n, p + q);
  if (p + q > n) return out;
  const auto& ca = combinations(n, p);
  const auto& cb = combinations(n, q);
  const auto& cout = combinations(n, p + q);
  for (size_t i = 0; i < ca.size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (size_t j = 0; j < cb.size(); ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      Tuple t = ca[i];
      t.insert(t.end(), cb[j].begin(), cb[j].end());
      int s = sort_with_sign(t);
      if (s == 0) continue;
      Scalar v = a.coeffs()[i] * b.coeffs()[j];
      out.coeffs()[cout.index(t)] += s > 0 ? v : -v;
    }
  }
  return out;
}

ScalarForm wedge_power(const ScalarForm& a, size_t k) {
  ScalarForm r(a.n(), 0, Vec{Scalar(1)});
  for (size_t i = 0; i < k; ++i) r = wedge(r, a);
  return r;
}

ScalarForm exterior_derivative(const LieAlgebra& g, const ScalarForm& w) {
  const size_t n = g.dim(), p = w.p();
  if (w.n() != n) throw std::invalid_argument("exterior_derivative: dimension mismatch");
  ScalarForm out(n, p + 1);
  if (p + 1 > n) return out;
  const auto& comb = combinations(n, p + 1);
  for (size_t idx = 0; idx < comb.size(); ++idx) {
    const Tuple& J = comb[idx];
    Scalar total = 0;
    // -sum_{a<b} (-1)^{a+b} omega([X_a, X_b], X_0..^a..^b..X_p)
    for (size_t a = 0; a <= p; ++a)
      for (size_t b = a + 1; b <= p; ++b) {
        const auto& br = g.sc().pair(J[a], J[b]);
        if (br.empty()) continue;
        Tuple rest;
        for (size_t c = 0; c <= p; ++c)
          if (c != a && c != b) rest.push_back(J[c]);
        Scalar sub = 0;
        for (const auto& [m, v] : br) {
          Tuple t{m};
          t.insert(t.end(), rest.begin(), rest.end());
          Scalar wv = w.value(t);
          if (!wv.is_zero()) sub += v * wv;
        }
        if ((a + b) % 2 == 0) total -= sub;
        else total += sub;
      }
    out.coeffs()[idx] = total;
  }
  return out;
}

bool d_squared_vanishes(const LieAlgebra& g) {
  for (size_t k = 0; k < g.dim(); ++k) {
    ScalarForm w = ScalarForm::basis(g.dim(), {k});
    if (!exterior_derivative(g, exterior_derivative(g, w)).is_zero()) return false;
  }
  return true;
}

StructureConstants from_maurer_cartan(const std::vector<ScalarForm>& dw) {
  const size_t n = dw.size();
  StructureConstants sc(n);
  for (size_t k = 0; k < n; ++k) {
    if (dw[k].n() != n || dw[k].p() != 2) throw std::invalid_argument("Maurer-Cartan data must be 2-forms");
    // d omega_k (e_i, e_j) = omega_k([e_i, e_j]) = C_ij^k
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) sc.set(i, j, k, dw[k].value({i, j}));
  }
  return sc;
}

}  // namespace liealg
