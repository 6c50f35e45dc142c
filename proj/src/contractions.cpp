#include "liealg/contractions.hpp"

#include <stdexcept>

#include "liealg/combinatorics.hpp"

namespace liealg {

ParamMatrix ParamMatrix::constant(const Matrix& a) {
  ParamMatrix m(a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m(i, j) = LaurentPoly(a(i, j));
  return m;
}

ParamMatrix ParamMatrix::diagonal(const std::vector<int>& e) {
  ParamMatrix m(e.size());
  for (size_t i = 0; i < e.size(); ++i) m(i, i) = LaurentPoly(Scalar(1), e[i]);
  return m;
}

ParamMatrix ParamMatrix::affine(const Matrix& a, const Matrix& b) {
  ParamMatrix m(a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m(i, j) = LaurentPoly(a(i, j)) + LaurentPoly(b(i, j), 1);
  return m;
}

bool ParamMatrix::is_monomial_diagonal() const {
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) {
      const auto& x = (*this)(i, j);
      if (i == j ? !x.is_monomial() : !x.is_zero()) return false;
    }
  return true;
}

namespace {

// Gauss-Jordan over rational functions; returns det and optionally the inverse.
RationalFunction eliminate(const ParamMatrix& F, std::vector<RationalFunction>* inv) {
  const size_t n = F.n();
  std::vector<RationalFunction> a(n * n), b(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      a[i * n + j] = RationalFunction(F(i, j));
      if (i == j) b[i * n + j] = RationalFunction(Scalar(1));
    }
  RationalFunction det(Scalar(1));
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t r = c; r < n; ++r)
      if (!a[r * n + c].is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) return RationalFunction();
    if (piv != c) {
      for (size_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[c * n + j]);
        std::swap(b[piv * n + j], b[c * n + j]);
      }
      det = -det;
    }
    RationalFunction p = a[c * n + c];
    det *= p;
    for (size_t j = 0; j < n; ++j) {
      a[c * n + j] /= p;
      b[c * n + j] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r * n + c].is_zero()) continue;
      RationalFunction f = a[r * n + c];
      for (size_t j = 0; j < n; ++j) {
        if (!a[c * n + j].is_zero()) a[r * n + j] -= f * a[c * n + j];
        if (!b[c * n + j].is_zero()) b[r * n + j] -= f * b[c * n + j];
      }
    }
  }
  if (inv) *inv = std::move(b);
  return det;
}

}  // namespace

RationalFunction ParamMatrix::det() const { return eliminate(*this, nullptr); }

std::optional<std::vector<RationalFunction>> ParamMatrix::inverse() const {
  std::vector<RationalFunction> inv;
  if (eliminate(*this, &inv).is_zero()) return std::nullopt;
  return inv;
}

size_t ParamAlgebra::idx(size_t i, size_t j, size_t k) const {
  if (i >= j || j >= n_ || k >= n_) throw std::out_of_range("ParamAlgebra index");
  size_t pair = i * n_ - i * (i + 1) / 2 + (j - i - 1);
  return pair * n_ + k;
}

RationalFunction ParamAlgebra::get(size_t i, size_t j, size_t k) const {
  if (i == j) return RationalFunction();
  if (i > j) return -c_[idx(j, i, k)];
  return c_[idx(i, j, k)];
}

void ParamAlgebra::set(size_t i, size_t j, size_t k, RationalFunction v) { c_[idx(i, j, k)] = std::move(v); }

ParamAlgebra param_act(const LieAlgebra& g, const ParamMatrix& F) {
  const size_t n = g.dim();
  if (F.n() != n) throw std::invalid_argument("param_act: dimension mismatch");
  ParamAlgebra out(n);
  if (F.is_monomial_diagonal()) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        for (const auto& [k, c] : g.sc().pair(i, j)) {
          int e = F(i, i).low() + F(j, j).low() - F(k, k).low();
          Scalar s = c * F(i, i).coeff(F(i, i).low()) * F(j, j).coeff(F(j, j).low()) / F(k, k).coeff(F(k, k).low());
          out.set(i, j, k, RationalFunction(LaurentPoly(s, e)));
        }
    return out;
  }
  auto inv = F.inverse();
  if (!inv) throw std::invalid_argument("param_act: the family is identically singular");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      std::vector<LaurentPoly> w(n);
      for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
          const auto& br = g.sc().pair(a, b);
          if (br.empty()) continue;
          LaurentPoly m = F(a, i) * F(b, j) - F(b, i) * F(a, j);
          if (m.is_zero()) continue;
          for (const auto& [k, c] : br) w[k] += LaurentPoly(c) * m;
        }
      for (size_t k = 0; k < n; ++k) {
        RationalFunction s;
        for (size_t m = 0; m < n; ++m)
          if (!w[m].is_zero() && !(*inv)[k * n + m].is_zero()) s += (*inv)[k * n + m] * RationalFunction(w[m]);
        if (!s.is_zero()) out.set(i, j, k, s);
      }
    }
  return out;
}

std::optional<LieAlgebra> limit_at_zero(const ParamAlgebra& pa, const std::string& name) {
  const size_t n = pa.n();
  StructureConstants sc(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        RationalFunction r = pa.get(i, j, k);
        if (r.is_zero()) continue;
        auto v = r.value_at_zero();
        if (!v) return std::nullopt;
        sc.set(i, j, k, *v);
      }
  return LieAlgebra(sc, Field::Q, name);
}

InonuWigner inonu_wigner(const LieAlgebra& g, const Subspace& h) {
  const size_t n = g.dim();
  if (h.ambient() != n) throw std::invalid_argument("inonu_wigner: dimension mismatch");
  if (!is_subalgebra(g, h)) throw std::invalid_argument("inonu_wigner: h is not a subalgebra");
  std::vector<Vec> cols(n);
  std::vector<bool> in_h(n, false);
  for (size_t r = 0; r < h.dim(); ++r) {
    cols[h.pivots()[r]] = h.basis()[r];
    in_h[h.pivots()[r]] = true;
  }
  for (size_t k = 0; k < n; ++k)
    if (!in_h[k]) cols[k] = unit_vec(n, k);
  InonuWigner out;
  out.basis = Matrix::from_columns(cols, n);
  out.h_slots = h.pivots();
  LieAlgebra ga = act(g, out.basis);
  StructureConstants sc(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (!in_h[i] && !in_h[j]) continue;
      bool both = in_h[i] && in_h[j];
      for (const auto& [k, c] : ga.sc().pair(i, j))
        if (both || !in_h[k]) sc.set(i, j, k, c);
    }
  out.algebra = LieAlgebra(sc, g.field(), g.name().empty() ? "" : g.name() + "_IW");
  return out;
}

std::optional<LieAlgebra> weimar_woods(const LieAlgebra& g, const std::vector<int>& exponents) {
  if (exponents.size() != g.dim()) throw std::invalid_argument("weimar_woods: one exponent per basis vector");
  return limit_at_zero(param_act(g, ParamMatrix::diagonal(exponents)));
}

namespace {

// Exact structure-constant equality of the WW limit with target, integer test.
bool ww_matches(const LieAlgebra& g, const std::vector<int>& e, const LieAlgebra& target) {
  const size_t n = g.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const auto& a = g.sc().pair(i, j);
      const auto& t = target.sc().pair(i, j);
      size_t ti = 0;
      for (const auto& [k, c] : a) {
        int s = e[i] + e[j] - e[k];
        if (s < 0) return false;
        if (s == 0) {
          if (ti >= t.size() || t[ti].first != k || !(t[ti].second == c)) return false;
          ++ti;
        }
      }
      if (ti != t.size()) return false;
    }
  return true;
}

bool next_tuple(std::vector<int>& v, int lo, int hi) {
  for (size_t i = v.size(); i-- > 0;) {
    if (v[i] < hi) {
      ++v[i];
      return true;
    }
    v[i] = lo;
  }
  return false;
}

}  // namespace

std::optional<WeimarWoodsWitness> search_weimar_woods(const LieAlgebra& g, const LieAlgebra& target, int bound) {
  const size_t n = g.dim();
  if (target.dim() != n) throw std::invalid_argument("search_weimar_woods: dimension mismatch");
  auto try_basis = [&](const Matrix& B) -> std::optional<WeimarWoodsWitness> {
    LieAlgebra gb = act(g, B);
    std::vector<int> e(n, -bound);
    do {
      if (ww_matches(gb, e, target)) return WeimarWoodsWitness{B, e};
    } while (next_tuple(e, -bound, bound));
    return std::nullopt;
  };
  if (auto w = try_basis(Matrix::identity(n))) return w;
  if (n < 2) return std::nullopt;
  std::vector<int> t(n, 0);
  while (next_tuple(t, 0, 2)) {
    Vec T(n);
    for (size_t i = 0; i < n; ++i) T[i] = Scalar(t[i]);
    std::vector<int> v(n, 0);
    while (next_tuple(v, 0, 2)) {
      std::vector<Vec> cols{T};
      Vec x(n);
      for (size_t i = 0; i < n; ++i) x[i] = Scalar(v[i]);
      cols.push_back(x);
      while (cols.size() < n) cols.push_back(bracket(g, T, cols.back()));
      Matrix B = Matrix::from_columns(cols, n);
      if (det(B).is_zero()) continue;
      if (auto w = try_basis(B)) return w;
    }
  }
  return std::nullopt;
}

std::vector<LieAlgebra> saletan(const LieAlgebra& g, const Matrix& G) {
  const size_t n = g.dim();
  if (G.rows() != n || G.cols() != n) throw std::invalid_argument("saletan: dimension mismatch");
  if (!det(G).is_zero()) throw std::invalid_argument("saletan: G must be singular");
  ParamMatrix F = ParamMatrix::affine(G, Matrix::identity(n) - G);
  std::vector<LieAlgebra> out;
  LieAlgebra cur = g;
  for (size_t step = 1; step <= n + 2; ++step) {
    auto lim = limit_at_zero(param_act(cur, F));
    if (!lim) throw std::runtime_error("saletan: no limit at step " + std::to_string(step));
    if (*lim == cur && step > 1) return out;
    if (*lim == cur) {
      out.push_back(*lim);
      return out;
    }
    out.push_back(*lim);
    cur = *lim;
  }
  throw std::runtime_error("saletan: sequence did not become stationary");
}

bool check_contact(const LieAlgebra& g, const ScalarForm& omega) {
  const size_t n = g.dim();
  if (n % 2 == 0) throw std::invalid_argument("contact forms need odd dimension");
  if (omega.p() != 1 || omega.n() != n) throw std::invalid_argument("contact: expected a 1-form");
  ScalarForm dw = exterior_derivative(g, omega);
  return !wedge(omega, wedge_power(dw, (n - 1) / 2)).top_coefficient().is_zero();
}

namespace {

// Symplectic basis (u1, v1, u2, v2, ...) of span(vs) for the form w, with w(u,v) = 1.
std::optional<std::vector<Vec>> symplectic_basis(const ScalarForm& w, std::vector<Vec> vs) {
  std::vector<Vec> out;
  while (!vs.empty()) {
    Vec u = vs.front();
    size_t partner = vs.size();
    Scalar val;
    for (size_t j = 1; j < vs.size(); ++j) {
      val = w.evaluate({u, vs[j]});
      if (!val.is_zero()) {
        partner = j;
        break;
      }
    }
    if (partner == vs.size()) return std::nullopt;
    Vec v = vec_scale(Scalar(1) / val, vs[partner]);
    std::vector<Vec> rest;
    for (size_t j = 1; j < vs.size(); ++j) {
      if (j == partner) continue;
      Vec x = vs[j];
      Scalar a = w.evaluate({x, v}), b = w.evaluate({x, u});
      vec_axpy(x, -a, u);
      vec_axpy(x, b, v);
      rest.push_back(std::move(x));
    }
    out.push_back(u);
    out.push_back(v);
    vs = std::move(rest);
  }
  return out;
}

std::vector<Vec> kernel_of_form(const ScalarForm& a) {
  Matrix row(1, a.n());
  for (size_t i = 0; i < a.n(); ++i) row(0, i) = a.coeffs()[i];
  return kernel(row);
}

}  // namespace

std::optional<ContactWitness> contact_witness(const LieAlgebra& g, const ScalarForm& omega) {
  if (!check_contact(g, omega)) return std::nullopt;
  const size_t n = g.dim();
  ScalarForm dw = exterior_derivative(g, omega);
  Matrix D = dw.matrix();
  // Reeb vector: omega(R) = 1 and d omega(R, .) = 0.
  Matrix sys(n + 1, n);
  Vec rhs(n + 1);
  for (size_t j = 0; j < n; ++j) {
    sys(0, j) = omega.coeffs()[j];
    for (size_t i = 0; i < n; ++i) sys(i + 1, j) = D(j, i);
  }
  rhs[0] = 1;
  auto R = solve(sys, rhs);
  if (!R) return std::nullopt;
  auto sb = symplectic_basis(dw, kernel_of_form(omega));
  if (!sb) return std::nullopt;
  std::vector<Vec> cols{*R};
  cols.insert(cols.end(), sb->begin(), sb->end());
  return ContactWitness{omega, Matrix::from_columns(cols, n)};
}

std::optional<ContactWitness> find_contact_form(const LieAlgebra& g) {
  const size_t n = g.dim();
  if (n % 2 == 0) throw std::invalid_argument("contact forms need odd dimension");
  std::vector<Vec> cands;
  for (size_t i = 0; i < n; ++i) cands.push_back(unit_vec(n, i));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) cands.push_back(vec_add(unit_vec(n, i), unit_vec(n, j)));
  for (const auto& c : cands)
    if (auto w = contact_witness(g, ScalarForm::one_form(c))) return w;
  if (n > 7) return std::nullopt;
  std::vector<int> t(n, -2);
  do {
    Vec c(n);
    for (size_t i = 0; i < n; ++i) c[i] = Scalar(t[i]);
    if (vec_is_zero(c)) continue;
    if (auto w = contact_witness(g, ScalarForm::one_form(c))) return w;
  } while (next_tuple(t, -2, 2));
  return std::nullopt;
}

LieAlgebra contract_contact_to_heisenberg(const LieAlgebra& g, const ContactWitness& w) {
  const size_t n = g.dim();
  if (!check_contact(g, w.omega)) throw std::invalid_argument("contact witness: form is not contact");
  std::vector<Vec> cols;
  for (size_t j = 1; j < n; ++j) cols.push_back(w.basis.col(j));
  cols.push_back(w.basis.col(0));
  Matrix B = Matrix::from_columns(cols, n);
  if (det(B).is_zero()) throw std::invalid_argument("contact witness: basis is singular");
  std::vector<int> e(n, 1);
  e[n - 1] = 2;
  auto lim = weimar_woods(act(g, B), e);
  if (!lim) throw std::invalid_argument("contact witness: basis is not adapted");
  return lim->renamed("heisenberg(" + std::to_string((n - 1) / 2) + ")");
}

bool check_frobenius(const LieAlgebra& g, const ScalarForm& omega) {
  const size_t n = g.dim();
  if (n % 2 == 1) throw std::invalid_argument("Frobenius forms need even dimension");
  if (omega.p() != 1 || omega.n() != n) throw std::invalid_argument("Frobenius: expected a 1-form");
  if (n == 0) return false;
  return !wedge_power(exterior_derivative(g, omega), n / 2).top_coefficient().is_zero();
}

FrobeniusContraction frobenius_contract_to_model(const LieAlgebra& g, const ScalarForm& omega) {
  const size_t n = g.dim();
  if (!check_frobenius(g, omega)) throw std::invalid_argument("frobenius: the form is not Frobeniusian");
  ScalarForm theta = exterior_derivative(g, omega);
  Matrix T = theta.matrix();
  // X2 with theta(X2, .) = -omega
  Vec rhs(n);
  for (size_t j = 0; j < n; ++j) rhs[j] = -omega.coeffs()[j];
  auto X2 = solve(T.transpose(), rhs);
  if (!X2) throw std::logic_error("frobenius: degenerate exact form");
  size_t k = 0;
  while (omega.coeffs()[k].is_zero()) ++k;
  Vec X1 = vec_scale(Scalar(1) / omega.coeffs()[k], unit_vec(n, k));
  // theta-orthogonal complement of span(X1, X2)
  Matrix sys(2, n);
  Vec a = T.transpose() * X1, b = T.transpose() * *X2;
  for (size_t j = 0; j < n; ++j) {
    sys(0, j) = a[j];
    sys(1, j) = b[j];
  }
  auto sb = symplectic_basis(theta, kernel(sys));
  if (!sb) throw std::logic_error("frobenius: complement is degenerate");
  std::vector<Vec> cols{X1, *X2};
  cols.insert(cols.end(), sb->begin(), sb->end());
  FrobeniusContraction out;
  out.basis = Matrix::from_columns(cols, n);
  std::vector<int> e(n, 1);
  e[0] = 2;
  e[1] = 0;
  auto lim = weimar_woods(act(g, out.basis), e);
  if (!lim) throw std::logic_error("frobenius: family has no limit");
  out.algebra = *lim;
  return out;
}

bool has_frobenius_model_shape(const LieAlgebra& g) {
  const size_t n = g.dim();
  if (n < 2 || n % 2 == 1) return false;
  auto d = [&](size_t j) { return exterior_derivative(g, ScalarForm::basis(n, {j})); };
  ScalarForm expect = ScalarForm::basis(n, {0, 1});
  for (size_t k = 2; k + 1 < n; k += 2) expect += ScalarForm::basis(n, {k, k + 1});
  if (!(d(0) == expect) || !d(1).is_zero()) return false;
  for (size_t j = 2; j < n; ++j) {
    ScalarForm w = d(j);
    const auto& comb = combinations(n, 2);
    for (size_t idx = 0; idx < comb.size(); ++idx) {
      if (w.coeffs()[idx].is_zero()) continue;
      if (comb[idx][0] != 1 || comb[idx][1] < 2) return false;
    }
  }
  return true;
}

}  // namespace liealg
