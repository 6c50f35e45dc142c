#include "liealg/geometry.hpp"

#include <random>
#include <stdexcept>

#include "liealg/combinatorics.hpp"
#include "liealg/invariants.hpp"

namespace liealg {

Vec PreLieProduct::basis_product(size_t i, size_t j) const {
  return Vec(c_.begin() + (i * n_ + j) * n_, c_.begin() + (i * n_ + j + 1) * n_);
}

Vec PreLieProduct::product(const Vec& x, const Vec& y) const {
  Vec out(n_);
  for (size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      vec_axpy(out, x[i] * y[j], basis_product(i, j));
    }
  }
  return out;
}

bool symplectic_check(const LieAlgebra& g, const ScalarForm& omega) {
  const size_t n = g.dim();
  if (n % 2 == 1) throw std::invalid_argument("symplectic forms need even dimension");
  if (omega.p() != 2 || omega.n() != n) throw std::invalid_argument("symplectic_check: expected a 2-form");
  if (!exterior_derivative(g, omega).is_zero()) return false;
  return n == 0 || !wedge_power(omega, n / 2).top_coefficient().is_zero();
}

std::optional<ScalarForm> exact_primitive(const LieAlgebra& g, const ScalarForm& omega) {
  const size_t n = g.dim();
  std::vector<Vec> cols;
  for (size_t i = 0; i < n; ++i) cols.push_back(exterior_derivative(g, ScalarForm::basis(n, {i})).coeffs());
  if (cols.empty()) return omega.is_zero() ? std::optional<ScalarForm>(ScalarForm(n, 1)) : std::nullopt;
  auto a = solve(Matrix::from_columns(cols, omega.coeffs().size()), omega.coeffs());
  if (!a) return std::nullopt;
  return ScalarForm::one_form(*a);
}

std::optional<ScalarForm> find_frobenius_form(const LieAlgebra& g) {
  const size_t n = g.dim();
  if (n == 0 || n % 2 == 1) return std::nullopt;
  const size_t p = n / 2;
  std::vector<ScalarForm> d;
  for (size_t i = 0; i < n; ++i) d.push_back(exterior_derivative(g, ScalarForm::basis(n, {i})));
  std::vector<size_t> t(n, 0);
  for (;;) {
    ScalarForm da(n, 2);
    for (size_t i = 0; i < n; ++i)
      if (t[i]) da += Scalar(static_cast<long>(t[i])) * d[i];
    if (!wedge_power(da, p).top_coefficient().is_zero()) {
      Vec a(n);
      for (size_t i = 0; i < n; ++i) a[i] = Scalar(static_cast<long>(t[i]));
      return ScalarForm::one_form(a);
    }
    size_t i = n;
    while (i-- > 0 && t[i] == p) t[i] = 0;
    if (i == static_cast<size_t>(-1)) break;
    ++t[i];
  }
  return std::nullopt;
}

bool left_symmetric(const PreLieProduct& p) {
  const size_t n = p.n();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        Vec ec = unit_vec(n, c);
        // (a.b).c - a.(b.c) - (b.a).c + b.(a.c)
        Vec r = p.product(p.basis_product(a, b), ec);
        r = vec_sub(r, p.product(unit_vec(n, a), p.basis_product(b, c)));
        r = vec_sub(r, p.product(p.basis_product(b, a), ec));
        r = vec_add(r, p.product(unit_vec(n, b), p.basis_product(a, c)));
        if (!vec_is_zero(r)) return false;
      }
  return true;
}

PreLieReport preLie_check(const LieAlgebra& g, const PreLieProduct& p) {
  const size_t n = g.dim();
  if (p.n() != n) throw std::invalid_argument("preLie_check: dimension mismatch");
  PreLieReport r;
  r.left_symmetric = left_symmetric(p);
  r.commutator_is_bracket = true;
  for (size_t i = 0; i < n && r.commutator_is_bracket; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!(vec_sub(p.basis_product(i, j), p.basis_product(j, i)) == g.basis_bracket(i, j))) {
        r.commutator_is_bracket = false;
        break;
      }
  return r;
}

PreLieProduct preLie_from_symplectic(const LieAlgebra& g, const ScalarForm& omega) {
  if (!symplectic_check(g, omega)) throw std::invalid_argument("preLie_from_symplectic: form is not symplectic");
  const size_t n = g.dim();
  Matrix M = omega.matrix();
  Matrix Mt = M.transpose();
  PreLieProduct p(n);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      Vec rhs(n);
      for (size_t z = 0; z < n; ++z) rhs[z] = -omega.evaluate({unit_vec(n, y), g.basis_bracket(x, z)});
      auto w = solve(Mt, rhs);
      if (!w) throw std::logic_error("preLie_from_symplectic: degenerate form");
      for (size_t k = 0; k < n; ++k) p.set(x, y, k, (*w)[k]);
    }
  return p;
}

PreLieProduct preLie_from_derivation(const LieAlgebra& g, const Matrix& f, bool derived_variant) {
  const size_t n = g.dim();
  if (!is_derivation(g, f)) throw std::invalid_argument("preLie_from_derivation: f is not a derivation");
  std::optional<Matrix> finv = inverse(f);
  // images mu(fX, Y) lie in [g, g]; solve f w = v there
  Matrix fmat = f;
  if (!finv) {
    if (!derived_variant) throw std::invalid_argument("preLie_from_derivation: f is singular");
    Subspace der = bracket_span(g, Subspace::whole(n), Subspace::whole(n));
    std::vector<Vec> img;
    for (const auto& b : der.basis()) img.push_back(f * b);
    if (Subspace::span(n, img).dim() != der.dim())
      throw std::invalid_argument("preLie_from_derivation: f is not invertible on the derived algebra");
  }
  PreLieProduct p(n);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      Vec v = bracket(g, f.col(x), unit_vec(n, y));
      Vec w;
      if (finv) {
        w = *finv * v;
      } else {
        if (vec_is_zero(v)) continue;
        Subspace der = bracket_span(g, Subspace::whole(n), Subspace::whole(n));
        Matrix B = Matrix::from_columns(der.basis(), n);
        auto c = solve(fmat * B, v);
        if (!c) throw std::logic_error("preLie_from_derivation: image outside f([g,g])");
        w = B * *c;
      }
      for (size_t k = 0; k < n; ++k) p.set(x, y, k, w[k]);
    }
  return p;
}

namespace {

bool baxter_identity(const LieAlgebra& g, const Matrix& R, bool rota) {
  const size_t n = g.dim();
  if (R.rows() != n || R.cols() != n) throw std::invalid_argument("operator: dimension mismatch");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec x = unit_vec(n, i), y = unit_vec(n, j);
      Vec rx = R.col(i), ry = R.col(j);
      Vec lhs = bracket(g, rx, ry);
      if (rota) lhs = vec_add(lhs, bracket(g, x, y));
      Vec rhs = R * vec_add(bracket(g, rx, y), bracket(g, x, ry));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

}  // namespace

bool yang_baxter_check(const LieAlgebra& g, const Matrix& R) { return baxter_identity(g, R, false); }
bool rota_baxter_check(const LieAlgebra& g, const Matrix& R) { return baxter_identity(g, R, true); }

OperatorPreLie preLie_from_operator(const LieAlgebra& g, const Matrix& R, std::optional<OperatorKind> kind) {
  const size_t n = g.dim();
  OperatorPreLie out;
  if (kind) {
    bool ok = *kind == OperatorKind::YangBaxter ? yang_baxter_check(g, R) : rota_baxter_check(g, R);
    if (!ok) throw std::invalid_argument("preLie_from_operator: R does not satisfy the requested identity");
    out.kind = *kind;
  } else if (yang_baxter_check(g, R)) {
    out.kind = OperatorKind::YangBaxter;
  } else if (rota_baxter_check(g, R)) {
    out.kind = OperatorKind::RotaBaxter;
  } else {
    throw std::invalid_argument("preLie_from_operator: R satisfies neither Baxter identity");
  }
  out.product = PreLieProduct(n);
  out.mu_prime = StructureConstants(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec v = bracket(g, R.col(i), unit_vec(n, j));
      for (size_t k = 0; k < n; ++k) out.product.set(i, j, k, v[k]);
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec v = vec_sub(out.product.basis_product(i, j), out.product.basis_product(j, i));
      for (size_t k = 0; k < n; ++k) out.mu_prime.set(i, j, k, v[k]);
    }
  out.left_symmetric = left_symmetric(out.product);
  out.mu_prime_jacobi = validate_jacobi(out.mu_prime).ok;
  out.mu_prime_equals_mu = out.mu_prime == g.sc();
  return out;
}

bool complex_structure_check(const LieAlgebra& g, const Matrix& J) {
  const size_t n = g.dim();
  if (n % 2 == 1) throw std::invalid_argument("complex structures need even dimension");
  if (J.rows() != n || J.cols() != n) throw std::invalid_argument("complex_structure_check: dimension mismatch");
  if (!(J * J == Scalar(-1) * Matrix::identity(n))) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec jx = J.col(i), jy = J.col(j);
      Vec lhs = bracket(g, jx, jy);
      Vec rhs = vec_add(g.basis_bracket(i, j),
                        J * vec_add(bracket(g, jx, unit_vec(n, j)), bracket(g, unit_vec(n, i), jy)));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

ComplexSearch search_complex_structure(const LieAlgebra& g, size_t count, unsigned seed) {
  const size_t n = g.dim();
  if (n % 2 == 1) throw std::invalid_argument("complex structures need even dimension");
  Matrix J0(n, n);
  for (size_t k = 0; k < n / 2; ++k) {
    J0(2 * k + 1, 2 * k) = 1;
    J0(2 * k, 2 * k + 1) = -1;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-2, 2);
  ComplexSearch s;
  while (s.candidates < count) {
    Matrix P(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) P(i, j) = Scalar(dist(rng));
    auto Pi = inverse(P);
    if (!Pi) continue;
    ++s.candidates;
    Matrix J = P * J0 * *Pi;
    if (complex_structure_check(g, J)) {
      s.found = J;
      return s;
    }
  }
  return s;
}

Vec coadjoint_bracket(const LieAlgebra& g, const Vec& u, const Vec& v) {
  const size_t n = g.dim();
  Vec X(u.begin(), u.begin() + n), a(u.begin() + n, u.end());
  Vec Y(v.begin(), v.begin() + n), b(v.begin() + n, v.end());
  Vec out(2 * n);
  Vec xy = bracket(g, X, Y);
  for (size_t k = 0; k < n; ++k) out[k] = xy[k];
  for (size_t z = 0; z < n; ++z) {
    Vec ez = unit_vec(n, z);
    Vec xz = bracket(g, X, ez), yz = bracket(g, Y, ez);
    Scalar s;
    for (size_t k = 0; k < n; ++k) s += -b[k] * xz[k] + a[k] * yz[k];
    out[n + z] = s;
  }
  return out;
}

Matrix generalized_from_complex(const Matrix& j) {
  const size_t n = j.rows();
  Matrix J(2 * n, 2 * n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      J(r, c) = -j(r, c);
      J(n + r, n + c) = j(c, r);
    }
  return J;
}

Matrix generalized_from_symplectic(const ScalarForm& omega) {
  const size_t n = omega.n();
  Matrix Mt = omega.matrix().transpose();
  auto inv = inverse(Mt);
  if (!inv) throw std::invalid_argument("generalized_from_symplectic: degenerate form");
  Matrix J(2 * n, 2 * n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      J(n + r, c) = Mt(r, c);
      J(r, n + c) = -(*inv)(r, c);
    }
  return J;
}

GeneralizedReport generalized_complex_check(const LieAlgebra& g, const Matrix& J) {
  const size_t n = g.dim(), m = 2 * n;
  if (J.rows() != m || J.cols() != m) throw std::invalid_argument("generalized_complex_check: expected a 2n x 2n matrix");
  GeneralizedReport r;
  Matrix G(m, m);
  for (size_t i = 0; i < n; ++i) {
    G(i, n + i) = Scalar(1, 2);
    G(n + i, i) = Scalar(1, 2);
  }
  r.isometry = J.transpose() * G * J == G;
  r.square = J * J == Scalar(-1) * Matrix::identity(m);
  if (!r.square) throw std::invalid_argument("generalized_complex_check: J^2 != -Id, eigenspace undefined");
  Matrix A = J;
  for (size_t i = 0; i < m; ++i) A(i, i) -= Scalar::imag_unit();
  Subspace L = Subspace::span(m, kernel(A));
  const auto& Lb = L.basis();
  bool iso = L.dim() == n;
  for (size_t a = 0; a < Lb.size() && iso; ++a)
    for (size_t b = a; b < Lb.size(); ++b) {
      Scalar s;
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) s += Lb[a][i] * G(i, j) * Lb[b][j];
      if (!s.is_zero()) {
        iso = false;
        break;
      }
    }
  r.L_isotropic_maximal = iso;
  r.L_involutive = true;
  for (size_t a = 0; a < Lb.size() && r.L_involutive; ++a)
    for (size_t b = a + 1; b < Lb.size(); ++b)
      if (!L.contains(coadjoint_bracket(g, Lb[a], Lb[b]))) {
        r.L_involutive = false;
        break;
      }
  std::vector<Vec> proj;
  for (const auto& v : Lb) proj.emplace_back(v.begin(), v.begin() + n);
  size_t rk = proj.empty() ? 0 : Subspace::span(n, proj).dim();
  r.type = static_cast<int>(n - rk);
  return r;
}

std::optional<DoubleExtension> double_extension(const LieAlgebra& g, const ScalarForm& omega, const Matrix& D) {
  const size_t n = g.dim();
  if (!symplectic_check(g, omega)) throw std::invalid_argument("double_extension: form is not symplectic");
  if (!is_derivation(g, D)) throw std::invalid_argument("double_extension: D is not a derivation");
  Matrix M = omega.matrix();
  auto Minv = inverse(M);
  // omega(D* X, Y) = omega(X, D Y): (D*)^T M = M D
  Matrix Dstar = (M * D * *Minv).transpose();
  Matrix S = D + Dstar;
  Matrix K = S * D + Dstar * S;
  auto w = [&](const Vec& x, const Vec& y) { return omega.evaluate({x, y}); };
  // Omega(X, Y) = omega(Z, [X, Y]) for all basis pairs, Z unknown
  const auto& pairs = combinations(n, 2);
  Matrix sys(pairs.size(), n);
  Vec rhs(pairs.size());
  for (size_t r = 0; r < pairs.size(); ++r) {
    size_t i = pairs[r][0], j = pairs[r][1];
    rhs[r] = w(K.col(i), unit_vec(n, j));
    Vec br = g.basis_bracket(i, j);
    for (size_t z = 0; z < n; ++z) sys(r, z) = w(unit_vec(n, z), br);
  }
  std::optional<Vec> Z = pairs.size() ? solve(sys, rhs) : std::optional<Vec>(Vec(n));
  if (!Z) return std::nullopt;
  const size_t e = n, d = n + 1;
  StructureConstants sc(n + 2);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      for (const auto& [k, c] : g.sc().pair(i, j)) sc.set(i, j, k, c);
      // f(X, Y) = omega(DX, Y) + omega(X, DY)
      sc.set(i, j, e, w(D.col(i), unit_vec(n, j)) + w(unit_vec(n, i), D.col(j)));
    }
  // [d, X] = D1(X) = -D X - omega(Z, X) e
  for (size_t i = 0; i < n; ++i) {
    Vec dx = D.col(i);
    for (size_t k = 0; k < n; ++k)
      if (!dx[k].is_zero()) sc.set(i, d, k, dx[k]);  // [X, d] = -[d, X]
    Scalar c = w(*Z, unit_vec(n, i));
    if (!c.is_zero()) sc.set(i, d, e, c);
  }
  DoubleExtension out;
  out.algebra = LieAlgebra(sc, g.field(), g.name().empty() ? "" : g.name() + "_dext");
  ScalarForm w1(n + 2, 2);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) w1 += omega.value({i, j}) * ScalarForm::basis(n + 2, {i, j});
  w1 += ScalarForm::basis(n + 2, {e, d});
  out.omega = w1;
  out.Z = *Z;
  return out;
}

}  // namespace liealg
