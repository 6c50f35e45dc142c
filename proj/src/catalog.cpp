#include "liealg/catalog.hpp"

#include <stdexcept>

#include "liealg/forms.hpp"

namespace liealg {

Matrix elementary(size_t m, size_t i, size_t j) {
  Matrix e(m, m);
  e(i, j) = 1;
  return e;
}

LieAlgebra abelian(size_t n) { return LieAlgebra(StructureConstants(n), Field::Q, "abelian(" + std::to_string(n) + ")"); }

LieAlgebra aff2() {
  StructureConstants sc(2);
  sc.set(0, 1, 1, 1);
  return LieAlgebra(sc, Field::Q, "aff2");
}

LieAlgebra heisenberg(size_t p) {
  if (p < 1) throw std::invalid_argument("heisenberg needs p >= 1");
  StructureConstants sc(2 * p + 1);
  for (size_t i = 0; i < p; ++i) sc.set(2 * i, 2 * i + 1, 2 * p, 1);
  return LieAlgebra(sc, Field::Q, "heisenberg(" + std::to_string(p) + ")");
}

LieAlgebra filiform_model(size_t n) {
  if (n < 2) throw std::invalid_argument("filiform_model needs n >= 2");
  StructureConstants sc(n);
  for (size_t i = 1; i + 1 < n; ++i) sc.set(0, i, i + 1, 1);
  return LieAlgebra(sc, Field::Q, "filiform_model(" + std::to_string(n) + ")");
}

static Matrix matrix_commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

LieAlgebra commutator_algebra(const std::vector<Matrix>& basis, Field field, std::string name) {
  const size_t n = basis.size();
  if (n == 0) return LieAlgebra(StructureConstants(0), field, std::move(name));
  const size_t m = basis[0].rows();
  auto flat = [m](const Matrix& a) {
    Vec v;
    v.reserve(m * m);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) v.push_back(a(i, j));
    return v;
  };
  std::vector<Vec> cols;
  for (const auto& b : basis) {
    if (b.rows() != m || b.cols() != m) throw std::invalid_argument("commutator_algebra: matrices of different sizes");
    cols.push_back(flat(b));
  }
  Matrix A = Matrix::from_columns(cols, m * m);
  // n independent rows of A give a square invertible system
  Echelon e = rref(A.transpose());
  if (e.pivots.size() != n) throw std::invalid_argument("commutator_algebra: matrices are linearly dependent");
  Matrix sub(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) sub(r, c) = A(e.pivots[r], c);
  Matrix sub_inv = *inverse(sub);
  StructureConstants sc(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec v = flat(matrix_commutator(basis[i], basis[j]));
      Vec vp(n);
      for (size_t r = 0; r < n; ++r) vp[r] = v[e.pivots[r]];
      Vec c = sub_inv * vp;
      if (!(A * c == v)) throw std::invalid_argument("commutator_algebra: span is not closed under the commutator");
      for (size_t k = 0; k < n; ++k) sc.set(i, j, k, c[k]);
    }
  return LieAlgebra(sc, field, std::move(name));
}

LieAlgebra sl2() {
  Matrix H = elementary(2, 0, 0) - elementary(2, 1, 1);
  return commutator_algebra({H, elementary(2, 0, 1), elementary(2, 1, 0)}, Field::Q, "sl2");
}

LieAlgebra so(size_t n) {
  if (n < 2) throw std::invalid_argument("so(n) needs n >= 2");
  std::vector<Matrix> basis;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) basis.push_back(elementary(n, i, j) - elementary(n, j, i));
  return commutator_algebra(basis, Field::Q, "so(" + std::to_string(n) + ")");
}

LieAlgebra so3_cyclic() {
  auto A = [](size_t i, size_t j) { return elementary(3, i, j) - elementary(3, j, i); };
  return commutator_algebra({A(2, 1), A(0, 2), A(1, 0)}, Field::Q, "so3");
}

LieAlgebra poincare() {
  const Scalar eta[4] = {Scalar(-1), Scalar(1), Scalar(1), Scalar(1)};
  std::vector<Matrix> basis;
  for (size_t mu = 0; mu < 4; ++mu)
    for (size_t nu = mu + 1; nu < 4; ++nu) {
      // (M_{mu nu})_{ab} = eta_{mu b} delta_{nu a} - eta_{nu b} delta_{mu a}
      Matrix M(5, 5);
      M(nu, mu) = eta[mu];
      M(mu, nu) = -eta[nu];
      basis.push_back(M);
    }
  for (size_t mu = 0; mu < 4; ++mu) basis.push_back(elementary(5, mu, 4));
  return commutator_algebra(basis, Field::Q, "poincare");
}

LieAlgebra rigid11() {
  // index 0 is X, index i+1 is X_i
  StructureConstants sc(11);
  auto x = [](size_t i) { return i + 1; };
  for (size_t i = 1; i <= 9; ++i) sc.set(0, x(i), x(i), Scalar(static_cast<long>(i)));
  for (size_t i = 4; i <= 9; ++i) sc.set(x(0), x(i), x(i), 1);
  for (size_t i : {2, 4, 5, 6, 7, 8}) sc.set(x(1), x(i), x(i + 1), 1);
  for (size_t i = 4; i <= 7; ++i) sc.set(x(2), x(i), x(i + 2), 1);
  return LieAlgebra(sc, Field::Q, "rigid11");
}

LieAlgebra frobenius_model(size_t p, const std::vector<Scalar>& phi) {
  if (p < 1) throw std::invalid_argument("frobenius_model needs p >= 1");
  if (phi.size() != p - 1) throw std::invalid_argument("frobenius_model needs p-1 parameters");
  const size_t n = 2 * p;
  std::vector<ScalarForm> dw(n, ScalarForm(n, 2));
  dw[0] = ScalarForm::basis(n, {0, 1});
  for (size_t k = 1; k < p; ++k) {
    size_t a = 2 * k, b = 2 * k + 1;
    dw[0] += ScalarForm::basis(n, {a, b});
    dw[a] = phi[k - 1] * ScalarForm::basis(n, {1, a});
    dw[b] = (Scalar(-1) - phi[k - 1]) * ScalarForm::basis(n, {1, b});
  }
  return LieAlgebra(from_maurer_cartan(dw), Field::Q, "frobenius_model(" + std::to_string(p) + ")");
}

LieAlgebra four_dim_solvable() { return direct_sum(aff2(), aff2()).renamed("four_dim_solvable"); }

LieAlgebra filiform4_target() {
  StructureConstants sc(4);
  sc.set(0, 1, 2, 1);
  sc.set(0, 2, 3, 1);
  return LieAlgebra(sc, Field::Q, "filiform4_target");
}

namespace {

long param(const std::map<std::string, long>& p, const std::string& key, long def, bool required) {
  auto it = p.find(key);
  if (it == p.end()) {
    if (required) throw std::invalid_argument("missing parameter --" + key);
    return def;
  }
  return it->second;
}

size_t positive(long v, const std::string& what) {
  if (v < 1) throw std::invalid_argument(what + " must be positive");
  return static_cast<size_t>(v);
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"abelian", "aff2", "heisenberg", "filiform_model", "sl2", "so", "so3", "poincare",
          "rigid11", "frobenius_model", "four_dim_solvable", "filiform4_target"};
}

LieAlgebra catalog_build(const std::string& name, const std::map<std::string, long>& p) {
  if (name == "abelian") return abelian(static_cast<size_t>(std::max(0L, param(p, "n", 2, true))));
  if (name == "aff2") return aff2();
  if (name == "heisenberg") return heisenberg(positive(param(p, "p", 1, false), "p"));
  if (name == "filiform_model") return filiform_model(positive(param(p, "n", 4, true), "n"));
  if (name == "sl2") return sl2();
  if (name == "so") return so(positive(param(p, "n", 3, true), "n"));
  if (name == "so3") return so3_cyclic();
  if (name == "poincare") return poincare();
  if (name == "rigid11") return rigid11();
  if (name == "frobenius_model") {
    size_t pp = positive(param(p, "p", 2, false), "p");
    std::vector<Scalar> phi(pp - 1, Scalar(param(p, "phi", 1, false)));
    return frobenius_model(pp, phi);
  }
  if (name == "four_dim_solvable") return four_dim_solvable();
  if (name == "filiform4_target") return filiform4_target();
  throw std::invalid_argument("unknown catalog entry: " + name);
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"abelian", {{"n", 1}}, abelian(1), "abelian algebra"});
  c.push_back({"abelian", {{"n", 3}}, abelian(3), "abelian algebra"});
  c.push_back({"aff2", {}, aff2(), "two-dimensional non-abelian algebra"});
  c.push_back({"heisenberg", {{"p", 1}}, heisenberg(1), "Heisenberg algebra h3"});
  c.push_back({"heisenberg", {{"p", 2}}, heisenberg(2), "Heisenberg algebra h5"});
  c.push_back({"filiform_model", {{"n", 4}}, filiform_model(4), "model filiform algebra"});
  c.push_back({"filiform_model", {{"n", 5}}, filiform_model(5), "model filiform algebra"});
  c.push_back({"sl2", {}, sl2(), "trace-zero 2x2 matrices"});
  c.push_back({"so3", {}, so3_cyclic(), "rotations, cyclic basis"});
  c.push_back({"so", {{"n", 4}}, so(4), "antisymmetric 4x4 matrices"});
  c.push_back({"poincare", {}, poincare(), "Poincare algebra"});
  c.push_back({"rigid11", {}, rigid11(), "rigid algebra with nonzero H2"});
  c.push_back({"frobenius_model", {{"p", 2}, {"phi", 1}}, frobenius_model(2, {Scalar(1)}), "Frobenius model"});
  c.push_back({"four_dim_solvable", {}, four_dim_solvable(), "aff2 + aff2"});
  c.push_back({"filiform4_target", {}, filiform4_target(), "4-dim filiform"});
  return c;
}

}  // namespace liealg
