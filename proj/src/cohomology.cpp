#include "liealg/cohomology.hpp"

#include <stdexcept>

#include "liealg/invariants.hpp"

namespace liealg {

Cochain::Cochain(size_t n, size_t p) : n_(n), p_(p), c_(binomial(n, p) * n) {}

Cochain::Cochain(size_t n, size_t p, Vec coeffs) : n_(n), p_(p), c_(std::move(coeffs)) {
  if (c_.size() != binomial(n, p) * n) throw std::invalid_argument("cochain coefficient count mismatch");
}

Cochain Cochain::from_algebra(const LieAlgebra& g) {
  const size_t n = g.dim();
  Cochain c(n, 2);
  const auto& comb = combinations(n, 2);
  for (size_t idx = 0; idx < comb.size(); ++idx)
    for (const auto& [k, v] : g.sc().pair(comb[idx][0], comb[idx][1])) c.c_[idx * n + k] = v;
  return c;
}

Cochain Cochain::from_matrix(const Matrix& f) {
  const size_t n = f.rows();
  if (f.cols() != n) throw std::invalid_argument("1-cochain needs a square matrix");
  Cochain c(n, 1);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) c.c_[i * n + k] = f(k, i);
  return c;
}

Cochain Cochain::from_vector(const Vec& x) { return Cochain(x.size(), 0, x); }

Cochain Cochain::basis(size_t n, size_t p, size_t flat) {
  Cochain c(n, p);
  c.c_.at(flat) = 1;
  return c;
}

const Scalar& Cochain::at(const Tuple& t, size_t k) const {
  return c_[combinations(n_, p_).index(t) * n_ + k];
}

void Cochain::set(Tuple t, size_t k, const Scalar& v) {
  int s = sort_with_sign(t);
  if (s == 0) {
    if (!v.is_zero()) throw std::invalid_argument("alternating cochain on repeated arguments");
    return;
  }
  c_[combinations(n_, p_).index(t) * n_ + k] = s > 0 ? v : -v;
}

Vec Cochain::value(const Tuple& t) const {
  Vec out(n_);
  Tuple s = t;
  int sign = sort_with_sign(s);
  if (sign == 0) return out;
  size_t base = combinations(n_, p_).index(s) * n_;
  for (size_t k = 0; k < n_; ++k) out[k] = sign > 0 ? c_[base + k] : -c_[base + k];
  return out;
}

Vec Cochain::value_first(const Vec& x, const Tuple& rest) const {
  Vec out(n_);
  for (size_t m = 0; m < n_; ++m) {
    if (x[m].is_zero()) continue;
    Tuple t{m};
    t.insert(t.end(), rest.begin(), rest.end());
    vec_axpy(out, x[m], value(t));
  }
  return out;
}

Matrix Cochain::to_matrix() const {
  if (p_ != 1) throw std::invalid_argument("only 1-cochains are matrices");
  Matrix f(n_, n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t k = 0; k < n_; ++k) f(k, i) = c_[i * n_ + k];
  return f;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (n_ != o.n_ || p_ != o.p_) throw std::invalid_argument("cochain shape mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (n_ != o.n_ || p_ != o.p_) throw std::invalid_argument("cochain shape mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cochain operator*(const Scalar& s, const Cochain& a) {
  Cochain r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

StructureConstants Cochain::to_structure_constants() const {
  if (p_ != 2) throw std::invalid_argument("only 2-cochains define brackets");
  StructureConstants sc(n_);
  const auto& comb = combinations(n_, 2);
  for (size_t idx = 0; idx < comb.size(); ++idx)
    for (size_t k = 0; k < n_; ++k) sc.set(comb[idx][0], comb[idx][1], k, c_[idx * n_ + k]);
  return sc;
}

namespace {

// out += c * mu(e_a, v)
void add_mu_basis_left(const LieAlgebra& g, size_t a, const Vec& v, const Scalar& c, Vec& out) {
  for (size_t b = 0; b < g.dim(); ++b) {
    if (v[b].is_zero() || a == b) continue;
    Scalar f = c * v[b];
    if (a > b) f = -f;
    const auto& row = a < b ? g.sc().pair(a, b) : g.sc().pair(b, a);
    for (const auto& [k, x] : row) out[k] += f * x;
  }
}

}  // namespace

Cochain delta(const LieAlgebra& g, const Cochain& phi) {
  const size_t n = g.dim(), p = phi.p();
  if (phi.n() != n) throw std::invalid_argument("delta: dimension mismatch");
  Cochain out(n, p + 1);
  if (p + 1 > n) return out;
  const Scalar sign = (p % 2 == 1) ? Scalar(1) : Scalar(-1);  // (-1)^{p+1}
  const auto& comb = combinations(n, p + 1);
  for (size_t idx = 0; idx < comb.size(); ++idx) {
    const Tuple& J = comb[idx];
    Vec acc(n);
    // sum_l (-1)^{l+1} mu(Y_l, phi(..^l..)), l 1-based
    for (size_t l = 0; l <= p; ++l) {
      Tuple rest;
      for (size_t c = 0; c <= p; ++c)
        if (c != l) rest.push_back(J[c]);
      Vec v = phi.value(rest);
      if (vec_is_zero(v)) continue;
      add_mu_basis_left(g, J[l], v, (l % 2 == 0) ? Scalar(1) : Scalar(-1), acc);
    }
    // sum_{r<s} (-1)^{r+s} phi(mu(Y_r,Y_s), rest)
    for (size_t r = 0; r <= p; ++r)
      for (size_t s = r + 1; s <= p; ++s) {
        const auto& br = g.sc().pair(J[r], J[s]);
        if (br.empty()) continue;
        Tuple rest;
        for (size_t c = 0; c <= p; ++c)
          if (c != r && c != s) rest.push_back(J[c]);
        Scalar sg = ((r + s) % 2 == 0) ? Scalar(1) : Scalar(-1);
        for (const auto& [m, x] : br) {
          Tuple t{m};
          t.insert(t.end(), rest.begin(), rest.end());
          vec_axpy(acc, sg * x, phi.value(t));
        }
      }
    for (size_t k = 0; k < n; ++k)
      if (!acc[k].is_zero()) out.coeffs()[idx * n + k] = sign * acc[k];
  }
  return out;
}

SparseMatrix delta_matrix(const LieAlgebra& g, size_t p) {
  const size_t n = g.dim();
  const size_t cols = binomial(n, p) * n;
  const size_t rows = binomial(n, p + 1) * n;
  std::vector<SparseRow> columns(cols);
  for (size_t j = 0; j < cols; ++j) {
    Cochain d = delta(g, Cochain::basis(n, p, j));
    for (size_t i = 0; i < d.size(); ++i)
      if (!d.coeffs()[i].is_zero()) columns[j].push_back({i, d.coeffs()[i]});
  }
  return SparseMatrix::from_columns(columns, rows);
}

ScalarForm delta_scalar(const LieAlgebra& g, const ScalarForm& w) { return exterior_derivative(g, w); }

size_t matrix_rank(const SparseMatrix& m, bool* modular) {
  bool real = true;
  for (const auto& r : m.data)
    for (const auto& e : r)
      if (!e.second.is_real()) real = false;
  if (real && m.rows * m.cols > 200000) {
    VerifiedRank vr = verified_rank(m);
    if (modular) *modular = !vr.primes.empty();
    return vr.rank;
  }
  if (modular) *modular = false;
  return sparse_rank(m);
}

CohomologyReport cohomology_dims(const LieAlgebra& g, size_t p, bool with_bases) {
  const size_t n = g.dim();
  CohomologyReport r;
  r.p = p;
  r.dim_C = binomial(n, p) * n;
  bool mod1 = false, mod2 = false;
  size_t rank_p = 0, rank_prev = 0;
  SparseMatrix dp, dprev;
  if (p + 1 <= n) {
    dp = delta_matrix(g, p);
    rank_p = matrix_rank(dp, &mod1);
  }
  if (p >= 1 && p <= n) {
    dprev = delta_matrix(g, p - 1);
    rank_prev = matrix_rank(dprev, &mod2);
  }
  r.dim_Z = r.dim_C - rank_p;
  r.dim_B = rank_prev;
  r.dim_H = r.dim_Z - r.dim_B;
  r.modular_certified = mod1 || mod2;
  if (with_bases) {
    if (p + 1 <= n) {
      for (auto& v : kernel(dp.dense())) r.Z_basis.emplace_back(n, p, std::move(v));
    } else {
      for (size_t j = 0; j < r.dim_C; ++j) r.Z_basis.push_back(Cochain::basis(n, p, j));
    }
    if (p >= 1 && p <= n) {
      Matrix d = dprev.dense();
      std::vector<Vec> cols;
      for (size_t j = 0; j < d.cols(); ++j) cols.push_back(d.col(j));
      Subspace b = Subspace::span(r.dim_C, cols);
      for (const auto& v : b.basis()) r.B_basis.emplace_back(n, p, v);
    }
  }
  return r;
}

std::vector<Matrix> derivations(const LieAlgebra& g) {
  const size_t n = g.dim();
  std::vector<Matrix> out;
  if (n < 2) {
    for (size_t i = 0; i < n * n; ++i) out.push_back(Cochain::basis(n, 1, i).to_matrix());
    return out;
  }
  auto ker = kernel(delta_matrix(g, 1).dense());
  Subspace s = Subspace::span(n * n, ker);
  for (const auto& v : s.basis()) out.push_back(Cochain(n, 1, v).to_matrix());
  return out;
}

std::vector<Matrix> inner_derivations(const LieAlgebra& g) {
  const size_t n = g.dim();
  std::vector<Vec> vs;
  for (size_t i = 0; i < n; ++i) vs.push_back(Cochain::from_matrix(ad_basis(g, i)).coeffs());
  Subspace s = Subspace::span(n * n, vs);
  std::vector<Matrix> out;
  for (const auto& v : s.basis()) out.push_back(Cochain(n, 1, v).to_matrix());
  return out;
}

size_t orbit_dimension(const LieAlgebra& g) { return g.dim() * g.dim() - derivations(g).size(); }

Cochain circle(const Cochain& phi, const Cochain& psi) {
  if (phi.p() != 2 || psi.p() != 2 || phi.n() != psi.n())
    throw std::invalid_argument("circle product needs two 2-cochains of the same dimension");
  const size_t n = phi.n();
  Cochain out(n, 3);
  if (n < 3) return out;
  const auto& comb = combinations(n, 3);
  for (size_t idx = 0; idx < comb.size(); ++idx) {
    size_t x = comb[idx][0], y = comb[idx][1], z = comb[idx][2];
    Vec v = phi.value_first(psi.value({x, y}), {z});
    v = vec_add(v, phi.value_first(psi.value({y, z}), {x}));
    v = vec_add(v, phi.value_first(psi.value({z, x}), {y}));
    for (size_t k = 0; k < n; ++k) out.coeffs()[idx * n + k] = v[k];
  }
  return out;
}

Cochain circle_general(const Cochain& gq, const Cochain& fp) {
  if (gq.n() != fp.n()) throw std::invalid_argument("circle: dimension mismatch");
  const size_t n = gq.n(), p = fp.p(), q = gq.p();
  if (q == 0) throw std::invalid_argument("circle: the outer cochain needs arity >= 1");
  const size_t m = p + q - 1;
  Cochain out(n, m);
  if (m > n) return out;
  const auto& comb = combinations(n, m);
  const auto& shuffles = combinations(m, p);  // positions taken by f's arguments
  for (size_t idx = 0; idx < comb.size(); ++idx) {
    const Tuple& X = comb[idx];
    Vec acc(n);
    for (const Tuple& pos : shuffles.all()) {
      Tuple inner, rest, perm;
      std::vector<bool> used(m, false);
      for (size_t a : pos) {
        inner.push_back(X[a]);
        used[a] = true;
        perm.push_back(a);
      }
      for (size_t a = 0; a < m; ++a)
        if (!used[a]) {
          rest.push_back(X[a]);
          perm.push_back(a);
        }
      int sign = sort_with_sign(perm);
      Vec v = gq.value_first(fp.value(inner), rest);
      vec_axpy(acc, Scalar(sign), v);
    }
    for (size_t k = 0; k < n; ++k) out.coeffs()[idx * n + k] = acc[k];
  }
  return out;
}

Cochain graded_bracket(const Cochain& f, const Cochain& g) {
  const size_t p = f.p(), q = g.p();
  Cochain a = circle_general(f, g);
  Cochain b = circle_general(g, f);
  bool odd = ((p + 1) * (q + 1)) % 2 == 1;  // parity of (p-1)(q-1)
  return odd ? a + b : a - b;
}

std::optional<Cochain> solve_delta(const LieAlgebra& g, size_t p, const Cochain& c) {
  const size_t n = g.dim();
  if (c.p() != p + 1 || c.n() != n) throw std::invalid_argument("solve_delta: target has wrong shape");
  Matrix d = delta_matrix(g, p).dense();
  auto x = solve(d, c.coeffs());
  if (!x) return std::nullopt;
  return Cochain(n, p, *x);
}

RimResult rim_sq(const LieAlgebra& g, const Cochain& phi) {
  if (phi.p() != 2) throw std::invalid_argument("rim_sq needs a 2-cochain");
  if (!delta(g, phi).is_zero()) throw std::invalid_argument("rim_sq: phi is not a cocycle");
  RimResult r;
  r.representative = circle(phi, phi);
  if (r.representative.is_zero()) {
    r.zero_in_H3 = true;
    r.witness = Cochain(g.dim(), 2);
    return r;
  }
  auto w = solve_delta(g, 2, r.representative);
  r.zero_in_H3 = w.has_value();
  r.witness = w;
  return r;
}

}  // namespace liealg
