#include "liealg/rigidity.hpp"

#include <stdexcept>

#include "liealg/cohomology.hpp"
#include "liealg/invariants.hpp"

namespace liealg {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Rigid: return "Rigid";
    case Verdict::NotRigid: return "NotRigid";
    default: return "Inconclusive";
  }
}

RigidityVerdict nr_test(const LieAlgebra& g) {
  RigidityVerdict v;
  v.dim_H2 = cohomology_dims(g, 2).dim_H;
  v.verdict = *v.dim_H2 == 0 ? Verdict::Rigid : Verdict::Inconclusive;
  return v;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& a) {
  // Faddeev-LeVerrier
  const size_t n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix M(n, n);
  for (size_t k = 1; k <= n; ++k) {
    M = a * M;
    for (size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
    Matrix AM = a * M;
    Scalar tr;
    for (size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<mpz_class> divisors(mpz_class m) {
  if (m < 0) m = -m;
  if (m > mpz_class("1000000000000")) throw std::invalid_argument("eigenvalue search: coefficients too large to certify");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= m; ++d)
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Scalar eval(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar r;
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

std::vector<Scalar> rational_roots(std::vector<Scalar> c) {
  std::vector<Scalar> roots;
  size_t z = 0;
  while (z < c.size() && c[z].is_zero()) ++z;
  if (z > 0) roots.push_back(Scalar(0));
  c.erase(c.begin(), c.begin() + z);
  if (c.size() <= 1) return roots;
  mpz_class l = 1;
  for (const auto& x : c) {
    if (!x.is_real()) throw std::invalid_argument("eigenvalue search needs rational entries");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
  }
  mpz_class a0 = mpq_class(c.front().re() * l).get_num(), an = mpq_class(c.back().re() * l).get_num();
  for (const auto& p : divisors(a0))
    for (const auto& q : divisors(an))
      for (int s : {1, -1}) {
        mpq_class rq(s * p, q);
        rq.canonicalize();
        Scalar r(rq);
        if (eval(c, r).is_zero()) {
          bool seen = false;
          for (const auto& x : roots) seen = seen || x == r;
          if (!seen) roots.push_back(r);
        }
      }
  return roots;
}

}  // namespace

std::optional<RationalEigen> rational_eigenbasis(const Matrix& a) {
  const size_t n = a.rows();
  RationalEigen out;
  for (const auto& r : rational_roots(characteristic_polynomial(a))) {
    Matrix s = a;
    for (size_t i = 0; i < n; ++i) s(i, i) -= r;
    Subspace eig = Subspace::span(n, kernel(s));
    for (const auto& v : eig.basis()) {
      out.values.push_back(r);
      out.vectors.push_back(v);
    }
  }
  if (out.vectors.size() != n) return std::nullopt;
  return out;
}

namespace {

// Matrix of ad X restricted to an ad X-invariant subspace, in its echelon basis.
Matrix restrict_to(const LieAlgebra& g, const Vec& x, const Subspace& s) {
  const size_t d = s.dim();
  std::vector<Vec> cols;
  Matrix basis = Matrix::from_columns(s.basis(), g.dim());
  for (const auto& b : s.basis()) {
    auto c = solve(basis, bracket(g, x, b));
    if (!c) throw std::invalid_argument("subspace is not invariant under ad X");
    cols.push_back(*c);
  }
  return Matrix::from_columns(cols, d);
}

bool subalgebra_nilpotent(const LieAlgebra& g, const Subspace& s) {
  Subspace cur = s;
  for (size_t step = 0; step <= s.dim(); ++step) {
    if (cur.dim() == 0) return true;
    Subspace next = bracket_span(g, cur, s);
    if (next.dim() == cur.dim()) return false;
    cur = next;
  }
  return cur.dim() == 0;
}

void check_hypotheses(const LieAlgebra& g, const Subspace& t, const Subspace& nil) {
  const size_t n = g.dim();
  if (t.ambient() != n || nil.ambient() != n) throw std::invalid_argument("torus/nilradical: dimension mismatch");
  if (subspace_sum(t, nil).dim() != n || t.dim() + nil.dim() != n)
    throw std::invalid_argument("torus and nilradical must be complementary");
  if (bracket_span(g, t, t).dim() != 0) throw std::invalid_argument("torus is not abelian");
  for (const auto& x : t.basis())
    if (!rational_eigenbasis(ad_matrix(g, x))) throw std::invalid_argument("torus element not diagonalizable over Q");
  if (!is_ideal(g, nil)) throw std::invalid_argument("nilradical is not an ideal");
  if (!subalgebra_nilpotent(g, nil)) throw std::invalid_argument("nilradical is not nilpotent");
}

size_t dim_ker_ad(const LieAlgebra& g, const Vec& x) { return g.dim() - rank(ad_matrix(g, x)); }

}  // namespace

RegularVector regular_vector(const LieAlgebra& g, const Subspace& torus, const Subspace& nilradical) {
  check_hypotheses(g, torus, nilradical);
  const size_t n = g.dim(), d = torus.dim();
  if (d == 0) throw std::invalid_argument("regular_vector: the torus is zero");
  const auto& tb = torus.basis();
  std::vector<Vec> cands(tb.begin(), tb.end());
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) cands.push_back(vec_add(tb[i], tb[j]));
  if (d <= 4) {
    std::vector<int> c(d, -2);
    for (;;) {
      Vec x(n);
      for (size_t i = 0; i < d; ++i) vec_axpy(x, Scalar(c[i]), tb[i]);
      if (!vec_is_zero(x)) cands.push_back(x);
      size_t i = d;
      while (i-- > 0 && c[i] == 2) c[i] = -2;
      if (i == static_cast<size_t>(-1)) break;
      ++c[i];
    }
  }
  RegularVector best;
  bool found = false;
  for (const auto& x : cands) {
    size_t k = dim_ker_ad(g, x);
    if (found && k >= best.dim_V0) continue;
    auto e = rational_eigenbasis(ad_matrix(g, x));
    if (!e) continue;
    best.X = x;
    best.dim_V0 = k;
    best.eigenvalues = e->values;
    found = true;
  }
  if (!found) throw std::invalid_argument("regular_vector: no candidate with rational diagonalizable adjoint");
  return best;
}

RootSystem root_system(const LieAlgebra& g, const Vec& X, const Subspace& torus, const Subspace& nilradical) {
  check_hypotheses(g, torus, nilradical);
  const size_t n = g.dim();
  std::vector<Vec> cols;
  std::vector<Vec> xs, ys;
  bool have_x = !X.empty() && !vec_is_zero(X);
  if (have_x) {
    if (!torus.contains(X)) throw std::invalid_argument("root_system: X is not in the torus");
    Subspace v0 = Subspace::span(n, kernel(ad_matrix(g, X)));
    if (!(v0 == torus)) throw std::invalid_argument("root_system: V_0(X) differs from the torus, no adapted eigenbasis");
    auto e = rational_eigenbasis(restrict_to(g, X, nilradical));
    if (!e) throw std::invalid_argument("root_system: ad X is not diagonalizable on the nilradical");
    Matrix nb = Matrix::from_columns(nilradical.basis(), n);
    for (const auto& v : e->vectors) ys.push_back(nb * v);
    // complete X to a basis of the torus
    std::vector<Vec> tcols{X};
    for (const auto& b : torus.basis()) {
      tcols.push_back(b);
      if (Subspace::span(n, tcols).dim() == tcols.size()) xs.push_back(b);
      else tcols.pop_back();
    }
    cols.push_back(X);
  } else {
    if (torus.dim() != 0) throw std::invalid_argument("root_system: a regular vector is required");
    ys = nilradical.basis();
  }
  cols.insert(cols.end(), ys.begin(), ys.end());
  cols.insert(cols.end(), xs.begin(), xs.end());
  LieAlgebra ga = act(g, Matrix::from_columns(cols, n));
  RootSystem rs;
  rs.num_x = xs.size();
  rs.num_y = ys.size();
  const size_t off = have_x ? 1 : 0;
  const size_t nsym = rs.num_x + rs.num_y;
  // slot -> symbol index (x symbols first)
  auto sym = [&](size_t slot) -> long {
    if (have_x && slot == 0) return -1;
    size_t s = slot - off;
    return s < rs.num_y ? static_cast<long>(rs.num_x + s) : static_cast<long>(s - rs.num_y);
  };
  auto name = [&](long s) {
    return static_cast<size_t>(s) < rs.num_x ? "x" + std::to_string(s + 1) : "y" + std::to_string(s - rs.num_x + 1);
  };
  std::vector<Vec> rows;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (const auto& [k, c] : ga.sc().pair(i, j)) {
        long a = sym(i), b = sym(j), d = sym(k);
        if (a < 0 || b < 0 || d < 0) continue;
        std::vector<int> rel(nsym, 0);
        rel[a] += 1;
        rel[b] += 1;
        rel[d] -= 1;
        rs.relations.push_back(rel);
        rs.text.push_back(name(a) + "+" + name(b) + "=" + name(d));
        Vec row(nsym);
        for (size_t s = 0; s < nsym; ++s) row[s] = Scalar(rel[s]);
        rows.push_back(row);
      }
  rs.rank = rows.empty() ? 0 : rank(Matrix::from_rows(rows, nsym));
  return rs;
}

RigidityVerdict rank_test(const RootSystem& rs, const Subspace& nilradical) {
  RigidityVerdict v;
  v.rank_S = rs.rank;
  size_t target = nilradical.dim() == 0 ? 0 : nilradical.dim() - 1;
  v.dim_n_minus_1 = target;
  if (nilradical.dim() == 0) {
    v.verdict = Verdict::Inconclusive;
    return v;
  }
  v.verdict = rs.rank != target ? Verdict::NotRigid : Verdict::Inconclusive;
  return v;
}

}  // namespace liealg
