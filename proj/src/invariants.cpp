#include "liealg/invariants.hpp"

#include <algorithm>
#include <random>

namespace liealg {

std::vector<size_t> SeriesReport::dims() const {
  std::vector<size_t> d;
  for (const auto& t : terms) d.push_back(t.dim());
  return d;
}

namespace {

template <class Next>
SeriesReport run_series(const LieAlgebra& g, Next next) {
  SeriesReport r;
  Subspace cur = Subspace::whole(g.dim());
  r.terms.push_back(cur);
  if (cur.dim() == 0) {
    r.reaches_zero = true;
    r.zero_index = 0;
    return r;
  }
  while (true) {
    Subspace nx = next(cur);
    if (nx.dim() == cur.dim()) break;  // stabilized
    r.terms.push_back(nx);
    cur = nx;
    if (nx.dim() == 0) {
      r.reaches_zero = true;
      r.zero_index = r.terms.size() - 1;
      break;
    }
  }
  return r;
}

}  // namespace

SeriesReport lower_central_series(const LieAlgebra& g) {
  Subspace all = Subspace::whole(g.dim());
  return run_series(g, [&](const Subspace& c) { return bracket_span(g, c, all); });
}

SeriesReport derived_series(const LieAlgebra& g) {
  return run_series(g, [&](const Subspace& c) { return bracket_span(g, c, c); });
}

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).reaches_zero; }

size_t nilindex(const LieAlgebra& g) {
  auto s = lower_central_series(g);
  if (!s.reaches_zero) throw std::invalid_argument("nilindex of a non-nilpotent algebra");
  return *s.zero_index;
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).reaches_zero; }

bool is_filiform(const LieAlgebra& g) {
  if (g.dim() < 2 || !is_nilpotent(g)) return false;
  return nilindex(g) == g.dim() - 1;
}

bool is_nilpotent_matrix(const Matrix& m) {
  const size_t n = m.rows();
  Matrix p = m;
  for (size_t k = 1; k < n && !p.is_zero(); ++k) p = p * m;
  return p.is_zero();
}

bool engel_check(const LieAlgebra& g) {
  for (size_t a = 0; a < g.dim(); ++a)
    if (!is_nilpotent_matrix(ad_basis(g, a))) return false;
  return true;
}

Subspace center(const LieAlgebra& g) {
  const size_t n = g.dim();
  // rows: component k of [X, e_j] as a linear form in X
  Matrix m(n * n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      Vec v = g.basis_bracket(i, j);
      for (size_t k = 0; k < n; ++k) m(j * n + k, i) = v[k];
    }
  return Subspace::span(n, kernel(m));
}

std::vector<size_t> nilpotent_jordan_type(const Matrix& m) {
  const size_t n = m.rows();
  if (!is_nilpotent_matrix(m)) throw std::invalid_argument("matrix is not nilpotent");
  std::vector<size_t> r{n};
  Matrix p = Matrix::identity(n);
  while (r.back() > 0) {
    p = p * m;
    r.push_back(rank(p));
  }
  r.push_back(0);
  std::vector<size_t> blocks;
  for (size_t s = 1; s + 1 < r.size(); ++s) {
    // blocks of size exactly s: r_{s-1} - 2 r_s + r_{s+1}
    long c = static_cast<long>(r[s - 1]) - 2 * static_cast<long>(r[s]) + static_cast<long>(r[s + 1]);
    for (long t = 0; t < c; ++t) blocks.push_back(s);
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

CharacteristicSequence characteristic_sequence(const LieAlgebra& g) {
  const size_t n = g.dim();
  if (!is_nilpotent(g)) throw std::invalid_argument("characteristic sequence needs a nilpotent algebra");
  CharacteristicSequence best;
  if (n == 0) return best;
  Subspace c1 = bracket_span(g, Subspace::whole(n), Subspace::whole(n));
  std::vector<Vec> cands;
  for (size_t i = 0; i < n; ++i) cands.push_back(unit_vec(n, i));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) cands.push_back(vec_add(unit_vec(n, i), unit_vec(n, j)));
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int t = 0; t < 64; ++t) {
    Vec v(n);
    for (auto& x : v) x = dist(rng);
    cands.push_back(std::move(v));
  }
  bool found = false;
  for (const auto& x : cands) {
    if (c1.contains(x)) continue;
    auto seq = nilpotent_jordan_type(ad_matrix(g, x));
    if (!found || std::lexicographical_compare(best.seq.begin(), best.seq.end(), seq.begin(), seq.end())) {
      best.seq = seq;
      best.witness = x;
      found = true;
    }
  }
  return best;
}

Matrix killing_form(const LieAlgebra& g) {
  const size_t n = g.dim();
  std::vector<Matrix> ads;
  for (size_t a = 0; a < n; ++a) ads.push_back(ad_basis(g, a));
  Matrix k(n, n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      Scalar tr = 0;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          if (!ads[a](i, j).is_zero() && !ads[b](j, i).is_zero()) tr += ads[a](i, j) * ads[b](j, i);
      k(a, b) = tr;
      k(b, a) = tr;
    }
  return k;
}

bool is_semisimple(const LieAlgebra& g) {
  if (g.dim() == 0) return true;
  return !det(killing_form(g)).is_zero();
}

Signature form_signature(const Matrix& k, Field field) {
  if (field != Field::Q) throw std::domain_error("signature is defined over Q only");
  return congruence_signature(k);
}

bool is_derivation(const LieAlgebra& g, const Matrix& f) {
  const size_t n = g.dim();
  if (f.rows() != n || f.cols() != n) throw std::invalid_argument("derivation matrix has wrong size");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec lhs = vec_add(bracket(g, f.col(i), unit_vec(n, j)), bracket(g, unit_vec(n, i), f.col(j)));
      Vec rhs = f * g.basis_bracket(i, j);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

LieAlgebra extend_by_derivation(const LieAlgebra& g, const Matrix& f) {
  if (!is_derivation(g, f)) throw std::invalid_argument("matrix is not a derivation");
  const size_t n = g.dim();
  StructureConstants sc(n + 1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (const auto& [k, v] : g.sc().pair(i, j)) sc.set(i, j, k, v);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) sc.set(i, n, k, f(k, i));
  return LieAlgebra(std::move(sc), g.field());
}

}  // namespace liealg
