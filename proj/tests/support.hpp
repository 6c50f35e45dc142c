#pragma once

#include <random>
#include <vector>

#include "liealg/algebra.hpp"
#include "liealg/catalog.hpp"
#include "liealg/cohomology.hpp"

namespace testing_support {

using namespace liealg;

inline Matrix mat(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Scalar(rows[i][j]);
  return m;
}

inline Vec vec(const std::vector<long>& v) {
  Vec out;
  for (long x : v) out.push_back(Scalar(x));
  return out;
}

inline LieAlgebra from_brackets(size_t n, const std::vector<std::tuple<size_t, size_t, size_t, long>>& br,
                                bool checked = true) {
  StructureConstants sc(n);
  for (const auto& [i, j, k, c] : br) sc.add(i, j, k, Scalar(c));
  return checked ? LieAlgebra(sc) : LieAlgebra::unchecked(sc);
}

inline Matrix random_matrix(std::mt19937& rng, size_t r, size_t c, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = Scalar(d(rng));
  return m;
}

inline Matrix random_invertible(std::mt19937& rng, size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (!det(m).is_zero()) return m;
  }
}

inline Cochain random_cochain(std::mt19937& rng, size_t n, size_t p, int density_pct = 40) {
  Cochain c(n, p);
  std::uniform_int_distribution<int> d(-3, 3), keep(0, 99);
  for (auto& x : c.coeffs())
    if (keep(rng) < density_pct) x = Scalar(d(rng));
  return c;
}

// Catalog algebras small enough for exhaustive per-test loops.
inline std::vector<LieAlgebra> small_catalog() {
  std::vector<LieAlgebra> out;
  for (const auto& e : default_catalog())
    if (e.algebra.dim() <= 6) out.push_back(e.algebra);
  return out;
}

// Random conjugate of a catalog nilpotent algebra.
inline LieAlgebra random_nilpotent(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  LieAlgebra base;
  switch (pick(rng)) {
    case 0: base = heisenberg(1); break;
    case 1: base = heisenberg(2); break;
    case 2: base = filiform_model(4); break;
    default: base = filiform_model(5); break;
  }
  return act(base, random_invertible(rng, base.dim()));
}

}  // namespace testing_support
