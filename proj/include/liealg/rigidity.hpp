#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

enum class Verdict { Rigid, NotRigid, Inconclusive };
std::string verdict_name(Verdict v);

struct RigidityVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<size_t> dim_H2;
  std::optional<size_t> rank_S;
  std::optional<size_t> dim_n_minus_1;
};

// Rigid when H^2(g,g) = 0, Inconclusive otherwise.
RigidityVerdict nr_test(const LieAlgebra& g);

// Distinct rational eigenvalues with a basis of eigenvectors; nullopt when the
// matrix is not diagonalizable over Q.
struct RationalEigen {
  std::vector<Scalar> values;             // one per basis vector
  std::vector<Vec> vectors;
};
std::optional<RationalEigen> rational_eigenbasis(const Matrix& a);
std::vector<Scalar> characteristic_polynomial(const Matrix& a);  // low degree first, monic

struct RegularVector {
  Vec X;
  size_t dim_V0 = 0;
  std::vector<Scalar> eigenvalues;  // of ad X, with multiplicity
};

// Checks the torus/nilradical hypotheses (throws std::invalid_argument on
// failure) and minimizes dim ker ad X over torus basis vectors, pairwise
// sums and small integer combinations.
RegularVector regular_vector(const LieAlgebra& g, const Subspace& torus, const Subspace& nilradical);

struct RootSystem {
  size_t num_x = 0, num_y = 0;               // symbols x_1.., y_1..
  std::vector<std::vector<int>> relations;   // coefficients on (x..., y...)
  std::vector<std::string> text;
  size_t rank = 0;
};

// Eigenbasis {X, Y_1..Y_m, X_1..X_{p-1}} with Y a basis of the nilradical and
// {X, X_i} a basis of V_0(X); relations s_a + s_b = s_c for every nonzero
// structure component between symbol directions. X may be empty when the
// torus is zero.
RootSystem root_system(const LieAlgebra& g, const Vec& X, const Subspace& torus, const Subspace& nilradical);

// NotRigid when rank(S) != dim(n) - 1, Inconclusive otherwise.
RigidityVerdict rank_test(const RootSystem& rs, const Subspace& nilradical);

}  // namespace liealg
