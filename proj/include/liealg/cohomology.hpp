#pragma once

#include <optional>
#include <vector>

#include "liealg/algebra.hpp"
#include "liealg/combinatorics.hpp"
#include "liealg/forms.hpp"
#include "liealg/sparse.hpp"

namespace liealg {

// Alternating p-linear map g^p -> g; c[idx * n + k] is the e_k component of
// the value on the idx-th increasing tuple.
class Cochain {
 public:
  Cochain() = default;
  Cochain(size_t n, size_t p);
  Cochain(size_t n, size_t p, Vec coeffs);
  static Cochain from_algebra(const LieAlgebra& g);      // mu as a 2-cochain
  static Cochain from_matrix(const Matrix& f);           // p = 1
  static Cochain from_vector(const Vec& x);              // p = 0
  static Cochain basis(size_t n, size_t p, size_t flat);  // single unit coefficient

  size_t n() const { return n_; }
  size_t p() const { return p_; }
  size_t size() const { return c_.size(); }
  const Vec& coeffs() const { return c_; }
  Vec& coeffs() { return c_; }

  const Scalar& at(const Tuple& increasing, size_t k) const;
  void set(Tuple t, size_t k, const Scalar& v);  // any order; sign applied
  // Value on basis vectors in any order.
  Vec value(const Tuple& t) const;
  // Value with a general first argument and basis vectors for the rest.
  Vec value_first(const Vec& x, const Tuple& rest) const;
  bool is_zero() const { return vec_is_zero(c_); }
  Matrix to_matrix() const;  // p = 1

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& s, const Cochain& a);
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.c_ == b.c_;
  }

  // Structure constants of a 2-cochain read as a bracket (no Jacobi check).
  StructureConstants to_structure_constants() const;

 private:
  size_t n_ = 0, p_ = 0;
  Vec c_;
};

// Chevalley coboundary. delta_0 X = ad X, delta_1 f(X,Y) = [fX,Y] + [X,fY] - f[X,Y]
// and delta_2 phi = mu o phi + phi o mu.
Cochain delta(const LieAlgebra& g, const Cochain& phi);
SparseMatrix delta_matrix(const LieAlgebra& g, size_t p);

// Trivial coefficients; identical to exterior_derivative.
ScalarForm delta_scalar(const LieAlgebra& g, const ScalarForm& w);

struct CohomologyReport {
  size_t p = 0;
  size_t dim_C = 0, dim_Z = 0, dim_B = 0, dim_H = 0;
  bool modular_certified = false;  // ranks obtained by certified modular elimination
  std::vector<Cochain> Z_basis, B_basis;  // filled when requested
};

CohomologyReport cohomology_dims(const LieAlgebra& g, size_t p, bool with_bases = false);

size_t matrix_rank(const SparseMatrix& m, bool* modular = nullptr);

std::vector<Matrix> derivations(const LieAlgebra& g);
std::vector<Matrix> inner_derivations(const LieAlgebra& g);
size_t orbit_dimension(const LieAlgebra& g);

// (phi o psi)(X,Y,Z) = phi(psi(X,Y),Z) + phi(psi(Y,Z),X) + phi(psi(Z,X),Y).
Cochain circle(const Cochain& phi, const Cochain& psi);
// (g o f)(X_1..X_{p+q-1}) = sum over (p,q-1)-shuffles of
// sign * g(f(X_s1..X_sp), X_s(p+1)..).
Cochain circle_general(const Cochain& gq, const Cochain& fp);
// [f,g] = f o g - (-1)^{(p-1)(q-1)} g o f.
Cochain graded_bracket(const Cochain& f, const Cochain& g);

struct RimResult {
  bool zero_in_H3 = false;
  Cochain representative;         // phi o phi
  std::optional<Cochain> witness;  // psi with delta psi = phi o phi
};

RimResult rim_sq(const LieAlgebra& g, const Cochain& phi);

// Particular solution of delta_p psi = c with every free coordinate zero.
std::optional<Cochain> solve_delta(const LieAlgebra& g, size_t p, const Cochain& c);

}  // namespace liealg
