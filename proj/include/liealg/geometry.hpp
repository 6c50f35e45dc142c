#pragma once

#include <optional>
#include <vector>

#include "liealg/algebra.hpp"
#include "liealg/forms.hpp"

namespace liealg {

// Bilinear product; c[(i*n + j)*n + k] is the e_k component of e_i * e_j.
class PreLieProduct {
 public:
  PreLieProduct() = default;
  explicit PreLieProduct(size_t n) : n_(n), c_(n * n * n) {}
  size_t n() const { return n_; }
  const Scalar& at(size_t i, size_t j, size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  void set(size_t i, size_t j, size_t k, const Scalar& v) { c_[(i * n_ + j) * n_ + k] = v; }
  Vec product(const Vec& x, const Vec& y) const;
  Vec basis_product(size_t i, size_t j) const;
  bool is_zero() const { return vec_is_zero(c_); }
  friend bool operator==(const PreLieProduct& a, const PreLieProduct& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  size_t n_ = 0;
  Vec c_;
};

bool symplectic_check(const LieAlgebra& g, const ScalarForm& omega);
// alpha with d alpha = omega, when omega is exact.
std::optional<ScalarForm> exact_primitive(const LieAlgebra& g, const ScalarForm& omega);
// Decides whether some 1-form alpha has (d alpha)^p != 0 by evaluating the
// degree-p polynomial alpha -> top coefficient on the grid {0..p}^n.
std::optional<ScalarForm> find_frobenius_form(const LieAlgebra& g);

struct PreLieReport {
  bool left_symmetric = false;
  bool commutator_is_bracket = false;
  bool ok() const { return left_symmetric && commutator_is_bracket; }
};

PreLieReport preLie_check(const LieAlgebra& g, const PreLieProduct& p);
bool left_symmetric(const PreLieProduct& p);

// omega(X*Y, Z) = -omega(Y, [X, Z])
PreLieProduct preLie_from_symplectic(const LieAlgebra& g, const ScalarForm& omega);
// f^{-1}(mu(f X, Y)); with derived_variant, f only needs to be invertible on [g, g].
PreLieProduct preLie_from_derivation(const LieAlgebra& g, const Matrix& f, bool derived_variant = false);

// mu(RX, RY) = R(mu(RX, Y) + mu(X, RY))
bool yang_baxter_check(const LieAlgebra& g, const Matrix& R);
// mu(RX, RY) + mu(X, Y) = R(mu(RX, Y) + mu(X, RY))
bool rota_baxter_check(const LieAlgebra& g, const Matrix& R);

enum class OperatorKind { YangBaxter, RotaBaxter };

struct OperatorPreLie {
  OperatorKind kind;
  PreLieProduct product;            // mu(RX, Y)
  StructureConstants mu_prime;      // product(X,Y) - product(Y,X)
  bool left_symmetric = false;
  bool mu_prime_jacobi = false;
  bool mu_prime_equals_mu = false;
};

// Throws std::invalid_argument when R satisfies neither identity, or not the requested one.
OperatorPreLie preLie_from_operator(const LieAlgebra& g, const Matrix& R, std::optional<OperatorKind> kind = std::nullopt);

// J^2 = -Id and mu(JX, JY) = mu(X, Y) + J(mu(JX, Y) + mu(X, JY)).
bool complex_structure_check(const LieAlgebra& g, const Matrix& J);

struct ComplexSearch {
  size_t candidates = 0;
  std::optional<Matrix> found;
  bool bounded_search = true;  // evidence only, not a proof of nonexistence
};

// Candidates P J0 P^{-1} with P drawn from a seeded generator, entries in [-2, 2].
ComplexSearch search_complex_structure(const LieAlgebra& g, size_t count = 500, unsigned seed = 20240611);

struct GeneralizedReport {
  bool isometry = false;
  bool square = false;
  bool L_isotropic_maximal = false;
  bool L_involutive = false;
  int type = -1;
  bool all() const { return isometry && square && L_isotropic_maximal && L_involutive; }
};

// J acts on g + g*, g coordinates first. Throws when J^2 != -Id.
GeneralizedReport generalized_complex_check(const LieAlgebra& g, const Matrix& J);
Matrix generalized_from_complex(const Matrix& j);      // X + a -> -jX + j*a
Matrix generalized_from_symplectic(const ScalarForm& omega);  // X + a -> i(X)omega - omega^{-1} a
// [X + a, Y + b] = [X, Y] + ad*_X b - ad*_Y a with (ad*_X b)(Z) = -b([X, Z])
Vec coadjoint_bracket(const LieAlgebra& g, const Vec& u, const Vec& v);

struct DoubleExtension {
  LieAlgebra algebra;   // basis (g, e, d)
  ScalarForm omega;
  Vec Z;
};

// Returns nullopt when Omega is not a coboundary.
std::optional<DoubleExtension> double_extension(const LieAlgebra& g, const ScalarForm& omega, const Matrix& D);

}  // namespace liealg
