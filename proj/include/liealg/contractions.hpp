#pragma once

#include <optional>
#include <vector>

#include "liealg/algebra.hpp"
#include "liealg/forms.hpp"
#include "liealg/laurent.hpp"

namespace liealg {

// n x n matrix with Laurent polynomial entries in eps.
class ParamMatrix {
 public:
  ParamMatrix() = default;
  explicit ParamMatrix(size_t n) : n_(n), a_(n * n) {}
  static ParamMatrix constant(const Matrix& a);
  static ParamMatrix diagonal(const std::vector<int>& exponents);  // eps^{n_i}
  static ParamMatrix affine(const Matrix& a, const Matrix& b);     // a + eps b

  size_t n() const { return n_; }
  LaurentPoly& operator()(size_t i, size_t j) { return a_[i * n_ + j]; }
  const LaurentPoly& operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }
  // Diagonal with monomial entries.
  bool is_monomial_diagonal() const;
  RationalFunction det() const;
  // Entries of the inverse over the field of rational functions.
  std::optional<std::vector<RationalFunction>> inverse() const;

 private:
  size_t n_ = 0;
  std::vector<LaurentPoly> a_;
};

// Structure constants with rational-function entries; index (i<j, k).
class ParamAlgebra {
 public:
  ParamAlgebra() = default;
  explicit ParamAlgebra(size_t n) : n_(n), c_(n * (n - (n > 0 ? 1 : 0)) / 2 * n) {}
  size_t n() const { return n_; }
  RationalFunction get(size_t i, size_t j, size_t k) const;
  void set(size_t i, size_t j, size_t k, RationalFunction v);

 private:
  size_t idx(size_t i, size_t j, size_t k) const;
  size_t n_ = 0;
  std::vector<RationalFunction> c_;
};

// mu_eps(X,Y) = F^{-1} mu(F X, F Y); throws when F is identically singular.
ParamAlgebra param_act(const LieAlgebra& g, const ParamMatrix& F);
// The eps -> 0 limit when every entry is regular at 0.
std::optional<LieAlgebra> limit_at_zero(const ParamAlgebra& pa, const std::string& name = "");

struct InonuWigner {
  LieAlgebra algebra;
  Matrix basis;                // columns: adapted basis in the original coordinates
  std::vector<size_t> h_slots; // positions of the subalgebra's basis vectors
};

// Adapted basis: the echelon basis of h sits at its pivot positions and
// e_k fills the remaining slots.
InonuWigner inonu_wigner(const LieAlgebra& g, const Subspace& h);

std::optional<LieAlgebra> weimar_woods(const LieAlgebra& g, const std::vector<int>& exponents);

struct WeimarWoodsWitness {
  Matrix basis;  // columns: new basis
  std::vector<int> exponents;
};

// Bounded deterministic search for a constant base change followed by
// diagonal exponents in [-bound, bound] that contracts g onto target.
// Base changes tried: the identity, then Krylov bases
// (T, v, [T,v], [T,[T,v]], ...) with coordinates of T and v in {0,1,2}.
std::optional<WeimarWoodsWitness> search_weimar_woods(const LieAlgebra& g, const LieAlgebra& target,
                                                      int bound = 3);

// f_eps = eps Id + (1 - eps) G applied repeatedly until the law is stationary.
// Returns the successive distinct limits; throws std::runtime_error naming
// the step when a limit does not exist.
std::vector<LieAlgebra> saletan(const LieAlgebra& g, const Matrix& G);

struct ContactWitness {
  ScalarForm omega;
  Matrix basis;  // columns X_1 (Reeb), X_2, ..., X_{2p+1}
};

bool check_contact(const LieAlgebra& g, const ScalarForm& omega);
std::optional<ContactWitness> contact_witness(const LieAlgebra& g, const ScalarForm& omega);
// Tries dual basis forms, pairwise sums, then coordinates in [-2, 2].
std::optional<ContactWitness> find_contact_form(const LieAlgebra& g);
// Limit of f(X_1) = eps^2 X_1, f(X_i) = eps X_i written in the basis
// (X_2, ..., X_{2p+1}, X_1), which is the catalog Heisenberg basis.
LieAlgebra contract_contact_to_heisenberg(const LieAlgebra& g, const ContactWitness& w);

bool check_frobenius(const LieAlgebra& g, const ScalarForm& omega);

struct FrobeniusContraction {
  LieAlgebra algebra;
  Matrix basis;  // columns X_1, ..., X_{2p}
};

// Adapted basis with d omega_1 = omega_1^omega_2 + sum omega_{2k+1}^omega_{2k+2},
// then f(X_1) = eps^2 X_1, f(X_2) = X_2, f(X_i) = eps X_i.
FrobeniusContraction frobenius_contract_to_model(const LieAlgebra& g, const ScalarForm& omega);

// d omega_1 = omega_1^omega_2 + sum omega_{2k+1}^omega_{2k+2}, d omega_2 = 0 and
// d omega_j in omega_2 ^ span(omega_3, ..., omega_2p) for j >= 3.
bool has_frobenius_model_shape(const LieAlgebra& g);

}  // namespace liealg
