#pragma once

#include "liealg/algebra.hpp"
#include "liealg/combinatorics.hpp"

namespace liealg {

// Element of Lambda^p g*; c[idx] = omega(e_I) for the idx-th increasing tuple I.
class ScalarForm {
 public:
  ScalarForm() = default;
  ScalarForm(size_t n, size_t p);
  ScalarForm(size_t n, size_t p, Vec coeffs);
  // omega_{i1} ^ ... ^ omega_{ip} (0-based indices, any order).
  static ScalarForm basis(size_t n, Tuple idx);
  // The 1-form with the given coordinates.
  static ScalarForm one_form(const Vec& a);

  size_t n() const { return n_; }
  size_t p() const { return p_; }
  const Vec& coeffs() const { return c_; }
  Vec& coeffs() { return c_; }
  // Value on basis vectors e_{t0},...,e_{t(p-1)} in any order.
  Scalar value(const Tuple& t) const;
  // Value on arbitrary vectors (multilinear expansion).
  Scalar evaluate(const std::vector<Vec>& args) const;
  bool is_zero() const { return vec_is_zero(c_); }
  // Coefficient on e_1 ^ ... ^ e_n when p = n.
  Scalar top_coefficient() const;

  ScalarForm& operator+=(const ScalarForm& o);
  ScalarForm& operator-=(const ScalarForm& o);
  friend ScalarForm operator+(ScalarForm a, const ScalarForm& b) { return a += b; }
  friend ScalarForm operator-(ScalarForm a, const ScalarForm& b) { return a -= b; }
  friend ScalarForm operator*(const Scalar& s, const ScalarForm& a);
  friend bool operator==(const ScalarForm& a, const ScalarForm& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.c_ == b.c_;
  }

  // Gram matrix of a 2-form: M_ij = omega(e_i, e_j).
  Matrix matrix() const;
  static ScalarForm from_matrix(const Matrix& m);  // antisymmetric input

 private:
  size_t n_ = 0, p_ = 0;
  Vec c_;
};

ScalarForm wedge(const ScalarForm& a, const ScalarForm& b);
ScalarForm wedge_power(const ScalarForm& a, size_t k);

// d omega (X, Y) = omega([X, Y]) on 1-forms, extended as an antiderivation.
ScalarForm exterior_derivative(const LieAlgebra& g, const ScalarForm& w);

// True when d o d vanishes on every basis 1-form.
bool d_squared_vanishes(const LieAlgebra& g);

// Structure constants from Maurer-Cartan equations: dw[k] gives d omega_k.
StructureConstants from_maurer_cartan(const std::vector<ScalarForm>& dw);

}  // namespace liealg
