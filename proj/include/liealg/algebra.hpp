#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liealg/linalg.hpp"

namespace liealg {

using SparseVec = std::vector<std::pair<size_t, Scalar>>;

// C_ij^k for i<j, 0-based; reading (j,i,k) gives the negation.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(size_t n);
  // Full n*n*n table t[i][j][k]; rejects tables that are not antisymmetric.
  static StructureConstants from_full_table(const std::vector<std::vector<Vec>>& t);

  size_t n() const { return n_; }
  Scalar get(size_t i, size_t j, size_t k) const;
  void set(size_t i, size_t j, size_t k, const Scalar& v);
  void add(size_t i, size_t j, size_t k, const Scalar& v);
  // Nonzero components of mu(e_i, e_j) for i < j, sorted by k.
  const SparseVec& pair(size_t i, size_t j) const { return pairs_[pair_index(i, j)]; }
  bool is_real() const;
  bool is_zero() const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.n_ == b.n_ && a.pairs_ == b.pairs_;
  }

 private:
  size_t pair_index(size_t i, size_t j) const;
  void check(size_t i, size_t j, size_t k) const;
  size_t n_ = 0;
  std::vector<SparseVec> pairs_;
};

struct JacobiResidual {
  size_t i, j, k, s;  // 0-based, i<j<k
  Scalar value;
};

struct ValidationReport {
  bool ok = true;
  std::vector<JacobiResidual> residuals;
};

ValidationReport validate_jacobi(const StructureConstants& sc);

class JacobiError : public std::runtime_error {
 public:
  explicit JacobiError(ValidationReport r)
      : std::runtime_error("structure constants violate the Jacobi identity"), report(std::move(r)) {}
  ValidationReport report;
};

enum class JacobiStatus { Verified, Unchecked };

class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Verifies the Jacobi identity and throws JacobiError on violation.
  LieAlgebra(StructureConstants sc, Field field = Field::Q, std::string name = "");
  static LieAlgebra unchecked(StructureConstants sc, Field field = Field::Q, std::string name = "");

  size_t dim() const { return sc_.n(); }
  const StructureConstants& sc() const { return sc_; }
  Field field() const { return field_; }
  const std::string& name() const { return name_; }
  JacobiStatus status() const { return status_; }
  LieAlgebra renamed(std::string name) const;

  Vec basis_bracket(size_t i, size_t j) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.sc_ == b.sc_ && a.field_ == b.field_;
  }

 private:
  StructureConstants sc_;
  Field field_ = Field::Q;
  std::string name_;
  JacobiStatus status_ = JacobiStatus::Unchecked;
};

// Subspace of K^n stored by its reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(size_t n, const std::vector<Vec>& vectors);
  static Subspace whole(size_t n);
  static Subspace zero(size_t n);
  static Subspace coordinate(size_t n, const std::vector<size_t>& indices);

  size_t ambient() const { return n_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  // v minus its echelon reduction by the basis; zero iff v is in the subspace.
  Vec reduce(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  size_t n_ = 0;
  std::vector<Vec> basis_;
  std::vector<size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y);
// Column j is mu(X, e_j).
Matrix ad_matrix(const LieAlgebra& g, const Vec& x);
Matrix ad_basis(const LieAlgebra& g, size_t i);

LieAlgebra act(const LieAlgebra& g, const Matrix& f);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal);
// Coordinates of the class of v in the quotient basis used by `quotient`.
Vec quotient_projection(const Subspace& ideal, const Vec& v);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
// Span of [a, b] for a in A, b in B.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

Vec bch_truncated(const LieAlgebra& g, const Vec& x, const Vec& y, int order);

}  // namespace liealg
