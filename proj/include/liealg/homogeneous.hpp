#pragma once

#include <array>
#include <string>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

// h + m = g is required; B is a Gram matrix in the echelon basis of m.
bool reductive_check(const LieAlgebra& g, const Subspace& h, const Subspace& m);
bool symmetric_check(const LieAlgebra& g, const Subspace& h, const Subspace& m);
bool naturally_reductive_check(const LieAlgebra& g, const Subspace& h, const Subspace& m, const Matrix& B);

// Grading by Z_2^rank; component index is the group element as a bit mask,
// so the product of two labels is their xor.
struct Grading {
  size_t rank = 0;
  std::vector<Subspace> components;
  std::vector<std::string> labels;
};

// Throws std::invalid_argument when the components are not complementary.
bool grading_check(const LieAlgebra& g, const Grading& gr);

enum class BlockCoord { Antisymmetric, SymmetricOff, SymmetricDiag };

struct GradedBasisVector {
  Vec v;              // coordinates in the E_ij - E_ji basis of so(4k)
  size_t block;       // position of the block in the first block row
  BlockCoord kind;
  size_t i, j;
};

struct SoGrading {
  size_t k = 0;
  LieAlgebra algebra;
  Grading grading;  // labels e, a, b, c
  std::array<std::vector<GradedBasisVector>, 4> adapted;
  std::array<Matrix, 3> involutions;  // J_a, J_b, J_c
};

SoGrading build_so_grading(size_t k);

struct MetricSpec {
  size_t k = 1;
  std::array<Scalar, 3> lambda1, lambda2;  // for a, b, c
};

struct AdaptedMetric {
  std::array<Matrix, 3> gram;  // on g_a, g_b, g_c in the adapted bases
  Matrix gram_total;           // block diagonal on g_a + g_b + g_c
  std::vector<Vec> m_basis;
};

AdaptedMetric adapted_metric(const SoGrading& gr, const MetricSpec& spec);
bool invariance_check(const SoGrading& gr, const AdaptedMetric& B);

struct GammaEigenvalues {
  Scalar mu1, mu2, mu3;
  size_t m1 = 0, m2 = 0, m3 = 0;
};

// Throws std::invalid_argument on degenerate specs.
std::array<GammaEigenvalues, 3> metric_eigenvalues(const MetricSpec& spec);

struct MetricSignature {
  std::array<Signature, 3> per_gamma;
  Signature total;
  bool congruence_agrees = false;
};

MetricSignature metric_signature(const MetricSpec& spec);

struct MetricClass {
  bool riemannian = false;
  bool lorentzian = false;
  bool naturally_reductive = false;
};

MetricClass classify_metric(const MetricSpec& spec);

size_t so_grading_component_dim(size_t k, size_t gamma);

// Reference tables (names only): compact irreducible symmetric pairs, and
// compact simple non-exceptional Z2 x Z2-symmetric pairs.
struct SymmetricPair {
  std::string label, g, h;
};
const std::vector<SymmetricPair>& cartan_symmetric_pairs();
const std::vector<SymmetricPair>& z2z2_symmetric_pairs();

}  // namespace liealg
