#pragma once

#include <map>
#include <optional>
#include <vector>

#include "liealg/cohomology.hpp"
#include "liealg/series.hpp"

namespace liealg {

// mu_t = mu_0 + sum_{p>=1} t^p phi_p, known modulo t^(order+1).
struct DeformationJet {
  LieAlgebra base;
  std::vector<Cochain> terms;  // terms[p-1] = phi_p
  size_t order = 8;

  // phi_0 = mu_0, phi_p for p <= terms.size(), zero beyond.
  Cochain term(size_t p) const;
};

struct LinearDeformationReport {
  bool is_cocycle = false;
  bool is_square_zero = false;
  bool valid_for_all_t = false;
};

LinearDeformationReport linear_deformation_check(const LieAlgebra& mu0, const Cochain& phi);

// Coefficient of t^k in mu_t o mu_t for k = 0..up_to.
std::map<size_t, Cochain> jacobi_residuals(const DeformationJet& jet, size_t up_to);

// Solves delta psi = -(sum_{a+b=p+1} phi_a o phi_b) for the next term.
// nullopt when the obstruction class is nonzero; throws std::invalid_argument
// when the given prefix is not a Lie law modulo t^(p+1).
std::optional<Cochain> integrate_step(const LieAlgebra& mu0, const std::vector<Cochain>& prefix);

// u = U[0] + t U[1] + ... with U[0] = Id; checks
// u(mu_t(X,Y)) = mu'_t(uX, uY) modulo t^(up_to+1).
bool jet_equivalence_check(const DeformationJet& jet1, const DeformationJet& jet2, const std::vector<Matrix>& u,
                           size_t up_to);

struct FlagDecomposition {
  std::vector<TruncatedSeries> b;
  std::vector<Vec> V;
  size_t dim = 0;        // length of the decomposed vector
  size_t precision = 0;  // truncation order of the input
  // The last residual vanished only because its known coefficients ran out.
  bool precision_exhausted = false;
  // Truncation order that would have let the decomposition finish with margin.
  size_t order_needed = 0;

  size_t length() const { return V.size(); }
  // b1 V1 + b1 b2 V2 + ...; each entry carries the precision it is known to.
  std::vector<TruncatedSeries> reconstruct() const;
  // span(V1..Vi) for i = 1..h
  std::vector<Subspace> flag() const;
};

// Every entry must lie in the maximal ideal. The pivot at each stage is the
// entry of least valuation, the last such index on ties.
FlagDecomposition flag_decompose(const std::vector<TruncatedSeries>& vec);

struct ValuedDecomposition {
  LieAlgebra base;
  std::vector<TruncatedSeries> eps;  // eps_1..eps_k
  std::vector<Cochain> phi;          // phi_1..phi_k
  FlagDecomposition flag;
};

// Throws std::invalid_argument when the jet is not a Lie law to its order.
ValuedDecomposition decompose_deformation(const DeformationJet& jet);

struct FiniteSystemReport {
  size_t k = 0;
  bool delta_phi1_zero = false;
  // relation m (m = 2..k): delta phi_m in span [phi_i, phi_j], i <= j <= m-1
  std::vector<bool> delta_relations;
  std::vector<std::optional<Vec>> a;
  // relation m (m = 1..k-1): [phi_m, phi_k] in span [phi_i, phi_j], i <= j <= k-1
  std::vector<bool> bracket_relations;
  std::vector<std::optional<Vec>> b;
  size_t dim_V = 0;
  size_t bound = 0;  // k(k-1)/2
  bool all_hold() const;
};

FiniteSystemReport finite_system_check(const ValuedDecomposition& d);

}  // namespace liealg
