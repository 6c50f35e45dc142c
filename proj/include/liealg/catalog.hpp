#pragma once

#include <map>
#include <string>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

LieAlgebra abelian(size_t n);
LieAlgebra aff2();
LieAlgebra heisenberg(size_t p);        // dimension 2p+1
LieAlgebra filiform_model(size_t n);    // mu(X1, Xi) = X(i+1)
LieAlgebra sl2();                       // basis (H, E, F)
LieAlgebra so(size_t n);                // E_ij - E_ji, i<j lexicographic
LieAlgebra so3_cyclic();                // [e1,e2]=e3 and cyclic
LieAlgebra poincare();                  // M01..M23, then P0..P3
LieAlgebra rigid11();                   // X, X0, ..., X9
LieAlgebra frobenius_model(size_t p, const std::vector<Scalar>& phi);
LieAlgebra four_dim_solvable();
LieAlgebra filiform4_target();

// Structure constants of the span of the given matrices under the commutator.
LieAlgebra commutator_algebra(const std::vector<Matrix>& basis, Field field = Field::Q,
                              std::string name = "");

// Elementary matrix E_ij (0-based) of size m.
Matrix elementary(size_t m, size_t i, size_t j);

struct CatalogEntry {
  std::string name;
  std::map<std::string, long> params;
  LieAlgebra algebra;
  std::string provenance;
};

std::vector<CatalogEntry> default_catalog();

// Looks up a constructor by name; unknown names or bad parameters throw
// std::invalid_argument.
LieAlgebra catalog_build(const std::string& name, const std::map<std::string, long>& params);
std::vector<std::string> catalog_names();

}  // namespace liealg
