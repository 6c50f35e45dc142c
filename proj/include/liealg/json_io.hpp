#pragma once

#include <stdexcept>
#include <string>

#include "liealg/algebra.hpp"
#include "liealg/cohomology.hpp"
#include "liealg/deformations.hpp"
#include "liealg/forms.hpp"
#include "json.hpp"

namespace liealg {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well formed but its coefficients do not belong to the declared field.
class FieldMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path);

json scalar_to_json(const Scalar& s);
Scalar parse_scalar(const json& j);
json vec_to_json(const Vec& v);
Vec parse_vec(const json& j, size_t n);
json matrix_to_json(const Matrix& m);
Matrix parse_matrix(const json& j, size_t rows, size_t cols);

struct ParsedAlgebra {
  StructureConstants sc;
  Field field = Field::Q;
  std::string name;
};

// Schema only; the Jacobi identity is not checked.
ParsedAlgebra parse_structure(const json& j);
// Schema and Jacobi identity; throws ParseError or JacobiError.
LieAlgebra parse_algebra(const json& j);
json algebra_to_json(const LieAlgebra& g);
json structure_to_json(const StructureConstants& sc, Field field, const std::string& name);

json cochain_to_json(const Cochain& c);
Cochain parse_cochain(const json& j, size_t n);
json form_to_json(const ScalarForm& w);
ScalarForm parse_form(const json& j, size_t n);

json series_to_json(const TruncatedSeries& s);
TruncatedSeries parse_series(const json& j, size_t order);
DeformationJet parse_jet(const json& j);

json subspace_to_json(const Subspace& s);
json residuals_to_json(const ValidationReport& r);

}  // namespace liealg
