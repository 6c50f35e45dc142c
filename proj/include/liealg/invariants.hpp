#pragma once

#include <optional>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

struct SeriesReport {
  std::vector<Subspace> terms;       // term 0 is g itself
  bool reaches_zero = false;
  std::optional<size_t> zero_index;  // first p with a zero term
  std::vector<size_t> dims() const;
};

SeriesReport lower_central_series(const LieAlgebra& g);
SeriesReport derived_series(const LieAlgebra& g);

bool is_nilpotent(const LieAlgebra& g);
// Smallest k with C^k(g) = 0; throws for non-nilpotent algebras.
size_t nilindex(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_filiform(const LieAlgebra& g);

bool is_nilpotent_matrix(const Matrix& m);
// Every ad e_a is a nilpotent matrix.
bool engel_check(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);

// Jordan block sizes of a nilpotent matrix, decreasing.
std::vector<size_t> nilpotent_jordan_type(const Matrix& m);

struct CharacteristicSequence {
  std::vector<size_t> seq;
  Vec witness;                     // the X attaining the reported maximum
  bool heuristic_generic = true;   // maximum taken over a finite candidate set
};

CharacteristicSequence characteristic_sequence(const LieAlgebra& g);

Matrix killing_form(const LieAlgebra& g);
bool is_semisimple(const LieAlgebra& g);
Signature form_signature(const Matrix& k, Field field);

bool is_derivation(const LieAlgebra& g, const Matrix& f);
// mu'(X, e_{n+1}) = f(X).
LieAlgebra extend_by_derivation(const LieAlgebra& g, const Matrix& f);

}  // namespace liealg
