#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "liealg/linalg.hpp"

namespace liealg {

using SparseRow = std::vector<std::pair<size_t, Scalar>>;  // sorted by column

struct SparseMatrix {
  size_t rows = 0, cols = 0;
  std::vector<SparseRow> data;

  SparseMatrix() = default;
  SparseMatrix(size_t r, size_t c) : rows(r), cols(c), data(r) {}
  static SparseMatrix from_columns(const std::vector<SparseRow>& columns, size_t rows);
  Matrix dense() const;
  size_t nonzeros() const;
};

// Exact rank by incremental sparse elimination over Q or Q(i).
size_t sparse_rank(const SparseMatrix& m);

// Rank modulo a prime below 2^62 (rational entries only).
size_t modular_rank(const SparseMatrix& m, uint64_t p);

struct VerifiedRank {
  size_t rank = 0;
  bool verified = false;  // kernel lifted and checked exactly over Q
  std::vector<uint64_t> primes;
};

// Modular rank certified over Q: the rank mod p is a lower bound, and a
// kernel of the matching size reconstructed from residues and checked
// exactly gives the upper bound. Falls back to exact elimination when the
// certificate cannot be produced.
VerifiedRank verified_rank(const SparseMatrix& m);

}  // namespace liealg
