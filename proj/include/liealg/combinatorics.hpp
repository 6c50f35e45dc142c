#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace liealg {

using Tuple = std::vector<size_t>;

size_t binomial(size_t n, size_t k);

// Strictly increasing p-tuples of {0..n-1} in lexicographic order.
class Combinations {
 public:
  Combinations(size_t n, size_t p);
  size_t n() const { return n_; }
  size_t p() const { return p_; }
  size_t size() const { return list_.size(); }
  const Tuple& operator[](size_t i) const { return list_[i]; }
  const std::vector<Tuple>& all() const { return list_; }
  // Index of an increasing tuple.
  size_t index(const Tuple& t) const;

 private:
  size_t n_, p_;
  std::vector<Tuple> list_;
  std::unordered_map<uint64_t, size_t> lookup_;
};

// Sorts a tuple of distinct indices; returns the permutation sign, or 0 when
// an index repeats.
int sort_with_sign(Tuple& t);

// Shared instance cache (thread-safe).
const Combinations& combinations(size_t n, size_t p);

}  // namespace liealg
