#include "liealg/combinatorics.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace liealg {

size_t binomial(size_t n, size_t k) {
  if (k > n) return 0;
  size_t r = 1;
  for (size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

static uint64_t mask_of(const Tuple& t) {
  uint64_t m = 0;
  for (size_t x : t) m |= (uint64_t(1) << x);
  return m;
}

Combinations::Combinations(size_t n, size_t p) : n_(n), p_(p) {
  if (n > 64) throw std::invalid_argument("tuples limited to 64 basis vectors");
  if (p > n) return;
  Tuple t(p);
  for (size_t i = 0; i < p; ++i) t[i] = i;
  while (true) {
    lookup_.emplace(mask_of(t), list_.size());
    list_.push_back(t);
    if (p == 0) break;
    size_t i = p;
    while (i > 0 && t[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (size_t j = i; j < p; ++j) t[j] = t[j - 1] + 1;
  }
}

size_t Combinations::index(const Tuple& t) const {
  auto it = lookup_.find(mask_of(t));
  if (it == lookup_.end() || t.size() != p_) throw std::out_of_range("tuple not in index");
  return it->second;
}

int sort_with_sign(Tuple& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i) {
    size_t j = i;
    while (j > 0 && t[j - 1] > t[j]) {
      std::swap(t[j - 1], t[j]);
      sign = -sign;
      --j;
    }
    if (j > 0 && t[j - 1] == t[j]) return 0;
  }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] == t[i]) return 0;
  return sign;
}

const Combinations& combinations(size_t n, size_t p) {
  static std::mutex mu;
  static std::map<std::pair<size_t, size_t>, std::unique_ptr<Combinations>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, p}];
  if (!slot) slot = std::make_unique<Combinations>(n, p);
  return *slot;
}

}  // namespace liealg
