#include "liealg/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace liealg {

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs, size_t order) : c_(order + 1) {
  for (size_t i = 0; i < coeffs.size() && i <= order; ++i) c_[i] = coeffs[i];
}

TruncatedSeries TruncatedSeries::constant(const Scalar& s, size_t order) {
  TruncatedSeries t(order);
  t.c_[0] = s;
  return t;
}

TruncatedSeries TruncatedSeries::monomial(const Scalar& s, size_t deg, size_t order) {
  TruncatedSeries t(order);
  if (deg <= order) t.c_[deg] = s;
  return t;
}

std::optional<size_t> TruncatedSeries::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncate(size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot raise precision");
  return TruncatedSeries(std::vector<Scalar>(c_.begin(), c_.begin() + order + 1), order);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  size_t n = std::min(order(), o.order());
  c_.resize(n + 1);
  for (size_t i = 0; i <= n; ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  size_t n = std::min(order(), o.order());
  c_.resize(n + 1);
  for (size_t i = 0; i <= n; ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries t = *this;
  for (auto& x : t.c_) x = -x;
  return t;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  // a = t^va * a', b = t^vb * b': the product is known to min(va + N_b, vb + N_a).
  auto va = a.valuation(), vb = b.valuation();
  size_t n;
  if (!va && !vb) n = std::min(a.order(), b.order());
  else if (!va) n = std::min(a.order() + *vb, b.order());
  else if (!vb) n = std::min(b.order() + *va, a.order());
  else n = std::min(*va + b.order(), *vb + a.order());
  n = std::max(n, std::min(a.order(), b.order()));
  TruncatedSeries c(n);
  for (size_t i = 0; i <= a.order(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j <= b.order() && i + j <= n; ++j)
      if (!b.c_[j].is_zero()) c.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return c;
}

TruncatedSeries operator*(const Scalar& s, const TruncatedSeries& a) {
  TruncatedSeries t = a;
  for (auto& x : t.c_) x *= s;
  return t;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  size_t n = std::min(a.order(), b.order());
  for (size_t i = 0; i <= n; ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_[0].is_zero()) throw std::domain_error("series is not a unit");
  TruncatedSeries r(order());
  Scalar inv0 = Scalar(1) / c_[0];
  r.c_[0] = inv0;
  for (size_t k = 1; k <= order(); ++k) {
    Scalar s = 0;
    for (size_t j = 1; j <= k; ++j)
      if (!c_[j].is_zero()) s += c_[j] * r.c_[k - j];
    r.c_[k] = -s * inv0;
  }
  return r;
}

TruncatedSeries TruncatedSeries::divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  auto vb = b.valuation();
  if (!vb) throw std::domain_error("division by a series with unknown valuation");
  size_t v = *vb;
  for (size_t i = 0; i < v && i <= a.order(); ++i)
    if (!a.c_[i].is_zero()) throw std::domain_error("quotient is not a power series");
  if (a.order() < v) throw std::domain_error("dividend known to too low an order");
  size_t prec = std::min(a.order(), b.order()) - v;
  TruncatedSeries as(std::vector<Scalar>(a.c_.begin() + v, a.c_.begin() + v + prec + 1), prec);
  TruncatedSeries bs(std::vector<Scalar>(b.c_.begin() + v, b.c_.begin() + v + prec + 1), prec);
  return as * bs.inverse();
}

std::string TruncatedSeries::str() const {
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].str() + ")";
    if (i > 0) s += "*t^" + std::to_string(i);
  }
  if (s.empty()) s = "0";
  return s + " + O(t^" + std::to_string(order() + 1) + ")";
}

}  // namespace liealg
