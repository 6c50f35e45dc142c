#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liealg/scalar.hpp"

namespace liealg {

// Power series in t known modulo t^(order+1).
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(size_t order) : c_(order + 1) {}
  TruncatedSeries(std::vector<Scalar> coeffs, size_t order);
  static TruncatedSeries constant(const Scalar& s, size_t order);
  static TruncatedSeries monomial(const Scalar& s, size_t deg, size_t order);

  size_t order() const { return c_.size() - 1; }
  const Scalar& operator[](size_t i) const { return c_.at(i); }
  Scalar& operator[](size_t i) { return c_.at(i); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  // Index of the first nonzero coefficient; nullopt when all known ones vanish.
  std::optional<size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }
  bool in_maximal_ideal() const { return c_.empty() || c_[0].is_zero(); }

  TruncatedSeries truncate(size_t order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Scalar& s, const TruncatedSeries& a);
  // Known coefficients agree on the common order.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  // Inverse of a unit.
  TruncatedSeries inverse() const;
  // a / b with v(b) <= v(a); the precision drops by v(b).
  static TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string str() const;

 private:
  std::vector<Scalar> c_{Scalar(0)};
};

}  // namespace liealg
