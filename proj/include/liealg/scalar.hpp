#pragma once

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <string>

namespace liealg {

enum class Field { Q, QI };

std::string field_name(Field f);
Field parse_field(const std::string& s);

// Element of Q or Q(i); both parts are kept canonical.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T v) : re_(static_cast<long>(v)) {}
  Scalar(const mpq_class& re);
  Scalar(const mpq_class& re, const mpq_class& im);
  Scalar(long num, long den);

  static Scalar imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar parse(const std::string& s);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }
  int sign() const;  // real values only

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Total order for real values; Gaussian values compare lexicographically.
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace liealg
