#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liealg/scalar.hpp"

namespace liealg {

// Polynomial in eps; c[i] is the coefficient of eps^i, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& s);
  explicit Poly(std::vector<Scalar> c);
  static Poly monomial(const Scalar& s, size_t deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  size_t valuation() const;  // order at eps = 0; zero polynomial not allowed
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const Scalar& lead() const { return c_.back(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; divisor nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly gcd(Poly a, Poly b);  // monic, or zero
  Poly shift_down(size_t k) const;  // divide by eps^k, exact

  std::string str() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// eps^low * (c0 + c1 eps + ...), normalized so that c0 != 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Scalar& s);
  LaurentPoly(const Scalar& s, int exponent);
  LaurentPoly(int low, std::vector<Scalar> c);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  Scalar coeff(int e) const;
  bool is_monomial() const { return c_.size() == 1; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  std::string str() const;

 private:
  void normalize();
  int low_ = 0;
  std::vector<Scalar> c_;
};

// P/Q in lowest terms with Q monic; both ordinary polynomials in eps.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Scalar(1)) {}
  RationalFunction(const Scalar& s) : num_(s), den_(Scalar(1)) {}
  RationalFunction(const LaurentPoly& p);
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Scalar constant() const { return num_.coeff(0); }

  // Order at eps = 0 (numerator valuation minus denominator valuation).
  std::optional<int> order_at_zero() const;
  // Value at eps = 0 when the order is non-negative.
  std::optional<Scalar> value_at_zero() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  void canonicalize();
  Poly num_, den_;
};

}  // namespace liealg
