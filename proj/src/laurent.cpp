#include "liealg/laurent.hpp"

#include <stdexcept>

namespace liealg {

Poly::Poly(const Scalar& s) {
  if (!s.is_zero()) c_.push_back(s);
}

Poly::Poly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }

Poly Poly::monomial(const Scalar& s, size_t deg) {
  std::vector<Scalar> c(deg + 1);
  c[deg] = s;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

size_t Poly::valuation() const {
  if (c_.empty()) throw std::domain_error("valuation of the zero polynomial");
  size_t v = 0;
  while (c_[v].is_zero()) ++v;
  return v;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  r = a;
  std::vector<Scalar> qc;
  if (a.degree() >= b.degree()) qc.resize(a.degree() - b.degree() + 1);
  Scalar inv = Scalar(1) / b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    size_t shift = r.degree() - b.degree();
    Scalar f = r.lead() * inv;
    qc[shift] = f;
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  q = Poly(std::move(qc));
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Scalar inv = Scalar(1) / a.lead();
  for (auto& x : a.c_) x *= inv;
  return a;
}

Poly Poly::shift_down(size_t k) const {
  for (size_t i = 0; i < k && i < c_.size(); ++i)
    if (!c_[i].is_zero()) throw std::domain_error("inexact shift");
  if (k >= c_.size()) return Poly();
  return Poly(std::vector<Scalar>(c_.begin() + k, c_.end()));
}

static std::string term_str(const Scalar& c, int e, bool first) {
  std::string s;
  std::string cs = c.str();
  bool neg = c.is_real() && c.sign() < 0;
  if (!c.is_real()) cs = "(" + cs + ")";
  if (neg) cs = cs.substr(1);
  if (!first) s += neg ? " - " : " + ";
  else if (neg) s += "-";
  if (e == 0) return s + cs;
  if (!(c.is_real() && abs(c.re()) == 1)) s += cs + "*";
  s += "eps";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    s += term_str(c_[i], static_cast<int>(i), first);
    first = false;
  }
  return s;
}

LaurentPoly::LaurentPoly(const Scalar& s) {
  if (!s.is_zero()) c_.push_back(s);
}

LaurentPoly::LaurentPoly(const Scalar& s, int exponent) : low_(exponent) {
  if (!s.is_zero()) c_.push_back(s);
  normalize();
}

LaurentPoly::LaurentPoly(int low, std::vector<Scalar> c) : low_(low), c_(std::move(c)) { normalize(); }

void LaurentPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + k);
    low_ += static_cast<int>(k);
  }
  if (c_.empty()) low_ = 0;
}

Scalar LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < low_ || e > high()) return 0;
  return c_[e - low_];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  std::vector<Scalar> c(hi - lo + 1);
  for (size_t i = 0; i < c_.size(); ++i) c[low_ - lo + i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[o.low_ - lo + i] += o.c_[i];
  low_ = lo;
  c_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (!a.c_[i].is_zero() && !b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
  return LaurentPoly(a.low_ + b.low_, std::move(c));
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    s += term_str(c_[i], low_ + static_cast<int>(i), first);
    first = false;
  }
  return s;
}

RationalFunction::RationalFunction(const LaurentPoly& p) {
  if (p.is_zero()) {
    den_ = Poly(Scalar(1));
    return;
  }
  std::vector<Scalar> c;
  for (int e = p.low(); e <= p.high(); ++e) c.push_back(p.coeff(e));
  if (p.low() >= 0) {
    num_ = Poly::monomial(1, p.low()) * Poly(std::move(c));
    den_ = Poly(Scalar(1));
  } else {
    num_ = Poly(std::move(c));
    den_ = Poly::monomial(1, -p.low());
  }
  canonicalize();
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(Scalar(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  Scalar l = den_.lead();
  if (!l.is_one()) {
    Scalar inv = Scalar(1) / l;
    num_ = Poly(inv) * num_;
    den_ = Poly(inv) * den_;
  }
}

std::optional<int> RationalFunction::order_at_zero() const {
  if (num_.is_zero()) return std::nullopt;
  return static_cast<int>(num_.valuation()) - static_cast<int>(den_.valuation());
}

std::optional<Scalar> RationalFunction::value_at_zero() const {
  if (num_.is_zero()) return Scalar(0);
  int ord = *order_at_zero();
  if (ord < 0) return std::nullopt;
  if (ord > 0) return Scalar(0);
  return num_.coeff(num_.valuation()) / den_.coeff(den_.valuation());
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

std::string RationalFunction::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace liealg
