#include "liealg/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace liealg {

std::string field_name(Field f) { return f == Field::Q ? "Q" : "Q(i)"; }

Field parse_field(const std::string& s) {
  if (s == "Q") return Field::Q;
  if (s == "Q(i)") return Field::QI;
  throw std::invalid_argument("unknown field tag: " + s);
}

Scalar::Scalar(const mpq_class& re) : re_(re) { re_.canonicalize(); }

Scalar::Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

int Scalar::sign() const {
  if (!is_real()) throw std::domain_error("sign of a non-real scalar");
  return sgn(re_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.re_ != b.re_) return a.re_ < b.re_;
  return a.im_ < b.im_;
}

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) < 0) {
    out += "-";
    mpq_class a = -im_;
    out += a.get_str();
  } else {
    if (!out.empty()) out += "+";
    out += im_.get_str();
  }
  out += " i";
  return out;
}

static mpq_class parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "+") return mpq_class(1);
  if (s == "-") return mpq_class(-1);
  if (s[0] == '+') s = s.substr(1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + raw);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + raw);
  q.canonicalize();
  return q;
}

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  s.pop_back();
  // split at the last sign that is not the first character
  size_t cut = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      cut = k;
      break;
    }
  }
  if (cut == std::string::npos) return Scalar(mpq_class(0), parse_rational(s));
  return Scalar(parse_rational(s.substr(0, cut)), parse_rational(s.substr(cut)));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace liealg
