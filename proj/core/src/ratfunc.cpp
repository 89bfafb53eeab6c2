#include "qsp/ratfunc.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace qsp {

RatFunc::RatFunc(Laurent num, Laurent den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  Laurent g = Laurent::gcd(num_, den_);
  if (g != Laurent(1)) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  // absorb the unit q^lo(den) into the numerator, fix the sign
  long s = den_.lo();
  if (s != 0) {
    den_ = den_.shifted(-s);
    num_ = num_.shifted(-s);
  }
  if (den_.coeff(den_.hi()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc f = *this;
  f.num_ = -f.num_;
  return f;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc::inverse of zero");
  RatFunc f;
  f.num_ = den_;
  f.den_ = num_;
  long s = f.den_.lo();
  if (s != 0) {
    f.den_ = f.den_.shifted(-s);
    f.num_ = f.num_.shifted(-s);
  }
  if (f.den_.coeff(f.den_.hi()) < 0) {
    f.num_ = -f.num_;
    f.den_ = -f.den_;
  }
  return f;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

Rat RatFunc::eval_one() const {
  Int d = den_.eval_one();
  if (d == 0) throw std::domain_error("RatFunc::eval_one: pole at q = 1");
  Rat v(num_.eval_one(), d);
  v.canonicalize();
  return v;
}

Rat RatFunc::eval(const Rat& t) const {
  Rat d = den_.eval(t);
  if (d == 0) throw std::domain_error("RatFunc::eval: pole");
  if (num_.is_zero()) return Rat(0);
  return num_.eval(t) / d;
}

std::string RatFunc::str() const {
  if (is_laurent()) return num_.str();
  std::string ns = num_.str();
  bool wrap_num = ns.find(' ') != std::string::npos;
  std::string ds = den_.str();
  bool wrap_den = ds.find(' ') != std::string::npos;
  std::string out;
  if (wrap_num)
    out = "(" + ns + ")";
  else
    out = ns;
  out += " / ";
  if (wrap_den)
    out += "(" + ds + ")";
  else
    out += ds;
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  return os << f.str();
}

}  // namespace qsp
