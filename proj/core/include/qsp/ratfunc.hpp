#pragma once

#include "qsp/laurent.hpp"

#include <iosfwd>
#include <string>

namespace qsp {

/* Rational functions in q with exact arithmetic: quotients num/den of
 * Laurent polynomials kept in a canonical reduced form,
 *
 *   - den is an ordinary polynomial (lowest exponent 0) with positive
 *     leading coefficient, never zero;
 *   - gcd(num, den) is a unit (integer contents included).
 *
 * Units q^e are absorbed into the numerator, so equality is plain
 * structural comparison.  These are the scalars for all generic-q linear
 * algebra; every division that must be exact in Z[q,q^-1] can be checked
 * afterwards with is_laurent().
 */
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(c) {}
  RatFunc(const Int& c) : num_(c) {}
  RatFunc(Laurent p) : num_(std::move(p)) {}
  RatFunc(Laurent num, Laurent den);

  static RatFunc q(long e = 1) { return RatFunc(Laurent::q(e)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == Laurent(1) && den_ == Laurent(1); }
  // true iff the denominator is 1, i.e. the value lies in Z[q,q^-1]
  bool is_laurent() const { return den_ == Laurent(1); }

  RatFunc operator-() const;
  RatFunc inverse() const;  // throws std::domain_error on zero

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { a += b; return a; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { a -= b; return a; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { a *= b; return a; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { a /= b; return a; }

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // value at q = 1; throws std::domain_error if the denominator vanishes
  Rat eval_one() const;
  // value at q = t, nonzero rational t away from poles
  Rat eval(const Rat& t) const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f);

 private:
  void reduce();

  Laurent num_ = Laurent(0);
  Laurent den_ = Laurent(1);
};

}  // namespace qsp
