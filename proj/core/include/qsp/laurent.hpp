#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace qsp {

using Int = mpz_class;
using Rat = mpq_class;

/* Laurent polynomials in one variable q with arbitrary-precision integer
 * coefficients, i.e. elements of Z[q, q^-1].
 *
 * Storage is dense over the support: coeff_[k] holds the coefficient of
 * q^(lo_ + k).  The zero polynomial has an empty coefficient vector.  For a
 * nonzero polynomial both the first and the last stored coefficient are
 * nonzero, so lo()/hi() are the exact exponent bounds of the support.
 */
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) { if (c != 0) { lo_ = 0; coeff_.emplace_back(c); } }
  Laurent(const Int& c) { if (c != 0) { lo_ = 0; coeff_.push_back(c); } }

  // c * q^e
  static Laurent term(const Int& c, long e);
  // q^e
  static Laurent q(long e = 1) { return term(1, e); }

  bool is_zero() const { return coeff_.empty(); }
  // exponent range; only meaningful when nonzero
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(coeff_.size()) - 1; }
  // coefficient of q^e (zero outside the support)
  const Int& coeff(long e) const;
  // true iff the polynomial is a constant (possibly zero)
  bool is_constant() const { return coeff_.size() <= (lo_ == 0 ? 1u : 0u); }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
  friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

  bool operator==(const Laurent& o) const {
    return lo_ == o.lo_ && coeff_ == o.coeff_;
  }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // multiply by q^e
  Laurent shifted(long e) const;
  // substitute q -> q^k; k may be negative, k == 0 only for constants
  Laurent stretched(long k) const;
  // the bar involution q -> q^-1
  Laurent mirrored() const { return stretched(-1); }

  // value at q = 1 (sum of coefficients)
  Int eval_one() const;
  // value at q = t for a nonzero rational t
  Rat eval(const Rat& t) const;

  // gcd of all coefficients, nonnegative; 0 for the zero polynomial
  Int content() const;

  // Exact division: returns the quotient and requires that the division
  // leave no remainder; throws std::domain_error otherwise (and on zero
  // divisor).  q^e is a unit, so exponent ranges pose no obstruction.
  Laurent exact_div(const Laurent& d) const;
  // as above, but reports failure instead of throwing
  static bool try_divide(const Laurent& a, const Laurent& d, Laurent& quot);

  // Greatest common divisor up to units, computed by a primitive polynomial
  // remainder sequence.  The result is normalized: lowest exponent 0 and
  // positive leading coefficient; its integer content is the gcd of the
  // contents of the inputs.
  static Laurent gcd(const Laurent& a, const Laurent& b);

  // total order usable for map keys; compares support then coefficients
  int cmp(const Laurent& o) const;
  bool operator<(const Laurent& o) const { return cmp(o) < 0; }

  // "q^4 + q^2 + 2 + q^-2 + q^-4"; highest exponent first
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Laurent& p);

 private:
  void trim();

  long lo_ = 0;
  std::vector<Int> coeff_;
};

}  // namespace qsp
