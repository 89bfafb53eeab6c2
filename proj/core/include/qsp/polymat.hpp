#pragma once

#include "qsp/laurent.hpp"
#include "qsp/linalg.hpp"
#include "qsp/ratfunc.hpp"

namespace qsp {

/* A matrix over Q(q) kept as an integer Laurent matrix with one shared
 * denominator.  Products then cost only polynomial multiplications; gcd
 * reduction happens in one sweep when asked for.  Equality is exact via
 * cross-multiplication, so reduce() is an optimization, not an obligation.
 */
struct PolyMat {
  Matrix<Laurent> num;
  Laurent den = Laurent(1);

  PolyMat() = default;
  PolyMat(long rows, long cols) : num(rows, cols) {}

  static PolyMat identity(long n) {
    PolyMat p(n, n);
    for (long i = 0; i < n; ++i) p.num.at(i, i) = Laurent(1);
    return p;
  }

  long rows() const { return num.rows(); }
  long cols() const { return num.cols(); }
  bool is_zero() const { return num.is_zero(); }

  friend PolyMat operator*(const PolyMat& a, const PolyMat& b) {
    PolyMat p;
    p.num = a.num * b.num;
    p.den = a.den * b.den;
    return p;
  }

  PolyMat& operator+=(const PolyMat& o) {
    if (den == o.den) {
      num += o.num;
    } else {
      Laurent g = Laurent::gcd(den, o.den);
      Laurent da = o.den.exact_div(g), db = den.exact_div(g);
      Matrix<Laurent> scaled = num;
      for (long i = 0; i < scaled.rows(); ++i)
        for (long j = 0; j < scaled.cols(); ++j) {
          scaled.at(i, j) *= da;
          scaled.at(i, j) += o.num.at(i, j) * db;
        }
      num = std::move(scaled);
      den = den * da;
    }
    reduce();
    return *this;
  }

  void scale(const RatFunc& c) {
    for (long i = 0; i < num.rows(); ++i)
      for (long j = 0; j < num.cols(); ++j) num.at(i, j) *= c.num();
    den *= c.den();
  }

  // strip the gcd of all entries and the denominator; normalize the
  // denominator to lowest exponent zero with a positive leading coefficient
  void reduce() {
    Laurent g = den;
    for (long i = 0; i < num.rows() && g != Laurent(1); ++i)
      for (long j = 0; j < num.cols() && g != Laurent(1); ++j)
        g = Laurent::gcd(g, num.at(i, j));
    if (g != Laurent(1) && !g.is_zero()) {
      den = den.exact_div(g);
      for (long i = 0; i < num.rows(); ++i)
        for (long j = 0; j < num.cols(); ++j)
          num.at(i, j) = num.at(i, j).exact_div(g);
    }
    long s = den.lo();
    if (s != 0) {
      den = den.shifted(-s);
      for (long i = 0; i < num.rows(); ++i)
        for (long j = 0; j < num.cols(); ++j)
          num.at(i, j) = num.at(i, j).shifted(-s);
    }
    if (!den.is_zero() && den.coeff(den.hi()) < 0) {
      den = -den;
      num = -num;
    }
  }

  bool equals(const PolyMat& o) const {
    if (rows() != o.rows() || cols() != o.cols()) return false;
    for (long i = 0; i < rows(); ++i)
      for (long j = 0; j < cols(); ++j)
        if (num.at(i, j) * o.den != o.num.at(i, j) * den) return false;
    return true;
  }

  RatFunc entry(long i, long j) const { return RatFunc(num.at(i, j), den); }

  Matrix<RatFunc> to_rat() const {
    Matrix<RatFunc> m(rows(), cols());
    for (long i = 0; i < rows(); ++i)
      for (long j = 0; j < cols(); ++j) m.at(i, j) = entry(i, j);
    return m;
  }

  static PolyMat from_rat(const Matrix<RatFunc>& m) {
    PolyMat p(m.rows(), m.cols());
    Laurent lcm(1);
    for (long i = 0; i < m.rows(); ++i)
      for (long j = 0; j < m.cols(); ++j) {
        const Laurent& d = m.at(i, j).den();
        lcm = lcm * d.exact_div(Laurent::gcd(lcm, d));
      }
    p.den = lcm;
    for (long i = 0; i < m.rows(); ++i)
      for (long j = 0; j < m.cols(); ++j)
        p.num.at(i, j) = m.at(i, j).num() * lcm.exact_div(m.at(i, j).den());
    p.reduce();
    return p;
  }

  // value at q = 1 (the denominator must not vanish there)
  Matrix<Rat> eval_one() const {
    Int d = den.eval_one();
    if (d == 0) throw std::domain_error("PolyMat::eval_one: pole at q = 1");
    Matrix<Rat> m(rows(), cols());
    for (long i = 0; i < rows(); ++i)
      for (long j = 0; j < cols(); ++j) {
        Rat v(num.at(i, j).eval_one(), d);
        v.canonicalize();
        m.at(i, j) = v;
      }
    return m;
  }
};

}  // namespace qsp
