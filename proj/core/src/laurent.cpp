#include "qsp/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qsp {

void Laurent::trim() {
  std::size_t b = 0, e = coeff_.size();
  while (b < e && coeff_[b] == 0) ++b;
  while (e > b && coeff_[e - 1] == 0) --e;
  if (b == e) {
    coeff_.clear();
    lo_ = 0;
    return;
  }
  if (b > 0 || e < coeff_.size()) {
    std::vector<Int> kept(coeff_.begin() + b, coeff_.begin() + e);
    coeff_.swap(kept);
    lo_ += static_cast<long>(b);
  }
}

Laurent Laurent::term(const Int& c, long e) {
  Laurent p;
  if (c != 0) {
    p.lo_ = e;
    p.coeff_.push_back(c);
  }
  return p;
}

const Int& Laurent::coeff(long e) const {
  static const Int zero{0};
  if (is_zero() || e < lo_ || e > hi()) return zero;
  return coeff_[e - lo_];
}

Laurent Laurent::operator-() const {
  Laurent p = *this;
  for (Int& c : p.coeff_) c = -c;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long nlo = std::min(lo_, o.lo_);
  long nhi = std::max(hi(), o.hi());
  std::vector<Int> out(nhi - nlo + 1);
  for (long e = lo_; e <= hi(); ++e) out[e - nlo] = coeff_[e - lo_];
  for (long e = o.lo_; e <= o.hi(); ++e) out[e - nlo] += o.coeff_[e - o.lo_];
  lo_ = nlo;
  coeff_.swap(out);
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent();
  Laurent p;
  p.lo_ = a.lo_ + b.lo_;
  p.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
    if (a.coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeff_.size(); ++j)
      p.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
  }
  p.trim();
  return p;
}

Laurent Laurent::shifted(long e) const {
  Laurent p = *this;
  if (!p.is_zero()) p.lo_ += e;
  return p;
}

Laurent Laurent::stretched(long k) const {
  if (is_zero()) return Laurent();
  if (k == 0) {
    if (!is_constant())
      throw std::domain_error("Laurent::stretched(0) on a non-constant");
    return *this;
  }
  long nlo = k > 0 ? k * lo_ : k * hi();
  Laurent p;
  p.lo_ = nlo;
  p.coeff_.assign(std::labs(k) * (static_cast<long>(coeff_.size()) - 1) + 1,
                  Int(0));
  for (long e = lo_; e <= hi(); ++e) p.coeff_[k * e - nlo] = coeff_[e - lo_];
  return p;
}

Int Laurent::eval_one() const {
  Int s = 0;
  for (const Int& c : coeff_) s += c;
  return s;
}

Rat Laurent::eval(const Rat& t) const {
  if (is_zero()) return Rat(0);
  if (t == 0) throw std::domain_error("Laurent::eval at 0");
  // Horner over the dense range, then one power of t for the offset.
  Rat acc(0);
  for (std::size_t k = coeff_.size(); k-- > 0;) acc = acc * t + Rat(coeff_[k]);
  long e = lo_;
  Rat p(1), base = e < 0 ? Rat(1) / t : t;
  for (long n = std::labs(e); n > 0; n >>= 1) {
    if (n & 1) p *= base;
    base *= base;
  }
  return acc * p;
}

Int Laurent::content() const {
  Int g = 0;
  for (const Int& c : coeff_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool Laurent::try_divide(const Laurent& a, const Laurent& d, Laurent& quot) {
  if (d.is_zero()) return false;
  if (a.is_zero()) {
    quot = Laurent();
    return true;
  }
  const std::vector<Int>& D = d.coeff_;
  std::vector<Int> A = a.coeff_;
  long degA = static_cast<long>(A.size()) - 1;
  long degD = static_cast<long>(D.size()) - 1;
  if (degA < degD) return false;
  std::vector<Int> Q(degA - degD + 1, Int(0));
  for (long k = degA - degD; k >= 0; --k) {
    Int& lead = A[k + degD];
    if (lead == 0) continue;
    if (lead % D[degD] != 0) return false;
    Int c = lead / D[degD];
    for (long j = 0; j <= degD; ++j) A[k + j] -= c * D[j];
    Q[k] = std::move(c);
  }
  for (const Int& r : A)
    if (r != 0) return false;
  Laurent out;
  out.lo_ = a.lo_ - d.lo_;
  out.coeff_.swap(Q);
  out.trim();
  quot = std::move(out);
  return true;
}

Laurent Laurent::exact_div(const Laurent& d) const {
  Laurent quot;
  if (!try_divide(*this, d, quot))
    throw std::domain_error("Laurent::exact_div: inexact division");
  return quot;
}

namespace {

// pseudo-remainder of dense coefficient vectors (ordinary polynomials)
std::vector<Int> prem(std::vector<Int> A, const std::vector<Int>& B) {
  const Int& lcB = B.back();
  long degB = static_cast<long>(B.size()) - 1;
  auto deg = [](const std::vector<Int>& v) {
    long d = static_cast<long>(v.size()) - 1;
    while (d >= 0 && v[d] == 0) --d;
    return d;
  };
  long degA = deg(A);
  while (degA >= degB) {
    Int lcA = A[degA];
    for (Int& c : A) c *= lcB;
    for (long j = 0; j <= degB; ++j) A[degA - degB + j] -= lcA * B[j];
    degA = deg(A);
  }
  A.resize(degA + 1 > 0 ? degA + 1 : 0);
  return A;
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (Int& c : v) c /= g;
}

}  // namespace

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
  auto normalized = [](const Laurent& p) {
    Laurent out = p.shifted(p.is_zero() ? 0 : -p.lo());
    if (!out.is_zero() && out.coeff_.back() < 0)
      for (Int& c : out.coeff_) c = -c;
    return out;
  };
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);

  Int cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(),
          b.content().get_mpz_t());

  std::vector<Int> A = a.coeff_, B = b.coeff_;
  make_primitive(A);
  make_primitive(B);
  if (A.size() < B.size()) A.swap(B);
  // primitive polynomial remainder sequence
  while (!B.empty()) {
    std::vector<Int> R = prem(A, B);
    make_primitive(R);
    A.swap(B);
    B.swap(R);
  }
  Laurent g;
  g.lo_ = 0;
  g.coeff_ = std::move(A);
  g.trim();
  if (!g.is_zero() && g.coeff_.back() < 0)
    for (Int& c : g.coeff_) c = -c;
  return g * Laurent(cont);
}

int Laurent::cmp(const Laurent& o) const {
  if (coeff_.size() != o.coeff_.size())
    return coeff_.size() < o.coeff_.size() ? -1 : 1;
  if (is_zero()) return 0;
  if (lo_ != o.lo_) return lo_ < o.lo_ ? -1 : 1;
  for (std::size_t k = 0; k < coeff_.size(); ++k) {
    int c = ::cmp(coeff_[k], o.coeff_[k]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = hi(); e >= lo(); --e) {
    const Int& c = coeff(e);
    if (c == 0) continue;
    Int abs = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << abs;
    } else {
      if (abs != 1) os << abs << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) {
  return os << p.str();
}

}  // namespace qsp
