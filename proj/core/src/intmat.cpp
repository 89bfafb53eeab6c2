#include "qsp/intmat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qsp {

RatMat to_rat(const IntMat& a) {
  RatMat m(a.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) m.at(i, j) = Rat(a.at(i, j));
  return m;
}

std::optional<IntMat> to_int(const RatMat& a) {
  IntMat m(a.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      const Rat& v = a.at(i, j);
      if (v.get_den() != 1) return std::nullopt;
      m.at(i, j) = v.get_num();
    }
  return m;
}

Int int_det(const IntMat& a) {
  Rat d = to_rat(a).det();
  return d.get_num();  // denominator is 1 for an integer matrix
}

namespace {

void swap_rows(IntMat& m, long a, long b) {
  for (long j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntMat& m, long a, long b) {
  for (long i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[a] += f * row[b]
void add_row(IntMat& m, long a, long b, const Int& f) {
  for (long j = 0; j < m.cols(); ++j) m.at(a, j) += f * m.at(b, j);
}
void add_col(IntMat& m, long a, long b, const Int& f) {
  for (long i = 0; i < m.rows(); ++i) m.at(i, a) += f * m.at(i, b);
}
void negate_row(IntMat& m, long a) {
  for (long j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

// nearest-integer quotient, so the remainder is minimized in absolute value
Int round_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int babs = b < 0 ? Int(-b) : b;
  if (2 * r > babs) q += 1;
  return q;
}

}  // namespace

Smith smith_form(const IntMat& a) {
  long r = a.rows(), c = a.cols();
  Smith out{IntMat::identity(r), a, IntMat::identity(c)};
  IntMat& S = out.S;
  IntMat& U = out.U;
  IntMat& V = out.V;
  long m = std::min(r, c);

  for (long t = 0; t < m; ++t) {
    for (;;) {
      // minimal nonzero entry of the trailing block -> pivot position
      long pi = -1, pj = -1;
      for (long i = t; i < r; ++i)
        for (long j = t; j < c; ++j) {
          const Int& v = S.at(i, j);
          if (v == 0) continue;
          if (pi < 0 ||
              mpz_cmpabs(v.get_mpz_t(), S.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        pi = pj = -1;
        break;
      }
      if (pi != t) { swap_rows(S, pi, t); swap_rows(U, pi, t); }
      if (pj != t) { swap_cols(S, pj, t); swap_cols(V, pj, t); }

      bool clean = true;
      for (long i = t + 1; i < r; ++i) {
        if (S.at(i, t) == 0) continue;
        Int q = -round_div(S.at(i, t), S.at(t, t));
        add_row(S, i, t, q);
        add_row(U, i, t, q);
        if (S.at(i, t) != 0) clean = false;
      }
      for (long j = t + 1; j < c; ++j) {
        if (S.at(t, j) == 0) continue;
        Int q = -round_div(S.at(t, j), S.at(t, t));
        add_col(S, j, t, q);
        add_col(V, j, t, q);
        if (S.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold any non-multiple into row t and go again
      bool divides = true;
      for (long i = t + 1; i < r && divides; ++i)
        for (long j = t + 1; j < c && divides; ++j)
          if (S.at(i, j) % S.at(t, t) != 0) {
            add_row(S, t, i, Int(1));
            add_row(U, t, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }
    if (S.at(t, t) == 0) break;  // trailing block is zero
    if (S.at(t, t) < 0) {
      negate_row(S, t);
      negate_row(U, t);
    }
  }
  // sign fix for a pivot that ended the loop early
  for (long t = 0; t < m; ++t)
    if (S.at(t, t) < 0) {
      negate_row(S, t);
      negate_row(U, t);
    }
  return out;
}

IntMat unimodular_inverse(const IntMat& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("unimodular_inverse: not square");
  Smith s = smith_form(a);
  if (s.S != IntMat::identity(a.rows()))
    throw std::invalid_argument("unimodular_inverse: determinant is not a unit");
  return s.V * s.U;  // U A V = I  =>  A^-1 = V U
}

}  // namespace qsp
