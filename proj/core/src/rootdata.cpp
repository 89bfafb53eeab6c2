#include "qsp/rootdata.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace qsp {

Cartan Cartan::from_form(IntMat form) {
  long n = form.rows();
  if (n == 0 || form.cols() != n)
    throw std::invalid_argument("Cartan: form must be square and nonempty");
  for (long i = 0; i < n; ++i) {
    const Int& d = form.at(i, i);
    if (d != 2 && d != 4 && d != 6)
      throw std::invalid_argument("Cartan: (i.i) must be one of 2, 4, 6");
    for (long j = 0; j < n; ++j) {
      if (form.at(i, j) != form.at(j, i))
        throw std::invalid_argument("Cartan: form must be symmetric");
      if (i != j) {
        const Int& v = form.at(i, j);
        if (v > 0) throw std::invalid_argument("Cartan: (i.j) must be <= 0 off the diagonal");
        Int twice = 2 * v;
        if (twice % d != 0)
          throw std::invalid_argument("Cartan: 2(i.j)/(i.i) must be an integer");
        Int cij = twice / d;
        if (cij < -3)
          throw std::invalid_argument("Cartan: Cartan integer below -3");
      }
    }
  }
  // positive definiteness via leading principal minors
  for (long k = 1; k <= n; ++k) {
    IntMat lead(k, k);
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < k; ++j) lead.at(i, j) = form.at(i, j);
    if (int_det(lead) <= 0)
      throw std::invalid_argument("Cartan: form is not positive definite");
  }
  return Cartan(std::move(form));
}

long Cartan::c(long i, long j) const {
  Int v = 2 * form_.at(i, j) / form_.at(i, i);
  return v.get_si();
}

IntMat Cartan::cartan_matrix() const {
  long n = rank();
  IntMat m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m.at(i, j) = c(i, j);
  return m;
}

Cartan Cartan::restricted(const std::vector<long>& nodes) const {
  long k = static_cast<long>(nodes.size());
  IntMat f(k, k);
  for (long a = 0; a < k; ++a)
    for (long b = 0; b < k; ++b) f.at(a, b) = form_.at(nodes[a], nodes[b]);
  return from_form(std::move(f));
}

Int RootDatum::pair(const std::vector<Int>& mu,
                    const std::vector<Int>& lambda) const {
  long d = rank_lattice();
  if (static_cast<long>(mu.size()) != d ||
      static_cast<long>(lambda.size()) != d)
    throw std::invalid_argument("RootDatum::pair: dimension mismatch");
  Int s = 0;
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) s += mu[i] * pairing.at(i, j) * lambda[j];
  return s;
}

Int RootDatum::pair_coroot(long i, const std::vector<Int>& lambda) const {
  return pair(coroot(i), lambda);
}

IntMat RootDatum::reflection_X(long i) const {
  long d = rank_lattice();
  // row vector alpha_i^vee^T P
  std::vector<Int> row(d, Int(0));
  for (long j = 0; j < d; ++j)
    for (long k = 0; k < d; ++k) row[j] += coroots.at(k, i) * pairing.at(k, j);
  IntMat s = IntMat::identity(d);
  for (long r = 0; r < d; ++r)
    for (long j = 0; j < d; ++j) s.at(r, j) -= roots.at(r, i) * row[j];
  return s;
}

IntMat RootDatum::reflection_Y(long i) const {
  long d = rank_lattice();
  // row vector alpha_i^T P^T
  std::vector<Int> row(d, Int(0));
  for (long j = 0; j < d; ++j)
    for (long k = 0; k < d; ++k) row[j] += roots.at(k, i) * pairing.at(j, k);
  IntMat s = IntMat::identity(d);
  for (long r = 0; r < d; ++r)
    for (long j = 0; j < d; ++j) s.at(r, j) -= coroots.at(r, i) * row[j];
  return s;
}

void RootDatum::validate() const {
  long n = rank_nodes(), d = rank_lattice();
  if (pairing.cols() != d)
    throw std::invalid_argument("root datum: pairing must be square");
  if (roots.rows() != d || coroots.rows() != d || roots.cols() != n ||
      coroots.cols() != n)
    throw std::invalid_argument("root datum: (co)root shape mismatch");
  Int det = int_det(pairing);
  if (det != 1 && det != -1)
    throw std::invalid_argument("root datum: pairing is not unimodular");
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (pair(coroot(i), root(j)) != cartan.c(i, j))
        throw std::invalid_argument(
            "root datum: <coroot " + std::to_string(i) + ", root " +
            std::to_string(j) + "> does not match the Cartan matrix");
}

RootDatum RootDatum::simply_connected(const Cartan& c) {
  long n = c.rank();
  RootDatum rd{c, IntMat::identity(n), c.cartan_matrix(), IntMat::identity(n)};
  rd.validate();
  return rd;
}

RootDatum RootDatum::adjoint(const Cartan& c) {
  long n = c.rank();
  RootDatum rd{c, IntMat::identity(n), IntMat::identity(n),
               c.cartan_matrix().transpose()};
  rd.validate();
  return rd;
}

RootDatum RootDatum::transported(const IntMat& tx, const IntMat& ty) const {
  // <ty mu, tx lambda>_new = <mu, lambda>_old  =>  P' = ty^-T P tx^-1
  IntMat txi = unimodular_inverse(tx);
  IntMat tyi = unimodular_inverse(ty);
  RootDatum rd{cartan, tyi.transpose() * pairing * txi, tx * roots,
               ty * coroots};
  return rd;
}

namespace {

std::vector<std::vector<long>> positive_closure(const IntMat& cmat,
                                                bool transpose) {
  long n = cmat.rows();
  std::set<std::vector<long>> all;
  std::vector<std::vector<long>> queue;
  for (long j = 0; j < n; ++j) {
    std::vector<long> e(n, 0);
    e[j] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<long> v = queue.back();
    queue.pop_back();
    for (long j = 0; j < n; ++j) {
      long s = 0;
      for (long k = 0; k < n; ++k)
        s += (transpose ? cmat.at(k, j) : cmat.at(j, k)).get_si() * v[k];
      std::vector<long> w = v;
      w[j] -= s;
      if (all.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<std::vector<long>> pos;
  for (const auto& v : all) {
    bool nonneg = true;
    for (long x : v)
      if (x < 0) nonneg = false;
    if (nonneg) pos.push_back(v);
  }
  return pos;
}

}  // namespace

std::vector<std::vector<long>> positive_roots(const Cartan& c) {
  return positive_closure(c.cartan_matrix(), false);
}

std::vector<std::vector<long>> positive_coroots(const Cartan& c) {
  return positive_closure(c.cartan_matrix(), true);
}

std::vector<Int> coroot_sum(const RootDatum& rd,
                            const std::vector<long>& nodes) {
  std::vector<Int> out(rd.rank_lattice(), Int(0));
  if (nodes.empty()) return out;
  Cartan sub = rd.cartan.restricted(nodes);
  for (const auto& u : positive_coroots(sub))
    for (std::size_t a = 0; a < nodes.size(); ++a)
      if (u[a] != 0)
        for (long r = 0; r < rd.rank_lattice(); ++r)
          out[r] += Int(u[a]) * rd.coroots.at(r, nodes[a]);
  return out;
}

}  // namespace qsp
