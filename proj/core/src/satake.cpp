#include "qsp/satake.hpp"

#include <stdexcept>
#include <string>

namespace qsp {

namespace {

void fail(const std::string& msg) { throw std::invalid_argument("satake: " + msg); }

}  // namespace

Satake Satake::build(SatakeDiagram d, SatakeOptions opts) {
  const RootDatum& rd = d.rd;
  rd.validate();
  long n = rd.rank_nodes(), dim = rd.rank_lattice();
  if (static_cast<long>(d.black.size()) != n) fail("black set has wrong size");
  if (static_cast<long>(d.tau.size()) != n) fail("tau has wrong size");

  for (long i = 0; i < n; ++i) {
    long t = d.tau[i];
    if (t < 0 || t >= n) fail("tau is not a permutation of the nodes");
    if (d.tau[t] != i) fail("tau is not an involution");
    if (d.black[i] != d.black[t]) fail("tau must preserve the black set");
    for (long j = 0; j < n; ++j)
      if (rd.cartan.form().at(i, j) != rd.cartan.form().at(d.tau[i], d.tau[j]))
        fail("tau does not preserve the Cartan form");
  }

  // longest element of the black parabolic
  std::vector<long> bl;
  for (long i = 0; i < n; ++i)
    if (d.black[i]) bl.push_back(i);
  std::vector<long> w_black;
  if (!bl.empty()) {
    Weyl wbg = Weyl::enumerate(rd, bl);
    w_black = wbg.words[wbg.longest_index];
  }
  IntMat wb = word_matrix(rd, w_black);

  // black condition: w_black(alpha_i) = -alpha_{tau i} for black i
  for (long i = 0; i < n; ++i) {
    if (!d.black[i]) continue;
    std::vector<Int> img = wb * rd.root(i);
    std::vector<Int> want = rd.root(d.tau[i]);
    for (Int& v : want) v = -v;
    if (img != want)
      fail("w_black does not send black root " + std::to_string(i) +
           " to minus its tau-image");
  }

  // theta = -w_black o tau on X, solved from its values on the simple roots
  RatMat A(dim, n), B(dim, n);
  for (long j = 0; j < n; ++j) {
    std::vector<Int> aj = rd.root(j);
    std::vector<Int> bj = wb * rd.root(d.tau[j]);
    for (long r = 0; r < dim; ++r) {
      A.at(r, j) = Rat(aj[r]);
      B.at(r, j) = Rat(-bj[r]);
    }
  }
  auto thetaT = RatMat::solve(A.transpose(), B.transpose());
  if (!thetaT.has_value())
    fail("simple roots do not span the lattice rationally; "
         "theta is undetermined");
  auto theta = to_int(thetaT->transpose());
  if (!theta.has_value()) fail("theta is not integral on X");
  IntMat theta_x = *theta;
  if (theta_x * theta_x != IntMat::identity(dim))
    fail("derived theta is not an involution");

  // adjoint action on Y: theta_Y^T P = P theta_X
  IntMat pinv = unimodular_inverse(rd.pairing);
  IntMat theta_y =
      pinv.transpose() * theta_x.transpose() * rd.pairing.transpose();

  std::vector<Int> two_rho = coroot_sum(rd, bl);

  if (opts.parity_axiom) {
    for (long i = 0; i < n; ++i) {
      if (d.black[i] || d.tau[i] != i) continue;
      if (rd.pair(two_rho, rd.root(i)) % 2 != 0)
        fail("evenness axiom: <2 rho_black^vee, alpha_" + std::to_string(i) +
             "> is odd");
    }
  }

  Satake s(std::move(d));
  s.theta_x_ = std::move(theta_x);
  s.theta_y_ = std::move(theta_y);
  s.w_black_ = std::move(w_black);
  s.two_rho_black_ = std::move(two_rho);
  return s;
}

Int Satake::rho_pair(long j) const {
  return d_.rd.pair(two_rho_black_, d_.rd.root(j));
}

std::vector<long> Satake::black_nodes() const {
  std::vector<long> out;
  for (long i = 0; i < d_.rd.rank_nodes(); ++i)
    if (d_.black[i]) out.push_back(i);
  return out;
}

std::vector<long> Satake::white_nodes() const {
  std::vector<long> out;
  for (long i = 0; i < d_.rd.rank_nodes(); ++i)
    if (!d_.black[i]) out.push_back(i);
  return out;
}

IotaLattice IotaLattice::compute(const Satake& s) {
  long d = s.diagram().rd.rank_lattice();
  IntMat one_minus = IntMat::identity(d) - s.thetaX();
  Smith sm = smith_form(one_minus);

  IotaLattice lat;
  lat.u_ = sm.U;
  for (long i = 0; i < d; ++i) {
    const Int& di = sm.S.at(i, i);
    lat.diag_.push_back(di);
    if (di == 0)
      lat.free_rows_.push_back(i);
    else if (di > 1) {
      if (di != 2)
        throw std::logic_error(
            "IotaLattice: torsion of an involution quotient must be "
            "2-elementary");
      lat.torsion_rows_.push_back(i);
    }
  }

  IntMat one_minus_y = IntMat::identity(d) - s.thetaY();
  Smith smy = smith_form(one_minus_y);
  std::vector<long> zero_cols;
  for (long j = 0; j < d; ++j)
    if (smy.S.at(j, j) == 0) zero_cols.push_back(j);
  IntMat yfix(d, static_cast<long>(zero_cols.size()));
  for (std::size_t k = 0; k < zero_cols.size(); ++k)
    for (long r = 0; r < d; ++r) yfix.at(r, k) = smy.V.at(r, zero_cols[k]);
  lat.yfix_ = std::move(yfix);
  return lat;
}

std::vector<Int> IotaLattice::x_class(const std::vector<Int>& lambda) const {
  long d = u_.rows();
  if (static_cast<long>(lambda.size()) != d)
    throw std::invalid_argument("IotaLattice::x_class: dimension mismatch");
  std::vector<Int> c = u_ * lambda;
  std::vector<Int> out;
  for (long r : torsion_rows_) {
    Int m;
    mpz_mod(m.get_mpz_t(), c[r].get_mpz_t(), diag_[r].get_mpz_t());
    out.push_back(m);
  }
  for (long r : free_rows_) out.push_back(c[r]);
  return out;
}

}  // namespace qsp
