#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsp/catalog.hpp"
#include "qsp/grouplab.hpp"

#include <random>

using qsp::GroupBattery;
using qsp::GroupPoint;
using qsp::FiniteFieldGroup;
using qsp::Int;
using qsp::IParameters;
using qsp::Rat;
using qsp::RatMat;
using qsp::RootDatum;
using qsp::Satake;
using qsp::Side;
using qsp::UAlgebra;

namespace {

std::vector<Int> iv(std::vector<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

RatMat rm(long r, long c, std::vector<long> v) {
  RatMat m(r, c);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) m.at(i, j) = Rat(v[i * c + j]);
  return m;
}

const GroupBattery& sl2_battery() {
  static GroupBattery gb =
      qsp::group_battery(qsp::catalog_entry("sl2-split").diagram.rd);
  return gb;
}

long pick(std::mt19937& gen, long n) { return static_cast<long>(gen() % n); }

}  // namespace

TEST_CASE("the group battery carries a faithful tensor pair") {
  const GroupBattery& gb = sl2_battery();
  REQUIRE(gb.mods.size() == 3);
  CHECK(gb.mods[0].dim() == 2);
  CHECK(gb.mods[1].dim() == 3);
  CHECK(gb.mods[2].dim() == 4);
  CHECK(gb.slots[0].left == -1);
  CHECK(gb.slots[2].left == 0);
  CHECK(gb.slots[2].right == 0);
  CHECK(gb.labels[2].find("(x)") != std::string::npos);
}

TEST_CASE("torus points act diagonally and check multiplicativity") {
  const GroupBattery& gb = sl2_battery();

  CHECK(qsp::torus_point(gb, std::vector<Rat>{Rat(1)}) == qsp::gp_identity(gb));

  // over the rationals, in the lex weight order (-1 then 1)
  GroupPoint h2 = qsp::torus_point(gb, std::vector<Rat>{Rat(2)});
  RatMat v(2, 2);
  v.at(0, 0) = Rat(1, 2);
  v.at(1, 1) = Rat(2);
  CHECK(h2.mats[0] == v);
  RatMat l2(3, 3);  // weights -2, 0, 2
  l2.at(0, 0) = Rat(1, 4);
  l2.at(1, 1) = Rat(1);
  l2.at(2, 2) = Rat(4);
  CHECK(h2.mats[1] == l2);
  CHECK(qsp::tensor_compatible(gb, h2));

  // over F_7: 3^{-1} = 5
  GroupPoint h3 = qsp::torus_point(gb, std::vector<Rat>{Rat(3)}, 7);
  CHECK(h3.mats[0] == rm(2, 2, {5, 0, 0, 3}));

  // torus points commute
  GroupPoint h4 = qsp::torus_point(gb, std::vector<Rat>{Rat(4)}, 7);
  CHECK(qsp::gp_mul(h3, h4) == qsp::gp_mul(h4, h3));
  CHECK(qsp::gp_mul(h3, h4) ==
        qsp::torus_point(gb, std::vector<Rat>{Rat(12)}, 7));

  // values on a redundant generating set are accepted when consistent
  GroupPoint hh = qsp::torus_point(
      gb, std::vector<std::pair<qsp::Wt, Rat>>{{iv({1}), Rat(3)},
                                               {iv({2}), Rat(2)}},
      7);
  CHECK(hh == h3);
  // ... and rejected when the map fails to be multiplicative
  CHECK_THROWS_AS(
      qsp::torus_point(gb,
                       std::vector<std::pair<qsp::Wt, Rat>>{
                           {iv({1}), Rat(2)}, {iv({2}), Rat(3)}},
                       7),
      std::invalid_argument);
  // ... or when the given characters do not generate the lattice
  CHECK_THROWS_AS(
      qsp::torus_point(
          gb, std::vector<std::pair<qsp::Wt, Rat>>{{iv({2}), Rat(4)}}, 7),
      std::invalid_argument);
  // unit values only
  CHECK_THROWS_AS(qsp::torus_point(gb, std::vector<Rat>{Rat(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(qsp::torus_point(gb, std::vector<Rat>{Rat(7)}, 7),
                  std::invalid_argument);
}

TEST_CASE("one-parameter points exponentiate the Chevalley generators") {
  const GroupBattery& gb = sl2_battery();

  // on V with lex weight order, the E side adds a * (lowest -> highest)
  GroupPoint xa = qsp::one_param(gb, 0, Side::upper, Rat(3, 2));
  RatMat xv(2, 2);
  xv.at(0, 0) = xv.at(1, 1) = Rat(1);
  xv.at(1, 0) = Rat(3, 2);
  CHECK(xa.mats[0] == xv);
  GroupPoint yb = qsp::one_param(gb, 0, Side::lower, Rat(5));
  CHECK(yb.mats[0] == rm(2, 2, {1, 5, 0, 1}));
  CHECK(qsp::one_param(gb, 0, Side::upper, Rat(0)) == qsp::gp_identity(gb));

  // independent oracle: the matrix exponential exp(a N) of the nilpotent,
  // summed with true factorials, on every battery entry
  for (int side = 0; side < 2; ++side) {
    Rat a = side ? Rat(5) : Rat(3, 2);
    GroupPoint g = qsp::one_param(gb, 0, side ? Side::lower : Side::upper, a);
    for (std::size_t k = 0; k < gb.mods.size(); ++k) {
      const long d = gb.mods[k].dim();
      RatMat nil = side ? gb.mods[k].fd(0) : gb.mods[k].ed(0);
      RatMat expa = RatMat::identity(d), pow = RatMat::identity(d);
      Int fact = 1;
      for (long n = 1; n <= d; ++n) {
        pow = pow * nil;
        fact *= n;
        RatMat term = pow;
        for (long r = 0; r < d; ++r)
          for (long c = 0; c < d; ++c) {
            Rat num = term.at(r, c);
            for (long e = 0; e < n; ++e) num *= a;
            expa.at(r, c) += num / Rat(fact);
          }
      }
      CHECK(g.mats[k] == expa);
    }
    CHECK(qsp::tensor_compatible(gb, g));
  }

  // additivity over F_7 on the whole realization tuple
  std::mt19937 gen(77);
  for (int k = 0; k < 20; ++k) {
    long a = pick(gen, 7), b = pick(gen, 7);
    for (Side s : {Side::upper, Side::lower}) {
      GroupPoint lhs = qsp::gp_mul(qsp::one_param(gb, 0, s, Rat(a), 7),
                                   qsp::one_param(gb, 0, s, Rat(b), 7));
      CHECK(lhs == qsp::one_param(gb, 0, s, Rat(a + b), 7));
    }
  }

  // the braid point is the rank one rotation
  CHECK(qsp::sbar_point(gb, 0).mats[0] == rm(2, 2, {0, -1, 1, 0}));
}

TEST_CASE("the rank one finite groups have the classical orders") {
  const GroupBattery& gb = sl2_battery();
  std::mt19937 gen(2024);
  for (long p : {3L, 5L}) {
    CAPTURE(p);
    FiniteFieldGroup g = qsp::enumerate_group(gb, p);
    CHECK(static_cast<long>(g.elements.size()) == p * (p * p - 1));
    CHECK(g.find(qsp::gp_identity(gb, p)) >= 0);
    const long n = static_cast<long>(g.elements.size());
    for (int k = 0; k < 200; ++k) {
      const GroupPoint& x = g.elements[pick(gen, n)];
      const GroupPoint& y = g.elements[pick(gen, n)];
      CHECK(g.find(qsp::gp_mul(x, y)) >= 0);  // closure, full tuple match
    }
    for (int k = 0; k < 20; ++k)
      CHECK(g.find(qsp::gp_inverse(g.elements[pick(gen, n)])) >= 0);
  }

  // the finitary group-like condition holds on every enumerated point
  FiniteFieldGroup g3 = qsp::enumerate_group(gb, 3);
  for (const GroupPoint& x : g3.elements) CHECK(qsp::tensor_compatible(gb, x));

  CHECK_THROWS_AS(qsp::enumerate_group(gb, 2), std::invalid_argument);
  CHECK_THROWS_AS(qsp::enumerate_group(gb, 9), std::invalid_argument);
  CHECK_THROWS_AS(qsp::enumerate_group(gb, 17), std::invalid_argument);
  GroupBattery a2 =
      qsp::group_battery(qsp::catalog_entry("sl3-split").diagram.rd);
  CHECK_THROWS_AS(qsp::enumerate_group(a2, 3), std::invalid_argument);
  GroupBattery ad =
      qsp::group_battery(qsp::catalog_entry("pgl2-split").diagram.rd);
  CHECK_THROWS_AS(qsp::enumerate_group(ad, 3), std::invalid_argument);
}

TEST_CASE("theta on points is a multiplicative involution") {
  const GroupBattery& gb = sl2_battery();
  Satake s = Satake::build(qsp::catalog_entry("sl2-split").diagram);
  UAlgebra u(s.diagram().rd);
  IParameters prm = qsp::default_params(s);

  // over the rationals: the involution swaps the unipotent sides and
  // inverts the torus, matching theta on e, f, h
  qsp::ThetaRealization th0 = qsp::theta_realization(gb, u, s, prm);
  GroupPoint x = qsp::one_param(gb, 0, Side::upper, Rat(3, 2));
  CHECK(qsp::theta_on_points(th0, x) ==
        qsp::one_param(gb, 0, Side::lower, Rat(3, 2)));
  GroupPoint h = qsp::torus_point(gb, std::vector<Rat>{Rat(2)});
  CHECK(qsp::theta_on_points(th0, h) ==
        qsp::torus_point(gb, std::vector<Rat>{Rat(1, 2)}));

  // with the other admissible sign the swap picks up -1
  IParameters prm2 = prm;
  prm2.sign[0] = -1;
  qsp::ThetaRealization thm = qsp::theta_realization(gb, u, s, prm2);
  CHECK(qsp::theta_on_points(thm, x) ==
        qsp::one_param(gb, 0, Side::lower, Rat(-3, 2)));

  std::mt19937 gen(511);
  for (long p : {3L, 5L}) {
    CAPTURE(p);
    qsp::ThetaRealization th = qsp::theta_realization(gb, u, s, prm, p);
    FiniteFieldGroup g = qsp::enumerate_group(gb, p);
    CHECK(qsp::theta_on_points(th, qsp::gp_identity(gb, p)) ==
          qsp::gp_identity(gb, p));
    for (const GroupPoint& e : g.elements) {
      GroupPoint te = qsp::theta_on_points(th, e);
      CHECK(g.find(te) >= 0);  // theta preserves the group
      CHECK(qsp::theta_on_points(th, te) == e);
    }
    const long n = static_cast<long>(g.elements.size());
    for (int k = 0; k < 50; ++k) {
      const GroupPoint& a = g.elements[pick(gen, n)];
      const GroupPoint& b = g.elements[pick(gen, n)];
      CHECK(qsp::theta_on_points(th, qsp::gp_mul(a, b)) ==
            qsp::gp_mul(qsp::theta_on_points(th, a),
                        qsp::theta_on_points(th, b)));
    }
    for (long t = 1; t < p; ++t) {
      GroupPoint xt = qsp::one_param(gb, 0, Side::upper, Rat(t), p);
      CHECK(qsp::theta_on_points(th, xt) ==
            qsp::one_param(gb, 0, Side::lower, Rat(t), p));
      GroupPoint ht = qsp::torus_point(gb, std::vector<Rat>{Rat(t)}, p);
      CHECK(qsp::theta_on_points(th, ht) ==
            qsp::torus_point(gb, std::vector<Rat>{Rat(qsp::fp_inv(t, p))}, p));
    }
  }
}

TEST_CASE("fixed points count the hyperbolic conic") {
  const GroupBattery& gb = sl2_battery();
  Satake s = Satake::build(qsp::catalog_entry("sl2-split").diagram);
  UAlgebra u(s.diagram().rd);
  IParameters prm = qsp::default_params(s);

  for (long p : {3L, 5L, 7L, 11L}) {
    CAPTURE(p);
    FiniteFieldGroup g = qsp::enumerate_group(gb, p);
    qsp::ThetaRealization th = qsp::theta_realization(gb, u, s, prm, p);
    FiniteFieldGroup k = qsp::fixed_points(g, th);
    const long nk = static_cast<long>(k.elements.size());
    CHECK(nk == qsp::conic_count(p));
    CHECK(nk == p - 1);

    // subgroup, exhaustively
    CHECK(k.find(qsp::gp_identity(gb, p)) >= 0);
    for (const GroupPoint& a : k.elements) {
      CHECK(k.find(qsp::gp_inverse(a)) >= 0);
      for (const GroupPoint& b : k.elements)
        CHECK(k.find(qsp::gp_mul(a, b)) >= 0);
    }

    // with the default sign the fixed matrices on V are the conic points
    // [[u, v], [v, u]], u^2 - v^2 = 1
    for (const GroupPoint& a : k.elements) {
      CHECK(a.mats[0].at(0, 0) == a.mats[0].at(1, 1));
      CHECK(a.mats[0].at(0, 1) == a.mats[0].at(1, 0));
    }
  }

  CHECK(qsp::conic_count(3) == 2);
  CHECK(qsp::conic_count(5) == 4);
  CHECK(qsp::conic_count(7) == 6);
  for (long p : {3L, 5L, 7L, 11L, 13L})
    CHECK(qsp::conic_count(p) == qsp::conic_count_torus_oracle(p));
  CHECK_THROWS_AS(qsp::conic_count(2), std::invalid_argument);

  // the other admissible sign fixes the circle u^2 + v^2 = 1 instead;
  // informational, the counts depend on p mod 4
  IParameters prm2 = prm;
  prm2.sign[0] = -1;
  for (long p : {3L, 5L, 7L}) {
    CAPTURE(p);
    FiniteFieldGroup g = qsp::enumerate_group(gb, p);
    qsp::ThetaRealization th = qsp::theta_realization(gb, u, s, prm2, p);
    CHECK(static_cast<long>(qsp::fixed_points(g, th).elements.size()) ==
          qsp::circle_count(p));
  }
  CHECK(qsp::circle_count(3) == 4);
  CHECK(qsp::circle_count(5) == 4);
  CHECK(qsp::circle_count(7) == 8);
}

TEST_CASE("the characteristic two fiber is non-reduced") {
  qsp::Char2Witness w = qsp::char2_nonreduced_witness();
  CHECK(w.ok());
  CHECK(w.all_even);
  CHECK(w.zero_mod2);
  CHECK(w.nonzero_mod3);
  // (u+v+1)^2 - (u^2 - v^2 - 1) expanded over Z
  qsp::Poly2 want;
  want[{0, 0}] = 2;
  want[{1, 0}] = 2;
  want[{0, 1}] = 2;
  want[{1, 1}] = 2;
  want[{0, 2}] = 2;
  CHECK(w.difference == want);
}

TEST_CASE("fixed points factor through the theta-fixed torus and the conic torus") {
  const GroupBattery& gb = sl2_battery();
  Satake s = Satake::build(qsp::catalog_entry("sl2-split").diagram);
  UAlgebra u(s.diagram().rd);
  IParameters prm = qsp::default_params(s);

  for (long p : {7L, 11L}) {
    CAPTURE(p);
    FiniteFieldGroup g = qsp::enumerate_group(gb, p);
    qsp::ThetaRealization th = qsp::theta_realization(gb, u, s, prm, p);
    FiniteFieldGroup k = qsp::fixed_points(g, th);
    qsp::TKReport tk = qsp::tk_check(gb, g, k, th);
    CHECK(tk.ok());
    CHECK(tk.p == p);
    CHECK(tk.torus_fixed == 2);
    CHECK(tk.torus_component == p - 1);
    CHECK(tk.factors);
    CHECK(tk.control_outside);
    CHECK(!tk.caveat.empty());
  }
}
