#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsp/catalog.hpp"
#include "qsp/theta.hpp"

#include <map>
#include <random>
#include <string>

using qsp::Cartan;
using qsp::Element;
using qsp::Int;
using qsp::IntMat;
using qsp::IParameters;
using qsp::RatFunc;
using qsp::RootDatum;
using qsp::Satake;
using qsp::SatakeDiagram;
using qsp::UAlgebra;

namespace {

std::vector<Int> iv(std::vector<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

IntMat imat(long r, long c, std::vector<long> v) {
  std::vector<Int> e(v.begin(), v.end());
  return IntMat(r, c, std::move(e));
}

Satake entry(const std::string& name) {
  return Satake::build(qsp::catalog_entry(name).diagram);
}

Satake a3_aiii() {
  RootDatum a3 = RootDatum::simply_connected(
      Cartan::from_form(imat(3, 3, {2, -1, 0, -1, 2, -1, 0, -1, 2})));
  return Satake::build(
      SatakeDiagram{std::move(a3), {false, true, false}, {2, 1, 0}});
}

// uniform pick without std::uniform_int_distribution (which is not pinned
// across standard libraries); n must be small
long pick(std::mt19937& gen, long n) { return static_cast<long>(gen() % n); }

Element random_word(const UAlgebra& u, std::mt19937& gen,
                    const std::vector<qsp::Wt>& window, bool idem_tail) {
  const RootDatum& rd = u.rd();
  const long n = rd.rank_nodes(), d = rd.rank_lattice();
  Element x = u.one();
  const long len = 1 + pick(gen, 2);
  for (long k = 0; k < len; ++k) {
    switch (pick(gen, 3)) {
      case 0:
        x = u.mul(x, u.chevE(pick(gen, n)));
        break;
      case 1:
        x = u.mul(x, u.chevF(pick(gen, n)));
        break;
      default: {
        std::vector<Int> mu(d, 0);
        mu[pick(gen, d)] = pick(gen, 2) ? 1 : -1;
        x = u.mul(x, u.torus(mu));
      }
    }
  }
  if (idem_tail) x = u.mul(x, u.idem(window[pick(gen, window.size())]));
  return x;
}

}  // namespace

TEST_CASE("theta maps idempotents exactly") {
  for (const qsp::CatalogEntry& e : qsp::catalog()) {
    CAPTURE(e.name);
    Satake s = Satake::build(e.diagram);
    UAlgebra u(s.diagram().rd);
    IParameters p = qsp::default_params(s);
    for (const qsp::Wt& lam : qsp::pairing_window(s.diagram().rd, 1)) {
      std::vector<Int> tl = s.thetaX() * lam;
      CHECK(qsp::theta_A(u, s, p, u.idem(lam)) == u.idem(tl));
    }
  }
}

TEST_CASE("rank one split theta is the signed Chevalley flip") {
  Satake s = entry("sl2-split");
  UAlgebra u(s.diagram().rd);
  for (int sg : {1, -1}) {
    IParameters p = qsp::default_params(s);
    p.sign[0] = sg;
    for (long l = -2; l <= 2; ++l) {
      Element e1 = u.mul(u.chevE(0), u.idem(iv({l})));
      CHECK(qsp::theta_A(u, s, p, e1) ==
            u.scale(RatFunc(sg), u.mul(u.chevF(0), u.idem(iv({-l})))));
      Element f1 = u.mul(u.chevF(0), u.idem(iv({l})));
      CHECK(qsp::theta_A(u, s, p, f1) ==
            u.scale(RatFunc(sg), u.mul(u.chevE(0), u.idem(iv({-l})))));
      for (long n = 2; n <= 3; ++n) {
        Element en = u.mul(u.divE(0, n), u.idem(iv({l})));
        RatFunc c(sg == 1 || n % 2 == 0 ? 1 : -1);
        CHECK(qsp::theta_A(u, s, p, en) ==
              u.scale(c, u.mul(u.divF(0, n), u.idem(iv({-l})))));
      }
    }
  }
}

TEST_CASE("torus words collapse to idempotents at q = 1") {
  Satake s = entry("sl3-quasisplit");
  UAlgebra u(s.diagram().rd);
  IParameters p = qsp::default_params(s);
  const qsp::Battery& bat = qsp::module_battery(s.diagram().rd);
  for (const qsp::Wt& lam : qsp::pairing_window(s.diagram().rd, 1)) {
    Element x = u.mul(u.torus(iv({1, -2})), u.idem(lam));
    Element tx = qsp::theta_A(u, s, p, x);
    Element want = u.idem(s.thetaX() * lam);
    for (const qsp::WModule& m : bat.modules)
      CHECK(qsp::blockmap_equal_one(qsp::act(m, tx), qsp::act(m, want)));
  }
}

TEST_CASE("the involution squares to the identity on window generators") {
  for (const qsp::CatalogEntry& e : qsp::catalog()) {
    CAPTURE(e.name);
    Satake s = Satake::build(e.diagram);
    UAlgebra u(s.diagram().rd);
    IParameters p = qsp::default_params(s);
    const qsp::Battery& bat = qsp::module_battery(s.diagram().rd);
    qsp::InvolutionReport r = qsp::verify_involution(u, s, p, bat, 3);
    CHECK(r.ok());
    CHECK(r.generators > 0);
    if (!r.square.ok) MESSAGE(r.square.detail);
  }

  // the rank one split pair passes with either sign
  Satake s = entry("sl2-split");
  UAlgebra u(s.diagram().rd);
  IParameters p = qsp::default_params(s);
  p.sign[0] = -1;
  qsp::InvolutionReport r =
      qsp::verify_involution(u, s, p, qsp::module_battery(s.diagram().rd), 3);
  CHECK(r.ok());
}

TEST_CASE("the scaling character on black nodes is what makes theta square") {
  // flipping the black entries of the character to +1 is harmless on
  // diagrams whose black letters enter braid images evenly ...
  {
    Satake s = entry("sl2-compact");
    UAlgebra u(s.diagram().rd);
    IParameters p = qsp::default_params(s);
    const qsp::Battery& bat = qsp::module_battery(s.diagram().rd);
    qsp::InvolutionReport r = qsp::verify_involution(u, s, p, bat, 3, true);
    CHECK(r.square.ok);
    // ...where it breaks generator fixing instead (checked elsewhere)
  }
  // ...but on the swapped rank three diagram w_black alpha_2 = alpha_1 +
  // alpha_2 has odd black multiplicity: the flipped square picks up -1 on
  // E_0, so the involution check must fail
  {
    Satake s = a3_aiii();
    UAlgebra u(s.diagram().rd);
    IParameters p = qsp::default_params(s);
    const qsp::Battery& bat = qsp::module_battery(s.diagram().rd, 1, 70);
    REQUIRE(!bat.modules.empty());
    qsp::InvolutionReport good = qsp::verify_involution(u, s, p, bat, 1);
    CHECK(good.ok());
    qsp::InvolutionReport bad = qsp::verify_involution(u, s, p, bat, 1, true);
    CHECK(!bad.square.ok);
    CHECK(bad.signs.ok);  // the bookkeeping is untouched by the flip
  }
}

TEST_CASE("theta prime squared is the black parity character") {
  for (const qsp::CatalogEntry& e : qsp::catalog()) {
    CAPTURE(e.name);
    Satake s = Satake::build(e.diagram);
    UAlgebra u(s.diagram().rd);
    const qsp::Battery& bat = qsp::module_battery(s.diagram().rd);
    qsp::CheckResult r = qsp::theta_prime_square_check(u, s, bat, 1);
    CHECK(r.ok);
    if (!r.ok) MESSAGE(r.detail);
  }
}

TEST_CASE("theta is an algebra map modulo batteries at q = 1") {
  std::mt19937 gen(20240915);
  const std::pair<const char*, int> plan[] = {
      {"sl3-quasisplit", 40}, {"sp4-cii", 30}, {"sl2-compact", 30}};
  for (auto [name, pairs] : plan) {
    CAPTURE(name);
    Satake s = entry(name);
    UAlgebra u(s.diagram().rd);
    IParameters p = qsp::default_params(s);
    const qsp::Battery& bat = qsp::module_battery(s.diagram().rd);
    std::vector<qsp::Wt> window = qsp::pairing_window(s.diagram().rd, 2);
    for (int k = 0; k < pairs; ++k) {
      Element x = random_word(u, gen, window, false);
      Element y = random_word(u, gen, window, true);
      Element lhs = qsp::theta_A(u, s, p, u.mul(x, y));
      Element rhs =
          u.mul(qsp::theta_A(u, s, p, x), qsp::theta_A(u, s, p, y));
      for (const qsp::WModule& m : bat.modules)
        CHECK(qsp::blockmap_equal_one(qsp::act(m, lhs), qsp::act(m, rhs)));
    }
  }
}

TEST_CASE("theta fixes every coideal generator at q = 1") {
  for (const qsp::CatalogEntry& e : qsp::catalog()) {
    CAPTURE(e.name);
    Satake s = Satake::build(e.diagram);
    UAlgebra u(s.diagram().rd);
    IParameters p = qsp::default_params(s);
    const qsp::Battery& bat = qsp::module_battery(s.diagram().rd);
    qsp::CheckResult r = qsp::generator_fixing(u, s, p, bat);
    CHECK(r.ok);
    if (!r.ok) MESSAGE(r.detail);
    // flipping the black scaling entries un-fixes E_i, F_i for black i
    if (!s.black_nodes().empty()) {
      qsp::CheckResult bad = qsp::generator_fixing(u, s, p, bat, true);
      CHECK(!bad.ok);
    }
  }
}

TEST_CASE("fixed subalgebra equals the theta eigenspace with classical dims") {
  // dimensions of the classical compact-dual pairs, as an independent oracle
  const std::map<std::string, long> kdim = {
      {"sl2-split", 1},      {"sl2-compact", 3},  {"pgl2-split", 1},
      {"a1xa1-split", 2},    {"sl2xsl2-diag", 3}, {"sl3-split", 3},
      {"sl3-quasisplit", 4}, {"sp4-split", 4},    {"sp4-cii", 6},
      {"sp4-compact", 10},   {"spin5-split", 4},  {"spin5-bii", 6}};
  for (const qsp::CatalogEntry& e : qsp::catalog()) {
    CAPTURE(e.name);
    Satake s = Satake::build(e.diagram);
    UAlgebra u(s.diagram().rd);
    IParameters p = qsp::default_params(s);
    qsp::LieReport r = qsp::fixed_lie_algebra(u, s, p);
    CHECK(r.ok());
    if (!r.ok()) MESSAGE(r.detail);
    const long npos = static_cast<long>(
        qsp::positive_roots(s.diagram().rd.cartan).size());
    CHECK(r.dim_g == 2 * npos + s.diagram().rd.rank_lattice());
    CHECK(r.dim_k == kdim.at(e.name));
    CHECK(r.dim_k + r.dim_minus == r.dim_g);
  }
}

TEST_CASE("the black braid square acts by the parity character at q = 1") {
  // Conjugation by sbar(w_black) squared must scale e_i, f_i by
  // (-1)^{<2 rho_black^vee, alpha_i>}; independent recomputation per module.
  for (const char* name :
       {"sl2-compact", "sp4-cii", "spin5-bii", "sp4-compact", "sl2-split"}) {
    CAPTURE(name);
    Satake s = entry(name);
    const qsp::Battery& bat = qsp::module_battery(s.diagram().rd);
    qsp::CheckResult r = qsp::braid_square_at_one(s, bat);
    CHECK(r.ok);
    if (!r.ok) MESSAGE(r.detail);
  }

  // oracle recomputation + mutation control on the entry with a genuinely
  // odd parity (the catalog diagrams all have even black multiplicities)
  Satake s = a3_aiii();
  const qsp::RootDatum& rd = s.diagram().rd;
  long odd = -1;
  for (long i = 0; i < rd.rank_nodes(); ++i)
    if (s.rho_pair(i) % 2 != 0) odd = i;
  REQUIRE(odd >= 0);
  const qsp::Battery& bat = qsp::module_battery(rd, 1, 70);
  CHECK(qsp::braid_square_at_one(s, bat).ok);
  qsp::SpecModule m(bat.modules.back());
  qsp::RatMat sq = qsp::RatMat::identity(m.dim());
  for (long i : s.w_black()) sq = sq * qsp::sbar(m, i);
  sq = sq * sq;
  CHECK(sq * m.ed(odd) == m.ed(odd).scaled(qsp::Rat(-1)) * sq);
  // dropping the sign (the +1 character) must fail on that node
  CHECK(!(sq * m.ed(odd) == m.ed(odd) * sq));
}
