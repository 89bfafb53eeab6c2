#include "qsp/iqg.hpp"

#include <sstream>
#include <stdexcept>

namespace qsp {

namespace {

std::string wt_str(const std::vector<Int>& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < w.size(); ++k)
    os << (k ? "," : "") << w[k].get_str();
  os << ")";
  return os.str();
}

bool odd(const Int& v) { return v % 2 != 0; }

}  // namespace

RatFunc IParameters::value(long i) const {
  RatFunc v = RatFunc::q(expo[i]);
  return sign[i] < 0 ? RatFunc(-1) * v : v;
}

ParamReport validate_params(const Satake& s, const IParameters& p) {
  const RootDatum& rd = s.diagram().rd;
  const long n = rd.rank_nodes();
  if (static_cast<long>(p.sign.size()) != n ||
      static_cast<long>(p.expo.size()) != n)
    throw std::invalid_argument("validate_params: parameter shape mismatch");

  ParamReport rep;
  for (long i = 0; i < n; ++i) {
    if (s.is_black(i)) continue;
    const long ti = s.tau(i);
    std::ostringstream os;

    ParamCheck match{"sign-match", i, false, true, ""};
    Int pr = rd.pair_coroot(i, s.thetaX() * rd.root(i));
    if (pr != 0) {
      match.vacuous = true;
      os << "<alpha_" << i << "^vee, theta alpha_" << i << "> = "
         << pr.get_str() << ", no condition";
    } else {
      match.pass = p.sign[i] == p.sign[ti];
      os << "sign_" << i << " = " << p.sign[i] << ", sign_" << ti << " = "
         << p.sign[ti] << " with <alpha_" << i << "^vee, theta alpha_" << i
         << "> = 0";
    }
    match.detail = os.str();
    rep.checks.push_back(std::move(match));

    ParamCheck par{"parity-product", i, false, true, ""};
    const int want = odd(s.rho_pair(i)) ? -1 : 1;
    par.pass = p.sign[i] * p.sign[ti] == want;
    std::ostringstream os2;
    os2 << "sign_" << i << " * sign_" << ti << " = " << p.sign[i] * p.sign[ti]
        << ", (-1)^<2 rho_black^vee, alpha_" << i << "> = " << want;
    par.detail = os2.str();
    rep.checks.push_back(std::move(par));
  }
  for (const ParamCheck& c : rep.checks) rep.ok = rep.ok && c.pass;
  return rep;
}

IParameters default_params(const Satake& s) {
  const long n = s.diagram().rd.rank_nodes();
  IParameters p{std::vector<int>(n, 1), std::vector<long>(n, 0)};
  for (long i = 0; i < n; ++i) {
    const long ti = s.tau(i);
    if (s.is_black(i) || ti <= i) continue;
    if (odd(s.rho_pair(i))) p.sign[ti] = -1;
  }
  return p;
}

Element bgen(const UAlgebra& u, const Satake& s, const IParameters& p,
             long i) {
  return bgen(u, s, p, i, s.w_black());
}

Element bgen(const UAlgebra& u, const Satake& s, const IParameters& p, long i,
             const std::vector<long>& wblack_word) {
  if (s.is_black(i))
    throw std::invalid_argument("bgen: node " + std::to_string(i) +
                                " is black");
  Element twe = braid_tw(u, wblack_word, u.chevE(s.tau(i)));
  return u.add(u.chevF(i),
               u.scale(p.value(i), u.mul(twe, u.torus_node(i, -1))));
}

IGeneratorSet igens(const UAlgebra& u, const Satake& s, const IParameters& p) {
  IGeneratorSet g;
  g.white = s.white_nodes();
  for (long i : g.white) g.bgens.push_back(bgen(u, s, p, i));
  const IotaLattice il = IotaLattice::compute(s);
  for (long c = 0; c < il.yfix().cols(); ++c) {
    g.kweights.push_back(il.yfix().column(c));
    g.kgens.push_back(u.torus(g.kweights.back()));
  }
  g.black = s.black_nodes();
  for (long i : g.black) {
    g.egens.push_back(u.chevE(i));
    g.fgens.push_back(u.chevF(i));
  }
  return g;
}

CheckResult igrading_check(const UAlgebra& u, const Satake& s,
                           const IParameters& p, const Battery& bat,
                           const IotaLattice* lattice) {
  const IotaLattice computed = IotaLattice::compute(s);
  const IotaLattice& il = lattice ? *lattice : computed;

  IGeneratorSet g = igens(u, s, p);
  std::vector<std::pair<std::string, const Element*>> gens;
  for (std::size_t k = 0; k < g.bgens.size(); ++k)
    gens.emplace_back("B_" + std::to_string(g.white[k]), &g.bgens[k]);
  for (std::size_t k = 0; k < g.kgens.size(); ++k)
    gens.emplace_back("K_" + wt_str(g.kweights[k]), &g.kgens[k]);
  for (std::size_t k = 0; k < g.egens.size(); ++k) {
    gens.emplace_back("E_" + std::to_string(g.black[k]), &g.egens[k]);
    gens.emplace_back("F_" + std::to_string(g.black[k]), &g.fgens[k]);
  }

  for (const auto& [label, el] : gens) {
    bool seen = false;
    std::vector<Int> cls;
    std::string where;
    for (std::size_t m = 0; m < bat.modules.size(); ++m) {
      const BlockMap bm = act(bat.modules[m], *el);
      for (const auto& [src, inner] : bm)
        for (const auto& [dst, block] : inner) {
          if (block.is_zero()) continue;
          std::vector<Int> c = il.x_class(wt_sub(dst, src));
          if (!seen) {
            seen = true;
            cls = std::move(c);
            where = bat.labels[m] + " shift " + wt_str(wt_sub(dst, src));
          } else if (c != cls) {
            return CheckResult::fail(
                label + ": residual class " + wt_str(c) + " on " +
                bat.labels[m] + " shift " + wt_str(wt_sub(dst, src)) +
                " differs from " + wt_str(cls) + " (" + where + ")");
          }
        }
    }
  }
  return {};
}

}  // namespace qsp
