#include "qsp/theta.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

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

IntMat negated(IntMat m) {
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
  return m;
}

// the lattice halves of the diagram involution: theta = -w_black tau on
// both lattices, and w_black is an involution, so tau = -(w_black theta)
IntMat tau_lattice(const Satake& s, bool on_x) {
  const RootDatum& rd = s.diagram().rd;
  IntMat w = IntMat::identity(rd.rank_lattice());
  for (long i : s.w_black())
    w = w * (on_x ? rd.reflection_X(i) : rd.reflection_Y(i));
  return negated(w * (on_x ? s.thetaX() : s.thetaY()));
}

Element apply_theta(const UAlgebra& u, const Satake& s,
                    const std::vector<RatFunc>& eps, const Element& x) {
  Element y = u.omega(u.xi(eps, x));
  y = u.remap(s.diagram().tau, tau_lattice(s, true), tau_lattice(s, false), y);
  return braid_tw(u, s.w_black(), y);
}

}  // namespace

std::vector<RatFunc> theta_eps(const Satake& s, const IParameters& p,
                               bool flip_black) {
  const long n = s.diagram().rd.rank_nodes();
  std::vector<RatFunc> eps;
  eps.reserve(n);
  for (long i = 0; i < n; ++i) {
    if (s.is_black(i)) {
      eps.push_back(RatFunc(flip_black ? 1 : -1));
    } else {
      // bar-conjugate of the node parameter: the sign survives, q -> q^{-1}
      RatFunc v = RatFunc::q(-p.expo[i]);
      eps.push_back(p.sign[i] < 0 ? RatFunc(-1) * v : v);
    }
  }
  return eps;
}

Element theta_A(const UAlgebra& u, const Satake& s, const IParameters& p,
                const Element& x, bool flip_black) {
  return apply_theta(u, s, theta_eps(s, p, flip_black), x);
}

Element theta_prime(const UAlgebra& u, const Satake& s, const Element& x) {
  std::vector<RatFunc> eps(s.diagram().rd.rank_nodes(), RatFunc(-1));
  return apply_theta(u, s, eps, x);
}

namespace {

// 1_lam, E_i 1_lam, F_i 1_lam over the pairing window, labeled
std::vector<std::pair<std::string, Element>> window_generators(
    const UAlgebra& u, long window) {
  const RootDatum& rd = u.rd();
  std::vector<std::pair<std::string, Element>> gens;
  for (const Wt& lam : pairing_window(rd, window)) {
    const std::string at = "1_" + wt_str(lam);
    gens.emplace_back(at, u.idem(lam));
    for (long i = 0; i < rd.rank_nodes(); ++i) {
      gens.emplace_back("E_" + std::to_string(i) + " " + at,
                        u.mul(u.chevE(i), u.idem(lam)));
      gens.emplace_back("F_" + std::to_string(i) + " " + at,
                        u.mul(u.chevF(i), u.idem(lam)));
    }
  }
  return gens;
}

bool battery_equal_one(const Battery& bat, const Element& a, const Element& b,
                       std::string* where) {
  for (std::size_t k = 0; k < bat.modules.size(); ++k) {
    if (!blockmap_equal_one(act(bat.modules[k], a), act(bat.modules[k], b))) {
      if (where) *where = bat.labels[k];
      return false;
    }
  }
  return true;
}

}  // namespace

InvolutionReport verify_involution(const UAlgebra& u, const Satake& s,
                                   const IParameters& p, const Battery& bat,
                                   long window, bool flip_black) {
  const RootDatum& rd = s.diagram().rd;
  InvolutionReport rep;

  // re-derive the sign bookkeeping that makes the square work
  for (long i = 0; i < rd.rank_nodes() && rep.signs.ok; ++i) {
    if (s.is_black(i)) continue;
    const int want = odd(s.rho_pair(i)) ? -1 : 1;
    if (p.sign[i] * p.sign[s.tau(i)] != want) {
      std::ostringstream os;
      os << "sign_" << i << " * sign_" << s.tau(i) << " = "
         << p.sign[i] * p.sign[s.tau(i)] << " but the black parity at node "
         << i << " demands " << want;
      rep.signs = CheckResult::fail(os.str());
    }
  }

  for (const auto& [label, g] : window_generators(u, window)) {
    ++rep.generators;
    Element tt = theta_A(u, s, p, theta_A(u, s, p, g, flip_black), flip_black);
    std::string where;
    if (!battery_equal_one(bat, tt, g, &where)) {
      rep.square =
          CheckResult::fail("theta^2 moved " + label + " on " + where);
      return rep;
    }
  }
  return rep;
}

CheckResult theta_prime_square_check(const UAlgebra& u, const Satake& s,
                                     const Battery& bat, long window) {
  const RootDatum& rd = s.diagram().rd;
  for (const Wt& lam : pairing_window(rd, window)) {
    for (long i = 0; i < rd.rank_nodes(); ++i) {
      const RatFunc sign(odd(s.rho_pair(i)) ? -1 : 1);
      for (int e = 0; e < 2; ++e) {
        Element g = u.mul(e ? u.chevE(i) : u.chevF(i), u.idem(lam));
        Element got = theta_prime(u, s, theta_prime(u, s, g));
        std::string where;
        if (!battery_equal_one(bat, got, u.scale(sign, g), &where)) {
          std::ostringstream os;
          os << "theta'^2 on " << (e ? "E_" : "F_") << i << " 1_"
             << wt_str(lam) << " is not the parity sign on " << where;
          return CheckResult::fail(os.str());
        }
      }
    }
  }
  return {};
}

CheckResult generator_fixing(const UAlgebra& u, const Satake& s,
                             const IParameters& p, const Battery& bat,
                             bool flip_black) {
  IGeneratorSet gs = igens(u, s, p);
  std::vector<std::pair<std::string, Element>> gens;
  for (std::size_t k = 0; k < gs.white.size(); ++k)
    gens.emplace_back("B_" + std::to_string(gs.white[k]), gs.bgens[k]);
  for (std::size_t k = 0; k < gs.kweights.size(); ++k)
    gens.emplace_back("K_" + wt_str(gs.kweights[k]), gs.kgens[k]);
  for (std::size_t k = 0; k < gs.black.size(); ++k) {
    gens.emplace_back("E_" + std::to_string(gs.black[k]), gs.egens[k]);
    gens.emplace_back("F_" + std::to_string(gs.black[k]), gs.fgens[k]);
  }
  for (const auto& [label, g] : gens) {
    Element tg = theta_A(u, s, p, g, flip_black);
    std::string where;
    if (!battery_equal_one(bat, tg, g, &where))
      return CheckResult::fail("theta moved " + label + " on " + where);
  }
  return {};
}

namespace {

// flatten a square matrix into the column of a bigger one
void put_column(RatMat& into, long col, const RatMat& m) {
  const long d = m.rows();
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c) into.at(r * d + c, col) = m.at(r, c);
}

RatMat columns_of(const std::vector<RatMat>& ms, long d) {
  RatMat out(d * d, static_cast<long>(ms.size()));
  for (std::size_t j = 0; j < ms.size(); ++j)
    put_column(out, static_cast<long>(j), ms[j]);
  return out;
}

bool enlarges_span(const std::vector<RatMat>& basis, const RatMat& cand,
                   long d) {
  if (cand.is_zero()) return false;
  std::vector<RatMat> all = basis;
  all.push_back(cand);
  return columns_of(all, d).rank() == static_cast<long>(all.size());
}

// bracket closure in place; `images` (when present) is kept parallel via
// theta([a, b]) = [theta a, theta b]
void close_under_bracket(std::vector<RatMat>& basis,
                         std::vector<RatMat>* images, long d) {
  for (std::size_t x = 0; x < basis.size(); ++x)
    for (std::size_t y = 0; y < x; ++y) {
      RatMat br = basis[x] * basis[y] - basis[y] * basis[x];
      if (!enlarges_span(basis, br, d)) continue;
      basis.push_back(std::move(br));
      if (images)
        images->push_back((*images)[x] * (*images)[y] -
                          (*images)[y] * (*images)[x]);
    }
}

}  // namespace

LieReport fixed_lie_algebra(const UAlgebra& u, const Satake& s,
                            const IParameters& p) {
  const RootDatum& rd = s.diagram().rd;
  const long n = rd.rank_nodes(), dy = rd.rank_lattice();
  const long expect =
      2 * static_cast<long>(positive_roots(rd.cartan).size()) + dy;
  const Battery& bat = module_battery(rd);
  const IotaLattice il = IotaLattice::compute(s);

  // candidate simple modules, ascending dimension, then the sum of them all
  std::vector<std::pair<long, std::size_t>> order;
  for (std::size_t k = 0; k < bat.modules.size(); ++k) {
    if (bat.labels[k].find("(x)") != std::string::npos) continue;
    if (bat.modules[k].total_dim() <= 1) continue;
    order.emplace_back(bat.modules[k].total_dim(), k);
  }
  std::sort(order.begin(), order.end());
  std::vector<std::pair<std::string, std::vector<std::size_t>>> plans;
  std::vector<std::size_t> everything;
  for (const auto& [dim, k] : order) {
    plans.emplace_back(bat.labels[k], std::vector<std::size_t>{k});
    everything.push_back(k);
  }
  if (plans.size() > 1) plans.emplace_back("sum of battery simples", everything);

  LieReport rep;
  for (const auto& [label, idx] : plans) {
    std::vector<SpecModule> mods;
    long dtot = 0;
    for (std::size_t k : idx) {
      mods.emplace_back(bat.modules[k]);
      dtot += mods.back().dim();
    }
    auto assemble = [&](const std::function<RatMat(const SpecModule&)>& f) {
      RatMat out(dtot, dtot);
      long off = 0;
      for (const SpecModule& m : mods) {
        RatMat b = f(m);
        for (long r = 0; r < b.rows(); ++r)
          for (long c = 0; c < b.cols(); ++c) out.at(off + r, off + c) = b.at(r, c);
        off += b.rows();
      }
      return out;
    };

    // Chevalley and torus generators with their theta images: E and F
    // directly through the word algebra, h_mu through theta on Y
    std::vector<RatMat> gens, images;
    for (long i = 0; i < n; ++i) {
      for (int e = 0; e < 2; ++e) {
        Element g = e ? u.chevE(i) : u.chevF(i);
        Element tg = theta_A(u, s, p, g);
        gens.push_back(assemble(
            [&](const SpecModule& m) { return e ? m.ed(i) : m.fd(i); }));
        images.push_back(
            assemble([&](const SpecModule& m) { return m.act_one(tg); }));
      }
    }
    for (long k = 0; k < dy; ++k) {
      std::vector<Int> mu(dy, 0);
      mu[k] = 1;
      std::vector<Int> tmu = s.thetaY().column(k);
      gens.push_back(assemble([&](const SpecModule& m) { return m.hmu(mu); }));
      images.push_back(
          assemble([&](const SpecModule& m) { return m.hmu(tmu); }));
    }

    std::vector<RatMat> basis, theta_basis;
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (enlarges_span(basis, gens[k], dtot)) {
        basis.push_back(gens[k]);
        theta_basis.push_back(images[k]);
      }
    close_under_bracket(basis, &theta_basis, dtot);

    rep.dim_g = static_cast<long>(basis.size());
    rep.realized_on = label;
    rep.faithful = rep.dim_g == expect;
    if (!rep.faithful) {
      rep.detail = "realization on " + label + " has dimension " +
                   std::to_string(rep.dim_g) + ", expected " +
                   std::to_string(expect);
      continue;  // not faithful here; try the next candidate
    }

    // theta as a matrix in the chosen basis of g
    RatMat gcols = columns_of(basis, dtot);
    auto th = RatMat::solve(gcols, columns_of(theta_basis, dtot));
    if (!th) {
      rep.detail = "theta does not stabilize the realized algebra on " + label;
      return rep;
    }
    const RatMat& theta = *th;
    rep.theta_involution = theta * theta == RatMat::identity(rep.dim_g);

    // generators of the candidate fixed algebra: the q = 1 points of the
    // coideal generators, plus the theta-fixed torus directions
    std::vector<RatMat> kgens;
    for (long i : s.white_nodes()) {
      Element b = bgen(u, s, p, i);
      kgens.push_back(
          assemble([&](const SpecModule& m) { return m.act_one(b); }));
    }
    for (long j : s.black_nodes()) {
      kgens.push_back(assemble([&](const SpecModule& m) { return m.ed(j); }));
      kgens.push_back(assemble([&](const SpecModule& m) { return m.fd(j); }));
    }
    for (long c = 0; c < il.yfix().cols(); ++c) {
      std::vector<Int> mu = il.yfix().column(c);
      kgens.push_back(assemble([&](const SpecModule& m) { return m.hmu(mu); }));
    }
    std::vector<RatMat> kbasis;
    for (const RatMat& g : kgens)
      if (enlarges_span(kbasis, g, dtot)) kbasis.push_back(g);
    close_under_bracket(kbasis, nullptr, dtot);
    rep.dim_k = static_cast<long>(kbasis.size());

    // the two descriptions of k must agree: the closure sits inside the
    // +1 eigenspace of theta and fills it
    auto kcoords = kbasis.empty()
                       ? std::optional<RatMat>(RatMat(rep.dim_g, 0))
                       : RatMat::solve(gcols, columns_of(kbasis, dtot));
    RatMat id = RatMat::identity(rep.dim_g);
    const long fixed_dim = rep.dim_g - (theta - id).rank();
    rep.dim_minus = rep.dim_g - (theta + id).rank();
    if (!kcoords) {
      rep.detail = "fixed-algebra closure leaves the realized algebra on " + label;
      return rep;
    }
    rep.closure_equals_fixed =
        ((theta - id) * *kcoords).is_zero() && rep.dim_k == fixed_dim;
    if (!rep.closure_equals_fixed) {
      std::ostringstream os;
      os << "closure dimension " << rep.dim_k << " vs fixed eigenspace "
         << fixed_dim << " on " << label;
      rep.detail = os.str();
    }
    return rep;
  }
  if (rep.detail.empty()) rep.detail = "no usable module in the battery";
  return rep;
}

CheckResult braid_square_at_one(const Satake& s, const Battery& bat) {
  const RootDatum& rd = s.diagram().rd;
  const std::vector<long>& w = s.w_black();
  for (std::size_t k = 0; k < bat.modules.size(); ++k) {
    SpecModule m(bat.modules[k]);
    RatMat sq = RatMat::identity(m.dim());
    for (long i : w) sq = sq * sbar(m, i);
    sq = sq * sq;
    for (long i = 0; i < rd.rank_nodes(); ++i) {
      const Rat sign(s.rho_pair(i) % 2 == 0 ? 1 : -1);
      const RatMat e = m.ed(i), f = m.fd(i);
      if (!(sq * e == e.scaled(sign) * sq))
        return CheckResult::fail("braid square misses the parity character on E_" +
                                 std::to_string(i) + " over " + bat.labels[k]);
      if (!(sq * f == f.scaled(sign) * sq))
        return CheckResult::fail("braid square misses the parity character on F_" +
                                 std::to_string(i) + " over " + bat.labels[k]);
    }
  }
  return {};
}

}  // namespace qsp
