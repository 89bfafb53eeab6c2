#include "qsp/grouplab.hpp"

#include "qsp/theta.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qsp {

long fp_inv(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::domain_error("fp_inv: not a unit");
  long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return t < 0 ? t + p : t;
}

Rat fp_reduce(const Rat& x, long p) {
  Int num = x.get_num() % p;
  if (num < 0) num += p;
  Int den = x.get_den() % p;
  if (den == 0) throw std::domain_error("fp_reduce: denominator divisible by p");
  return Rat(num.get_si() * fp_inv(den.get_si(), p) % p);
}

RatMat fp_reduce_mat(RatMat m, long p) {
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c) m.at(r, c) = fp_reduce(m.at(r, c), p);
  return m;
}

namespace {

Rat rat_pow(const Rat& v, long e) {
  Rat out(1), base = v;
  bool neg = e < 0;
  if (neg) e = -e;
  for (; e > 0; --e) out *= base;
  return neg ? Rat(1) / out : out;
}

// flat Kronecker index of the left/right factor pair -> the tensor
// module's own weight-sorted index, replaying the segment layout
std::vector<long> kron_perm(const SpecModule& l, const SpecModule& r,
                            const SpecModule& t) {
  std::map<Wt, long> fill;
  const long dr = r.dim();
  std::vector<long> perm(l.dim() * dr, -1);
  for (const auto& [wa, da] : l.dims())
    for (const auto& [wb, db] : r.dims()) {
      Wt w = wt_add(wa, wb);
      long seg = fill[w];
      fill[w] += da * db;
      const long offa = l.offsets().at(wa), offb = r.offsets().at(wb);
      const long offt = t.offsets().at(w);
      for (long pa = 0; pa < da; ++pa)
        for (long pb = 0; pb < db; ++pb)
          perm[(offa + pa) * dr + (offb + pb)] = offt + seg + pa * db + pb;
    }
  return perm;
}

}  // namespace

GroupBattery group_battery(const RootDatum& rd) {
  const Battery& bat = module_battery(rd);
  std::vector<std::pair<long, std::size_t>> order;
  for (std::size_t k = 0; k < bat.modules.size(); ++k) {
    if (bat.labels[k].find("(x)") != std::string::npos) continue;
    if (bat.modules[k].total_dim() <= 1) continue;
    order.emplace_back(bat.modules[k].total_dim(), k);
  }
  std::sort(order.begin(), order.end());
  if (order.empty())
    throw std::invalid_argument("group_battery: no nontrivial simple module");

  GroupBattery gb{rd, {}, {}, {}};
  const std::size_t take = std::min<std::size_t>(order.size(), 2);
  for (std::size_t j = 0; j < take; ++j) {
    const std::size_t k = order[j].second;
    gb.labels.push_back(bat.labels[k]);
    gb.mods.emplace_back(bat.modules[k]);
    gb.slots.push_back({});
  }
  const WModule& v = bat.modules[order[0].second];
  gb.labels.push_back(gb.labels[0] + "(x)" + gb.labels[0]);
  gb.mods.emplace_back(tensor_module(v, v));
  GroupBattery::Slot slot;
  slot.left = 0;
  slot.right = 0;
  slot.perm = kron_perm(gb.mods[0], gb.mods[0], gb.mods.back());
  gb.slots.push_back(std::move(slot));
  return gb;
}

GroupPoint gp_identity(const GroupBattery& gb, long p) {
  GroupPoint g{p, {}};
  for (const SpecModule& m : gb.mods)
    g.mats.push_back(RatMat::identity(m.dim()));
  return g;
}

GroupPoint gp_mul(const GroupPoint& a, const GroupPoint& b) {
  if (a.p != b.p || a.mats.size() != b.mats.size())
    throw std::invalid_argument("gp_mul: points live over different data");
  GroupPoint out{a.p, {}};
  for (std::size_t k = 0; k < a.mats.size(); ++k) {
    RatMat m = a.mats[k] * b.mats[k];
    out.mats.push_back(a.p ? fp_reduce_mat(std::move(m), a.p) : std::move(m));
  }
  return out;
}

GroupPoint gp_inverse(const GroupPoint& g) {
  GroupPoint out{g.p, {}};
  for (const RatMat& m : g.mats) {
    auto inv = m.inverse();
    if (!inv) throw std::invalid_argument("gp_inverse: singular realization");
    out.mats.push_back(g.p ? fp_reduce_mat(std::move(*inv), g.p)
                           : std::move(*inv));
  }
  return out;
}

bool tensor_compatible(const GroupBattery& gb, const GroupPoint& g) {
  for (std::size_t k = 0; k < gb.slots.size(); ++k) {
    const GroupBattery::Slot& sl = gb.slots[k];
    if (sl.left < 0) continue;
    const RatMat& A = g.mats[sl.left];
    const RatMat& B = g.mats[sl.right];
    const RatMat& T = g.mats[k];
    const long da = A.rows(), db = B.rows();
    for (long ra = 0; ra < da; ++ra)
      for (long rb = 0; rb < db; ++rb)
        for (long ca = 0; ca < da; ++ca)
          for (long cb = 0; cb < db; ++cb) {
            Rat v = A.at(ra, ca) * B.at(rb, cb);
            if (g.p) v = fp_reduce(v, g.p);
            if (T.at(sl.perm[ra * db + rb], sl.perm[ca * db + cb]) != v)
              return false;
          }
  }
  return true;
}

namespace {

void require_unit(const Rat& v, long p) {
  if (v == 0) throw std::invalid_argument("torus_point: values must be units");
  if (p) {
    Rat r;
    try {
      r = fp_reduce(v, p);
    } catch (const std::domain_error&) {
      throw std::invalid_argument("torus_point: values must be units mod p");
    }
    if (r == 0)
      throw std::invalid_argument("torus_point: values must be units mod p");
  }
}

}  // namespace

GroupPoint torus_point(const GroupBattery& gb,
                       const std::vector<Rat>& basis_units, long p) {
  const long d = gb.rd.rank_lattice();
  if (static_cast<long>(basis_units.size()) != d)
    throw std::invalid_argument("torus_point: one unit per basis vector");
  for (const Rat& v : basis_units) require_unit(v, p);

  GroupPoint g{p, {}};
  for (const SpecModule& m : gb.mods) {
    RatMat mat(m.dim(), m.dim());
    for (const auto& [w, dim] : m.dims()) {
      Rat val(1);
      for (long k = 0; k < d; ++k)
        val *= rat_pow(basis_units[k], w[k].get_si());
      if (p) val = fp_reduce(val, p);
      const long off = m.offsets().at(w);
      for (long j = 0; j < dim; ++j) mat.at(off + j, off + j) = val;
    }
    g.mats.push_back(std::move(mat));
  }
  return g;
}

GroupPoint torus_point(const GroupBattery& gb,
                       const std::vector<std::pair<Wt, Rat>>& values, long p) {
  const long d = gb.rd.rank_lattice();
  const long m = static_cast<long>(values.size());
  if (m == 0) throw std::invalid_argument("torus_point: empty generating set");
  IntMat g(d, m);
  for (long j = 0; j < m; ++j) {
    if (static_cast<long>(values[j].first.size()) != d)
      throw std::invalid_argument("torus_point: character length mismatch");
    require_unit(values[j].second, p);
    for (long i = 0; i < d; ++i) g.at(i, j) = values[j].first[i];
  }
  const Smith sm = smith_form(g);  // U g V = S

  // a product of the given values along an exponent vector
  auto value_power = [&](const std::vector<Int>& e) {
    Rat out(1);
    for (long j = 0; j < m; ++j)
      out *= rat_pow(values[j].second, e[j].get_si());
    return p ? fp_reduce(out, p) : out;
  };

  // multiplicativity on a basis of the relation lattice of the generators
  for (long j = 0; j < m; ++j) {
    const Int sj = j < d ? sm.S.at(j, j) : Int(0);
    if (sj != 0) continue;
    if (value_power(sm.V.column(j)) != Rat(1))
      throw std::invalid_argument("torus_point: map is not multiplicative");
  }

  // express each basis vector through the generators: g c = e_k
  std::vector<Rat> basis(d);
  for (long k = 0; k < d; ++k) {
    std::vector<Int> y(m, 0);
    for (long i = 0; i < d; ++i) {
      const Int rhs = sm.U.at(i, k);
      const Int si = i < m ? sm.S.at(i, i) : Int(0);
      if (si == 0) {
        if (rhs != 0)
          throw std::invalid_argument(
              "torus_point: characters do not generate the lattice");
      } else {
        if (rhs % si != 0)
          throw std::invalid_argument(
              "torus_point: characters do not generate the lattice");
        y[i] = rhs / si;
      }
    }
    std::vector<Int> c = sm.V * y;
    basis[k] = value_power(c);
  }
  return torus_point(gb, basis, p);
}

GroupPoint one_param(const GroupBattery& gb, long i, Side side, const Rat& a,
                     long p) {
  GroupPoint g{p, {}};
  for (const SpecModule& m : gb.mods) {
    RatMat mat = side == Side::upper ? m.xpoint(i, a) : m.ypoint(i, a);
    g.mats.push_back(p ? fp_reduce_mat(std::move(mat), p) : std::move(mat));
  }
  return g;
}

GroupPoint sbar_point(const GroupBattery& gb, long i, long p) {
  GroupPoint x1 = one_param(gb, i, Side::upper, Rat(1), p);
  return gp_mul(gp_mul(x1, one_param(gb, i, Side::lower, Rat(-1), p)), x1);
}

namespace {

std::vector<long> vmat_key(const RatMat& m) {
  std::vector<long> key;
  key.reserve(m.rows() * m.cols());
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c) {
      const Rat& v = m.at(r, c);
      if (v.get_den() != 1) return {};  // not a reduced residue matrix
      key.push_back(v.get_num().get_si());
    }
  return key;
}

}  // namespace

void FiniteFieldGroup::build_index() {
  index.clear();
  for (std::size_t k = 0; k < elements.size(); ++k)
    index.emplace(vmat_key(elements[k].mats[0]), static_cast<long>(k));
}

long FiniteFieldGroup::find_vmat(const RatMat& v) const {
  auto it = index.find(vmat_key(v));
  return it == index.end() ? -1 : it->second;
}

long FiniteFieldGroup::find(const GroupPoint& g) const {
  if (g.p != p || g.mats.empty()) return -1;
  const long idx = find_vmat(g.mats[0]);
  if (idx < 0) return -1;
  return elements[idx] == g ? idx : -1;
}

FiniteFieldGroup enumerate_group(const GroupBattery& gb, long p) {
  if (p != 3 && p != 5 && p != 7 && p != 11 && p != 13)
    throw std::invalid_argument("enumerate_group: p must be an odd prime <= 13");
  if (gb.rd.rank_nodes() != 1 || gb.mods.empty() || gb.mods[0].dim() != 2)
    throw std::invalid_argument(
        "enumerate_group: need a rank-one datum acting on a two-dimensional "
        "module");

  std::vector<GroupPoint> xs, ys, hs(p);
  for (long t = 0; t < p; ++t) {
    xs.push_back(one_param(gb, 0, Side::upper, Rat(t), p));
    ys.push_back(one_param(gb, 0, Side::lower, Rat(t), p));
  }
  for (long u = 1; u < p; ++u)
    hs[u] = torus_point(gb, std::vector<Rat>{Rat(u)}, p);
  const GroupPoint sbi = gp_inverse(sbar_point(gb, 0, p));

  FiniteFieldGroup grp;
  grp.p = p;
  for (long m00 = 0; m00 < p; ++m00)
    for (long m01 = 0; m01 < p; ++m01)
      for (long m10 = 0; m10 < p; ++m10)
        for (long m11 = 0; m11 < p; ++m11) {
          if (((m00 * m11 - m01 * m10) % p + p) % p != 1) continue;
          GroupPoint g;
          if (m11 != 0) {
            const long ui = fp_inv(m11, p);
            g = gp_mul(gp_mul(ys[m01 * ui % p], hs[m11]), xs[m10 * ui % p]);
          } else {
            // lower-right corner zero: shift by the braid point first
            const long u = (p - m10) % p;
            g = gp_mul(gp_mul(ys[(p - m00) % p * fp_inv(u, p) % p], hs[u]),
                       sbi);
          }
          RatMat want(2, 2);
          want.at(0, 0) = Rat(m00);
          want.at(0, 1) = Rat(m01);
          want.at(1, 0) = Rat(m10);
          want.at(1, 1) = Rat(m11);
          if (!(g.mats[0] == want))
            throw std::logic_error("enumerate_group: factorization mismatch");
          grp.elements.push_back(std::move(g));
        }
  grp.build_index();
  return grp;
}

namespace {

RatMat unflatten(const RatMat& columns, long col, long d) {
  RatMat m(d, d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) m.at(i, j) = columns.at(i * d + j, col);
  return m;
}

// scale to a primitive integer matrix (stable reduction mod p later)
RatMat primitive(const RatMat& m) {
  Int l(1);
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c) l = lcm(l, Int(m.at(r, c).get_den()));
  Int g(0);
  RatMat out = m;
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c) {
      out.at(r, c) *= Rat(l);
      g = gcd(g, Int(out.at(r, c).get_num()));
    }
  if (g > 1)
    for (long r = 0; r < m.rows(); ++r)
      for (long c = 0; c < m.cols(); ++c) out.at(r, c) /= Rat(g);
  return out;
}

}  // namespace

ThetaRealization theta_realization(const GroupBattery& gb, const UAlgebra& u,
                                   const Satake& s, const IParameters& prm,
                                   long p) {
  const RootDatum& rd = gb.rd;
  const long n = rd.rank_nodes(), dy = rd.rank_lattice();
  std::vector<RatMat> conj(gb.mods.size());

  for (std::size_t k = 0; k < gb.mods.size(); ++k) {
    if (gb.slots[k].left >= 0) continue;
    const SpecModule& m = gb.mods[k];
    const long D = m.dim();

    std::vector<std::pair<RatMat, RatMat>> pairs;  // (action, theta-action)
    for (long i = 0; i < n; ++i) {
      pairs.emplace_back(m.ed(i), m.act_one(theta_A(u, s, prm, u.chevE(i))));
      pairs.emplace_back(m.fd(i), m.act_one(theta_A(u, s, prm, u.chevF(i))));
    }
    for (long j = 0; j < dy; ++j) {
      std::vector<Int> mu(dy, 0);
      mu[j] = 1;
      pairs.emplace_back(m.hmu(mu), m.hmu(s.thetaY().column(j)));
    }

    // solve  B C = C A  for all generator pairs (A, B) simultaneously
    RatMat cons(static_cast<long>(pairs.size()) * D * D, D * D);
    long base = 0;
    for (const auto& [A, B] : pairs) {
      for (long r = 0; r < D; ++r)
        for (long c = 0; c < D; ++c) {
          const long row = base + r * D + c;
          for (long m2 = 0; m2 < D; ++m2) {
            cons.at(row, m2 * D + c) += B.at(r, m2);
            cons.at(row, r * D + m2) -= A.at(m2, c);
          }
        }
      base += D * D;
    }
    const RatMat ker = cons.kernel();
    if (ker.cols() == 0)
      throw std::invalid_argument("theta_realization: no intertwiner on " +
                                  gb.labels[k]);

    // deterministic invertible choice: single kernel columns, then sums
    std::vector<RatMat> cands;
    for (long j = 0; j < ker.cols(); ++j)
      cands.push_back(unflatten(ker, j, D));
    RatMat acc = cands[0];
    for (long j = 1; j < ker.cols(); ++j) {
      acc += cands[j];
      cands.push_back(acc);
    }
    bool found = false;
    for (const RatMat& cand : cands) {
      if (!cand.inverse()) continue;
      conj[k] = primitive(cand);
      found = true;
      break;
    }
    if (!found)
      throw std::invalid_argument(
          "theta_realization: no invertible intertwiner on " + gb.labels[k]);
    for (const auto& [A, B] : pairs)
      if (!(B * conj[k] == conj[k] * A))
        throw std::logic_error("theta_realization: intertwiner check failed");
  }

  // tensor entries inherit the Kronecker product of their factors
  for (std::size_t k = 0; k < gb.mods.size(); ++k) {
    const GroupBattery::Slot& sl = gb.slots[k];
    if (sl.left < 0) continue;
    const RatMat& A = conj[sl.left];
    const RatMat& B = conj[sl.right];
    const long da = A.rows(), db = B.rows();
    RatMat t(da * db, da * db);
    for (long ra = 0; ra < da; ++ra)
      for (long rb = 0; rb < db; ++rb)
        for (long ca = 0; ca < da; ++ca)
          for (long cb = 0; cb < db; ++cb)
            t.at(sl.perm[ra * db + rb], sl.perm[ca * db + cb]) =
                A.at(ra, ca) * B.at(rb, cb);
    conj[k] = std::move(t);
  }

  ThetaRealization th;
  th.p = p;
  for (RatMat& c : conj) {
    auto inv = c.inverse();
    if (!inv) throw std::logic_error("theta_realization: singular intertwiner");
    if (p) {
      c = fp_reduce_mat(std::move(c), p);
      *inv = fp_reduce_mat(std::move(*inv), p);
    }
    th.conj.push_back(std::move(c));
    th.conj_inv.push_back(std::move(*inv));
  }
  return th;
}

GroupPoint theta_on_points(const ThetaRealization& th, const GroupPoint& g) {
  if (g.p != th.p || g.mats.size() != th.conj.size())
    throw std::invalid_argument("theta_on_points: realization mismatch");
  GroupPoint out{g.p, {}};
  for (std::size_t k = 0; k < g.mats.size(); ++k) {
    RatMat m = th.conj[k] * g.mats[k] * th.conj_inv[k];
    out.mats.push_back(g.p ? fp_reduce_mat(std::move(m), g.p) : std::move(m));
  }
  return out;
}

FiniteFieldGroup fixed_points(const FiniteFieldGroup& group,
                              const ThetaRealization& th) {
  FiniteFieldGroup k;
  k.p = group.p;
  for (const GroupPoint& g : group.elements)
    if (theta_on_points(th, g) == g) k.elements.push_back(g);
  k.build_index();
  // a fixed-point set of a group involution is a subgroup; verify anyway
  for (const GroupPoint& a : k.elements) {
    if (k.find(gp_inverse(a)) < 0)
      throw std::logic_error("fixed_points: inverse escaped");
    for (const GroupPoint& b : k.elements)
      if (k.find(gp_mul(a, b)) < 0)
        throw std::logic_error("fixed_points: product escaped");
  }
  return k;
}

long conic_count(long p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("conic_count: p must be odd");
  long count = 0;
  for (long u = 0; u < p; ++u)
    for (long v = 0; v < p; ++v)
      if (((u * u - v * v) % p + p) % p == 1) ++count;
  return count;
}

long conic_count_torus_oracle(long p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("conic_count_torus_oracle: p must be odd");
  const long half = fp_inv(2, p);
  std::set<std::pair<long, long>> pts;
  for (long t = 1; t < p; ++t) {
    const long ti = fp_inv(t, p);
    const long u = (t + ti) % p * half % p;
    const long v = ((t - ti) % p + p) % p * half % p;
    if (((u * u - v * v) % p + p) % p != 1)
      throw std::logic_error("conic_count_torus_oracle: image off the conic");
    pts.emplace(u, v);
  }
  return static_cast<long>(pts.size());
}

long circle_count(long p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("circle_count: p must be odd");
  long count = 0;
  for (long u = 0; u < p; ++u)
    for (long v = 0; v < p; ++v)
      if ((u * u + v * v) % p == 1) ++count;
  return count;
}

Char2Witness char2_nonreduced_witness() {
  const std::pair<long, long> mono[3] = {{1, 0}, {0, 1}, {0, 0}};
  Poly2 diff;
  for (const auto& a : mono)
    for (const auto& b : mono)
      diff[{a.first + b.first, a.second + b.second}] += 1;
  diff[{2, 0}] -= 1;  // subtract u^2 - v^2 - 1
  diff[{0, 2}] += 1;
  diff[{0, 0}] += 1;
  for (auto it = diff.begin(); it != diff.end();)
    it = it->second == 0 ? diff.erase(it) : std::next(it);

  Char2Witness w;
  w.difference = diff;
  w.all_even = true;
  w.zero_mod2 = true;
  w.nonzero_mod3 = false;
  for (const auto& [m, c] : diff) {
    if (c % 2 != 0) w.all_even = false;
    if (c % 2 != 0) w.zero_mod2 = false;
    if (c % 3 != 0) w.nonzero_mod3 = true;
  }
  return w;
}

TKReport tk_check(const GroupBattery& gb, const FiniteFieldGroup& group,
                  const FiniteFieldGroup& fixed, const ThetaRealization& th) {
  TKReport rep;
  rep.p = group.p;
  const long p = group.p;

  std::set<long> gens;
  for (long u = 1; u < p; ++u) {
    GroupPoint h = torus_point(gb, std::vector<Rat>{Rat(u)}, p);
    if (theta_on_points(th, h) == h) {
      ++rep.torus_fixed;
      const long idx = group.find(h);
      if (idx < 0) throw std::logic_error("tk_check: torus point not enumerated");
      gens.insert(idx);
    }
  }

  // the conic one-parameter points [[u,v],[v,u]]; their tangent at t = 1
  // is e + f, the generator of the fixed algebra
  const long half = fp_inv(2, p);
  std::set<long> kline;
  for (long t = 1; t < p; ++t) {
    const long ti = fp_inv(t, p);
    const long uu = (t + ti) % p * half % p;
    const long vv = ((t - ti) % p + p) % p * half % p;
    RatMat vm(2, 2);
    vm.at(0, 0) = vm.at(1, 1) = Rat(uu);
    vm.at(0, 1) = vm.at(1, 0) = Rat(vv);
    const long idx = group.find_vmat(vm);
    if (idx >= 0) kline.insert(idx);
  }
  rep.torus_component = static_cast<long>(kline.size());
  gens.insert(kline.begin(), kline.end());

  // close the generated set under products
  std::set<long> span = gens;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<long> cur(span.begin(), span.end());
    for (long a : cur)
      for (long b : cur) {
        const long idx = group.find(gp_mul(group.elements[a], group.elements[b]));
        if (idx < 0) throw std::logic_error("tk_check: left the group");
        if (span.insert(idx).second) grew = true;
      }
  }

  std::set<long> fixedidx;
  for (const GroupPoint& g : fixed.elements) {
    const long idx = group.find(g);
    if (idx < 0) throw std::logic_error("tk_check: fixed point not enumerated");
    fixedidx.insert(idx);
  }
  rep.factors = span == fixedidx;

  for (std::size_t j = 0; j < group.elements.size(); ++j) {
    if (fixedidx.count(static_cast<long>(j))) continue;
    rep.control_outside = span.count(static_cast<long>(j)) == 0;
    break;
  }

  rep.caveat =
      "the torus-times-identity-component factorization is stated over "
      "algebraically closed fields; matching finite-field counts are "
      "desk-scale evidence, not the statement itself";
  return rep;
}

}  // namespace qsp
