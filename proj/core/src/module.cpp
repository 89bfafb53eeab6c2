#include "qsp/module.hpp"

#include "qsp/qcomb.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace qsp {

Wt wt_add(const Wt& a, const Wt& b) {
  Wt r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

Wt wt_sub(const Wt& a, const Wt& b) {
  Wt r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

Wt wt_neg(const Wt& a) {
  Wt r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
  return r;
}

Wt wt_shift(const Wt& w, const IntMat& m, long j, long n) {
  Wt r = w;
  for (long k = 0; k < m.rows(); ++k) r[k] += n * m.at(k, j);
  return r;
}

static long to_long(const Int& v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("weight coordinate out of range");
  return v.get_si();
}

// ---------------------------------------------------------------- WModule

WModule::WModule(RootDatum rd)
    : rd_(std::move(rd)), eop_(rd_.rank_nodes()), fop_(rd_.rank_nodes()) {}

long WModule::dim(const Wt& w) const {
  auto it = dims_.find(w);
  return it == dims_.end() ? 0 : it->second;
}

long WModule::total_dim() const {
  long t = 0;
  for (const auto& [w, d] : dims_) t += d;
  return t;
}

void WModule::add_space(const Wt& w, long d) {
  if (static_cast<long>(w.size()) != rd_.rank_lattice())
    throw std::invalid_argument("WModule: weight has wrong length");
  if (d <= 0) throw std::invalid_argument("WModule: nonpositive dimension");
  if (!dims_.emplace(w, d).second)
    throw std::invalid_argument("WModule: duplicate weight space");
}

void WModule::set_eblock(long i, const Wt& src, PolyMat m) {
  Wt dst = wt_shift(src, rd_.roots, i, 1);
  if (m.rows() != dim(dst) || m.cols() != dim(src))
    throw std::invalid_argument("WModule: E block shape mismatch");
  eop_[i][src] = std::move(m);
  powcache_.clear();
}

void WModule::set_fblock(long i, const Wt& src, PolyMat m) {
  Wt dst = wt_shift(src, rd_.roots, i, -1);
  if (m.rows() != dim(dst) || m.cols() != dim(src))
    throw std::invalid_argument("WModule: F block shape mismatch");
  fop_[i][src] = std::move(m);
  powcache_.clear();
}

void WModule::perturb_fblock(long i, const Wt& src, long r, long c,
                             const RatFunc& v) {
  auto it = fop_[i].find(src);
  if (it == fop_[i].end())
    throw std::invalid_argument("WModule: no such F block");
  PolyMat& b = it->second;
  RatFunc e = b.entry(r, c) + v;
  Laurent g = Laurent::gcd(b.den, e.den());
  Laurent scale = e.den().exact_div(g);
  if (scale != Laurent(1)) {
    for (long a = 0; a < b.rows(); ++a)
      for (long bb = 0; bb < b.cols(); ++bb) b.num.at(a, bb) *= scale;
    b.den *= scale;
  }
  b.num.at(r, c) = e.num() * b.den.exact_div(e.den());
  powcache_.clear();
}

const PolyMat* WModule::epow(long i, long n, const Wt& src) const {
  return power_block(true, i, n, src);
}

const PolyMat* WModule::fpow(long i, long n, const Wt& src) const {
  return power_block(false, i, n, src);
}

const PolyMat* WModule::power_block(bool e, long i, long n,
                                    const Wt& src) const {
  long ds = dim(src);
  if (ds == 0) return nullptr;
  Wt dst = wt_shift(src, rd_.roots, i, e ? n : -n);
  long dd = dim(dst);
  if (dd == 0) return nullptr;
  auto key = std::make_tuple(e, i, n, src);
  auto it = powcache_.find(key);
  if (it != powcache_.end()) return &it->second;

  PolyMat blk;
  if (n == 1) {
    const auto& op = e ? eop_[i] : fop_[i];
    auto bit = op.find(src);
    blk = bit != op.end() ? bit->second : PolyMat(dd, ds);
  } else {
    blk = PolyMat::identity(ds);
    Wt cur = src;
    for (long k = 0; k < n && !blk.num.is_zero(); ++k) {
      const PolyMat* step = power_block(e, i, 1, cur);
      if (!step) {  // an intermediate space is missing: the composite is zero
        blk = PolyMat(dd, ds);
        break;
      }
      blk = (*step) * blk;
      cur = wt_shift(cur, rd_.roots, i, e ? 1 : -1);
    }
    if (blk.rows() != dd) blk = PolyMat(dd, ds);
    blk.den *= qfact(n, rd_.cartan.eps(i));
    blk.reduce();
  }
  return &powcache_.emplace(std::move(key), std::move(blk)).first->second;
}

// ------------------------------------------------------------------- act

static void act_term(const WModule& m, const Term& t, const Wt& src,
                     BlockMap& out) {
  if (m.dim(src) == 0) return;
  Wt cur = src;
  PolyMat mat = PolyMat::identity(m.dim(src));
  for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
    switch (it->kind) {
      case Sym::P:
        if (cur != it->wt) return;
        break;
      case Sym::K:
        mat.scale(RatFunc(Laurent::q(to_long(m.rd().pair(it->wt, cur)))));
        break;
      case Sym::E: {
        const PolyMat* b = m.epow(it->node, it->pow, cur);
        if (!b) return;
        mat = (*b) * mat;
        cur = wt_shift(cur, m.rd().roots, it->node, it->pow);
        break;
      }
      case Sym::F: {
        const PolyMat* b = m.fpow(it->node, it->pow, cur);
        if (!b) return;
        mat = (*b) * mat;
        cur = wt_shift(cur, m.rd().roots, it->node, -it->pow);
        break;
      }
    }
    if (mat.num.is_zero()) return;
  }
  mat.scale(t.coeff);
  mat.reduce();
  PolyMat& slot = out[src][cur];
  if (slot.rows() == 0 && slot.cols() == 0)
    slot = std::move(mat);
  else
    slot += mat;
}

static void prune_zero(BlockMap& bm) {
  for (auto it = bm.begin(); it != bm.end();) {
    auto& inner = it->second;
    for (auto jt = inner.begin(); jt != inner.end();)
      jt = jt->second.num.is_zero() ? inner.erase(jt) : std::next(jt);
    it = inner.empty() ? bm.erase(it) : std::next(it);
  }
}

BlockMap act(const WModule& m, const Element& x) {
  BlockMap out;
  for (const Term& t : x.terms()) {
    if (!t.word.empty() && t.word.back().kind == Sym::P) {
      act_term(m, t, t.word.back().wt, out);
    } else {
      for (const auto& [w, d] : m.dims()) act_term(m, t, w, out);
    }
  }
  prune_zero(out);
  return out;
}

std::map<Wt, PolyMat> act_from(const WModule& m, const Element& x,
                               const Wt& src) {
  BlockMap out;
  for (const Term& t : x.terms()) act_term(m, t, src, out);
  prune_zero(out);
  auto it = out.find(src);
  return it == out.end() ? std::map<Wt, PolyMat>{} : std::move(it->second);
}

bool blockmap_is_zero(const BlockMap& a) {
  for (const auto& [s, inner] : a)
    for (const auto& [d, blk] : inner)
      if (!blk.num.is_zero()) return false;
  return true;
}

static const PolyMat* find_block(const BlockMap& bm, const Wt& s, const Wt& d) {
  auto it = bm.find(s);
  if (it == bm.end()) return nullptr;
  auto jt = it->second.find(d);
  return jt == it->second.end() ? nullptr : &jt->second;
}

bool blockmap_equal(const BlockMap& a, const BlockMap& b) {
  for (const auto& [s, inner] : a)
    for (const auto& [d, blk] : inner) {
      const PolyMat* o = find_block(b, s, d);
      if (o ? !blk.equals(*o) : !blk.num.is_zero()) return false;
    }
  for (const auto& [s, inner] : b)
    for (const auto& [d, blk] : inner)
      if (!find_block(a, s, d) && !blk.num.is_zero()) return false;
  return true;
}

BlockMap scalar_blockmap(const WModule& m,
                         const std::function<RatFunc(const Wt&)>& f) {
  BlockMap out;
  for (const auto& [w, d] : m.dims()) {
    RatFunc c = f(w);
    if (c.is_zero()) continue;
    PolyMat p = PolyMat::identity(d);
    p.scale(c);
    p.reduce();
    out[w][w] = std::move(p);
  }
  return out;
}

// --------------------------------------------------------- simple_module

namespace {
struct WtData {
  long dim = 0;
  Matrix<RatFunc> gram;
  // node k -> coordinates of E_k b_p in the basis one level up (at w+alpha_k)
  std::map<long, Matrix<RatFunc>> ecoords;
  // node j -> coordinates of F_j b'_p in the basis here (source at w+alpha_j)
  std::map<long, Matrix<RatFunc>> fcoords;
};
}  // namespace

WModule simple_module(const RootDatum& rd, const Wt& lambda, long dim_bound) {
  const long n = rd.rank_nodes();
  if (static_cast<long>(lambda.size()) != rd.rank_lattice())
    throw std::invalid_argument("simple_module: weight has wrong length");
  for (long i = 0; i < n; ++i)
    if (rd.pair_coroot(i, lambda) < 0)
      throw std::invalid_argument("simple_module: weight is not dominant");

  std::map<Wt, WtData> data;
  data[lambda].dim = 1;
  data[lambda].gram = Matrix<RatFunc>(1, 1);
  data[lambda].gram.at(0, 0) = RatFunc(1);

  std::vector<Wt> prev = {lambda};
  long total = 1;
  while (!prev.empty()) {
    std::set<Wt> layer;
    for (const Wt& w : prev)
      for (long j = 0; j < n; ++j) layer.insert(wt_shift(w, rd.roots, j, -1));
    std::vector<Wt> next;
    for (const Wt& mu : layer) {
      // candidate vectors F_j b', node-major over the previous level
      std::vector<Wt> up(n);
      std::vector<std::pair<long, long>> cand;  // (node, index above)
      std::vector<long> base(n, -1);            // first candidate per node
      for (long j = 0; j < n; ++j) {
        up[j] = wt_shift(mu, rd.roots, j, 1);
        auto it = data.find(up[j]);
        if (it == data.end()) continue;
        base[j] = static_cast<long>(cand.size());
        for (long p = 0; p < it->second.dim; ++p) cand.push_back({j, p});
      }
      if (cand.empty()) continue;
      const long nc = static_cast<long>(cand.size());

      // pairwise contravariant-form values of the candidates
      Matrix<RatFunc> H(nc, nc);
      for (long a = 0; a < nc; ++a) {
        const auto [i, p] = cand[a];
        const WtData& di = data.at(up[i]);
        for (long b = 0; b < nc; ++b) {
          const auto [j, pp] = cand[b];
          const WtData& dj = data.at(up[j]);
          RatFunc v;
          auto eit = dj.ecoords.find(i);
          if (eit != dj.ecoords.end()) {
            auto fit = di.fcoords.find(j);
            if (fit != di.fcoords.end()) {
              // <b_p, F_j E_i b'_pp> through the basis at mu + alpha_i
              std::vector<RatFunc> c = fit->second * eit->second.column(pp);
              v = (di.gram * c)[p];
            }
          }
          if (i == j) {
            long h = to_long(rd.pair_coroot(i, up[i]));
            v += RatFunc(qint(h, rd.cartan.eps(i))) * di.gram.at(p, pp);
          }
          H.at(a, b) = v;
        }
      }

      /* Divided-power candidates F_j^(m) b, largest power first, expanded
       * over the single-step list through
       *   F_j^(m) b = (1/[m]_j!) F_j (F_j^{m-1} b),
       * with F_j^{m-1} b expressed in the basis at mu + alpha_j.  Selecting
       * from this list keeps the basis inside the divided-power integral
       * form (for rank one it is exactly the F^(l) v basis), so divided
       * powers stay integral after specializing q.
       */
      std::vector<std::vector<RatFunc>> dcand;
      long mmax = 0;
      std::vector<long> mtop(n, 0);
      for (long j = 0; j < n; ++j) {
        if (base[j] < 0) continue;
        long m = 1;
        while (data.count(wt_shift(mu, rd.roots, j, m + 1))) ++m;
        mtop[j] = m;
        mmax = std::max(mmax, m);
      }
      for (long m = mmax; m >= 1; --m) {
        for (long j = 0; j < n; ++j) {
          if (base[j] < 0 || mtop[j] < m) continue;
          const WtData& src = data.at(wt_shift(mu, rd.roots, j, m));
          Matrix<RatFunc> U = Matrix<RatFunc>::identity(src.dim);
          for (long t = m - 1; t >= 1; --t)
            U = data.at(wt_shift(mu, rd.roots, j, t)).fcoords.at(j) * U;
          RatFunc c(Laurent(1), qfact(m, rd.cartan.eps(j)));
          for (long p = 0; p < src.dim; ++p) {
            std::vector<RatFunc> w(nc);
            for (long s = 0; s < U.rows(); ++s) w[base[j] + s] = c * U.at(s, p);
            dcand.push_back(std::move(w));
          }
        }
      }
      const long ndc = static_cast<long>(dcand.size());
      Matrix<RatFunc> W(nc, ndc);
      for (long cc = 0; cc < ndc; ++cc)
        for (long r = 0; r < nc; ++r) W.at(r, cc) = dcand[cc][r];
      Matrix<RatFunc> HW = H * W;  // <single-step cand, divided cand>

      std::vector<long> sel = HW.independent_columns();
      if (sel.empty()) continue;
      const long d = static_cast<long>(sel.size());
      total += d;
      if (total > dim_bound)
        throw std::length_error("simple_module: dimension bound exceeded");

      Matrix<RatFunc> Wsel(nc, d), HWsel(nc, d);
      for (long a = 0; a < d; ++a)
        for (long r = 0; r < nc; ++r) {
          Wsel.at(r, a) = W.at(r, sel[a]);
          HWsel.at(r, a) = HW.at(r, sel[a]);
        }

      WtData nd;
      nd.dim = d;
      nd.gram = Wsel.transpose() * HWsel;

      // coordinates of every single-step candidate in the selected basis
      auto X = Matrix<RatFunc>::solve(nd.gram, HWsel.transpose());
      if (!X)
        throw std::logic_error("simple_module: contravariant form degenerate");

      for (long j = 0; j < n; ++j) {
        if (base[j] < 0) continue;
        long dj = data.at(up[j]).dim;
        Matrix<RatFunc> Fj(d, dj);
        for (long p = 0; p < dj; ++p)
          for (long a = 0; a < d; ++a) Fj.at(a, p) = X->at(a, base[j] + p);
        nd.fcoords[j] = std::move(Fj);
      }

      // E_k of each single-step candidate, one level up, combined through
      // the divided expansion columns of the selected vectors
      for (long k = 0; k < n; ++k) {
        if (base[k] < 0) continue;  // E_k lands in a missing space
        const WtData& dk = data.at(up[k]);
        Matrix<RatFunc> Ek(dk.dim, nc);
        for (long cc = 0; cc < nc; ++cc) {
          const auto [j, pp] = cand[cc];
          const WtData& dj = data.at(up[j]);
          std::vector<RatFunc> col(dk.dim);
          auto eit = dj.ecoords.find(k);
          if (eit != dj.ecoords.end()) {
            auto fit = dk.fcoords.find(j);
            if (fit != dk.fcoords.end()) {
              std::vector<RatFunc> c = fit->second * eit->second.column(pp);
              for (long r = 0; r < dk.dim; ++r) col[r] = c[r];
            }
          }
          if (k == j) {
            long h = to_long(rd.pair_coroot(k, up[j]));
            col[pp] += RatFunc(qint(h, rd.cartan.eps(k)));
          }
          Ek.set_column(cc, col);
        }
        nd.ecoords[k] = Ek * Wsel;
      }

      data[mu] = std::move(nd);
      next.push_back(mu);
    }
    prev = std::move(next);
  }

  WModule M(rd);
  for (const auto& [w, wd] : data) M.add_space(w, wd.dim);
  for (const auto& [w, wd] : data) {
    for (const auto& [k, Ek] : wd.ecoords)
      M.set_eblock(k, w, PolyMat::from_rat(Ek));
    for (const auto& [j, Fj] : wd.fcoords)
      M.set_fblock(j, wt_shift(w, rd.roots, j, 1), PolyMat::from_rat(Fj));
  }
  return M;
}

// --------------------------------------------------------- tensor, twist

static bool same_datum(const RootDatum& a, const RootDatum& b) {
  return a.cartan == b.cartan && a.pairing == b.pairing &&
         a.roots == b.roots && a.coroots == b.coroots;
}

WModule tensor_module(const WModule& a, const WModule& b,
                      const DeltaTable& dt) {
  if (!same_datum(a.rd(), b.rd()))
    throw std::invalid_argument("tensor_module: root datum mismatch");
  const RootDatum& rd = a.rd();
  const long n = rd.rank_nodes();

  struct Seg {
    Wt wa, wb;
    long off, da, db;
  };
  std::map<Wt, long> dims;
  std::map<Wt, std::vector<Seg>> segs;
  std::map<std::pair<Wt, Wt>, long> off;
  for (const auto& [wa, da] : a.dims())
    for (const auto& [wb, db] : b.dims()) {
      Wt w = wt_add(wa, wb);
      long& sz = dims[w];
      off[{wa, wb}] = sz;
      segs[w].push_back({wa, wb, sz, da, db});
      sz += da * db;
    }

  WModule t(rd);
  for (const auto& [w, d] : dims) t.add_space(w, d);

  for (long i = 0; i < n; ++i) {
    const long eps = rd.cartan.eps(i);
    for (const auto& [w, list] : segs) {
      // E_i
      if (dims.count(wt_shift(w, rd.roots, i, 1))) {
        Matrix<RatFunc> blk(dims.at(wt_shift(w, rd.roots, i, 1)), dims.at(w));
        for (const Seg& s : list) {
          if (const PolyMat* ea = a.epow(i, 1, s.wa)) {
            long o2 = off.at({wt_shift(s.wa, rd.roots, i, 1), s.wb});
            RatFunc kap(Laurent::q(
                eps * dt.e_second * to_long(rd.pair_coroot(i, s.wb))));
            for (long pa2 = 0; pa2 < ea->rows(); ++pa2)
              for (long pa = 0; pa < s.da; ++pa) {
                RatFunc v = kap * ea->entry(pa2, pa);
                if (v.is_zero()) continue;
                for (long pb = 0; pb < s.db; ++pb)
                  blk.at(o2 + pa2 * s.db + pb, s.off + pa * s.db + pb) += v;
              }
          }
          if (const PolyMat* eb = b.epow(i, 1, s.wb)) {
            long o2 = off.at({s.wa, wt_shift(s.wb, rd.roots, i, 1)});
            long db2 = eb->rows();
            RatFunc kap(Laurent::q(
                eps * dt.e_first * to_long(rd.pair_coroot(i, s.wa))));
            for (long pb2 = 0; pb2 < db2; ++pb2)
              for (long pb = 0; pb < s.db; ++pb) {
                RatFunc v = kap * eb->entry(pb2, pb);
                if (v.is_zero()) continue;
                for (long pa = 0; pa < s.da; ++pa)
                  blk.at(o2 + pa * db2 + pb2, s.off + pa * s.db + pb) += v;
              }
          }
        }
        t.set_eblock(i, w, PolyMat::from_rat(blk));
      }
      // F_i
      if (dims.count(wt_shift(w, rd.roots, i, -1))) {
        Matrix<RatFunc> blk(dims.at(wt_shift(w, rd.roots, i, -1)), dims.at(w));
        for (const Seg& s : list) {
          if (const PolyMat* fa = a.fpow(i, 1, s.wa)) {
            long o2 = off.at({wt_shift(s.wa, rd.roots, i, -1), s.wb});
            RatFunc kap(Laurent::q(
                eps * dt.f_second * to_long(rd.pair_coroot(i, s.wb))));
            for (long pa2 = 0; pa2 < fa->rows(); ++pa2)
              for (long pa = 0; pa < s.da; ++pa) {
                RatFunc v = kap * fa->entry(pa2, pa);
                if (v.is_zero()) continue;
                for (long pb = 0; pb < s.db; ++pb)
                  blk.at(o2 + pa2 * s.db + pb, s.off + pa * s.db + pb) += v;
              }
          }
          if (const PolyMat* fb = b.fpow(i, 1, s.wb)) {
            long o2 = off.at({s.wa, wt_shift(s.wb, rd.roots, i, -1)});
            long db2 = fb->rows();
            RatFunc kap(Laurent::q(
                eps * dt.f_first * to_long(rd.pair_coroot(i, s.wa))));
            for (long pb2 = 0; pb2 < db2; ++pb2)
              for (long pb = 0; pb < s.db; ++pb) {
                RatFunc v = kap * fb->entry(pb2, pb);
                if (v.is_zero()) continue;
                for (long pa = 0; pa < s.da; ++pa)
                  blk.at(o2 + pa * db2 + pb2, s.off + pa * s.db + pb) += v;
              }
          }
        }
        t.set_fblock(i, w, PolyMat::from_rat(blk));
      }
    }
  }
  return t;
}

WModule omega_module(const WModule& m) {
  WModule t(m.rd());
  for (const auto& [w, d] : m.dims()) t.add_space(wt_neg(w), d);
  for (long i = 0; i < m.rd().rank_nodes(); ++i) {
    for (const auto& [src, blk] : m.fblocks(i))
      t.set_eblock(i, wt_neg(src), blk);
    for (const auto& [src, blk] : m.eblocks(i))
      t.set_fblock(i, wt_neg(src), blk);
  }
  return t;
}

// ---------------------------------------------------------------- battery

std::optional<Wt> weight_with_pairings(const RootDatum& rd,
                                       const std::vector<long>& c) {
  const long n = rd.rank_nodes(), d = rd.rank_lattice();
  if (static_cast<long>(c.size()) != n)
    throw std::invalid_argument("weight_with_pairings: wrong length");
  // rows of A are the coroot pairings: (A lam)_i = <alpha_i^vee, lam>
  IntMat A(n, d);
  for (long i = 0; i < n; ++i) {
    Wt cr = rd.coroot(i);
    for (long k = 0; k < d; ++k) {
      Int v = 0;
      for (long l = 0; l < d; ++l) v += cr[l] * rd.pairing.at(l, k);
      A.at(i, k) = v;
    }
  }
  Smith sm = smith_form(A);
  std::vector<Int> uc(n, 0);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) uc[i] += sm.U.at(i, j) * Int(c[j]);
  std::vector<Int> z(d, 0);
  for (long k = 0; k < n; ++k) {
    Int s = k < d ? sm.S.at(k, k) : Int(0);
    if (s == 0) {
      if (uc[k] != 0) return std::nullopt;
    } else {
      if (uc[k] % s != 0) return std::nullopt;
      z[k] = uc[k] / s;
    }
  }
  Wt lam(d, 0);
  for (long k = 0; k < d; ++k)
    for (long l = 0; l < d; ++l) lam[k] += sm.V.at(k, l) * z[l];
  return lam;
}

std::vector<Wt> pairing_window(const RootDatum& rd, long bound) {
  const long n = rd.rank_nodes();
  std::vector<Wt> out;
  std::vector<long> c(n, -bound);
  for (;;) {
    if (auto lam = weight_with_pairings(rd, c)) out.push_back(*lam);
    long k = 0;
    while (k < n && ++c[k] > bound) c[k++] = -bound;
    if (k == n) break;
  }
  return out;
}

static std::string datum_key(const RootDatum& rd) {
  std::ostringstream os;
  for (const IntMat* m :
       {&rd.cartan.form(), &rd.pairing, &rd.roots, &rd.coroots}) {
    os << m->rows() << 'x' << m->cols() << ':';
    for (long i = 0; i < m->rows(); ++i)
      for (long j = 0; j < m->cols(); ++j) os << m->at(i, j) << ',';
  }
  return os.str();
}

const Battery& module_battery(const RootDatum& rd, long depth,
                              long dim_bound) {
  static std::map<std::tuple<std::string, long, long>, Battery> cache;
  auto key = std::make_tuple(datum_key(rd), depth, dim_bound);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  Battery bat;
  const long n = rd.rank_nodes();
  std::vector<long> c(n, 0);
  for (;;) {
    if (auto lam = weight_with_pairings(rd, c)) {
      try {
        WModule M = simple_module(rd, *lam, dim_bound);
        std::string lab = "L(";
        for (long i = 0; i < n; ++i)
          lab += (i ? "," : "") + std::to_string(c[i]);
        lab += ")";
        bat.labels.push_back(lab);
        bat.modules.push_back(std::move(M));
      } catch (const std::length_error&) {
        // over the bound: leave it out
      }
    }
    long k = 0;
    while (k < n && ++c[k] > depth) c[k++] = 0;
    if (k == n) break;
  }
  const std::size_t ns = bat.modules.size();
  for (std::size_t x = 0; x < ns; ++x)
    for (std::size_t y = 0; y < ns; ++y) {
      if (bat.modules[x].total_dim() * bat.modules[y].total_dim() > dim_bound)
        continue;
      bat.labels.push_back("w" + bat.labels[x] + "(x)" + bat.labels[y]);
      bat.modules.push_back(
          tensor_module(omega_module(bat.modules[x]), bat.modules[y]));
    }
  return cache.emplace(std::move(key), std::move(bat)).first->second;
}

}  // namespace qsp
