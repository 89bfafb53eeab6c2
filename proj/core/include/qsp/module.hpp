#pragma once

#include "qsp/algebra.hpp"
#include "qsp/polymat.hpp"

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace qsp {

using Wt = std::vector<Int>;

Wt wt_add(const Wt& a, const Wt& b);
Wt wt_sub(const Wt& a, const Wt& b);
Wt wt_neg(const Wt& a);
// w + n * column j of m
Wt wt_shift(const Wt& w, const IntMat& m, long j, long n);

/* A weight-graded module with chosen bases: finitely many weight spaces and
 * the actions of E_i, F_i as blocks between adjacent spaces.  Torus elements
 * and idempotents act through the grading, so only the Chevalley blocks are
 * stored; divided-power blocks are derived on demand and cached.
 */
class WModule {
 public:
  explicit WModule(RootDatum rd);

  const RootDatum& rd() const { return rd_; }
  const std::map<Wt, long>& dims() const { return dims_; }
  long dim(const Wt& w) const;
  long total_dim() const;

  void add_space(const Wt& w, long dim);
  // E_i : src -> src + alpha_i ; the block shape must match the two spaces
  void set_eblock(long i, const Wt& src, PolyMat m);
  // F_i : src -> src - alpha_i
  void set_fblock(long i, const Wt& src, PolyMat m);

  const std::map<Wt, PolyMat>& eblocks(long i) const { return eop_[i]; }
  const std::map<Wt, PolyMat>& fblocks(long i) const { return fop_[i]; }

  // divided-power block E_i^(n) resp. F_i^(n) out of the given space;
  // nullptr when source or target space is absent (the action is zero)
  const PolyMat* epow(long i, long n, const Wt& src) const;
  const PolyMat* fpow(long i, long n, const Wt& src) const;

  // fault-injection hook for negative controls: add v to one entry of an
  // F block, invalidating whatever relations held before
  void perturb_fblock(long i, const Wt& src, long r, long c, const RatFunc& v);

 private:
  const PolyMat* power_block(bool e, long i, long n, const Wt& src) const;

  RootDatum rd_;
  std::map<Wt, long> dims_;
  std::vector<std::map<Wt, PolyMat>> eop_, fop_;
  mutable std::map<std::tuple<bool, long, long, Wt>, PolyMat> powcache_;
};

/* Action of a normalized word-algebra element: for each source weight the
 * (finitely many) destination blocks.  Missing blocks are zero.
 */
using BlockMap = std::map<Wt, std::map<Wt, PolyMat>>;

BlockMap act(const WModule& m, const Element& x);
// action restricted to vectors of one source weight
std::map<Wt, PolyMat> act_from(const WModule& m, const Element& x, const Wt& src);

bool blockmap_is_zero(const BlockMap& a);
bool blockmap_equal(const BlockMap& a, const BlockMap& b);
// the diagonal map  v |-> f(wt v) * v
BlockMap scalar_blockmap(const WModule& m,
                         const std::function<RatFunc(const Wt&)>& f);

/* Simple highest-weight module L(lambda), lambda dominant, built level by
 * level: candidate vectors F_i b over the previous level, their pairwise
 * contravariant-form values from the recursion
 *
 *   <F_i b, F_j b'> = <b, F_j E_i b'> + delta_ij [<alpha_i^vee, wt b'>]_{q_i} <b, b'>,
 *
 * a maximal independent subset (greedy, deterministic) as the new basis, and
 * the E/F blocks read off from the coordinates.  The basis is chosen among
 * divided-power candidates F_i^(m) b with the largest m first, so it stays
 * inside the divided-power integral form of the module (for rank one this is
 * the classical F^(l) v basis); divided-power matrices then remain integral
 * when q is specialized.  The form is nondegenerate on every weight space of
 * a simple module, so the Gram rank is the true dimension and the radical is
 * quotiented out as we go.  Throws std::length_error if the total dimension
 * exceeds dim_bound.
 */
WModule simple_module(const RootDatum& rd, const Wt& lambda,
                      long dim_bound = 200);

/* Comultiplication table
 *   Delta(E_i) = E_i (x) Kt_i^{e_second} + Kt_i^{e_first} (x) E_i
 *   Delta(F_i) = F_i (x) Kt_i^{f_second} + Kt_i^{f_first} (x) F_i
 * with Kt_i acting on a vector of weight w by q_i^{<alpha_i^vee, w>}.  The
 * defaults are Lusztig's Delta(E_i) = E_i (x) 1 + Kt_i (x) E_i,
 * Delta(F_i) = F_i (x) Kt_i^{-1} + 1 (x) F_i.
 */
struct DeltaTable {
  long e_second = 0, e_first = 1;
  long f_second = -1, f_first = 0;
};

WModule tensor_module(const WModule& a, const WModule& b,
                      const DeltaTable& dt = {});

// twist by omega: weights negated, E and F blocks exchanged, so that
// x acts on the twist as omega(x) acted before
WModule omega_module(const WModule& m);

/* Test battery for one root datum: the simple modules whose coroot pairing
 * vector lies in [0, depth]^n (when such a dominant weight exists in X),
 * plus the tensor products  omega-twist of L(lambda)  (x)  L(mu)  over all
 * ordered pairs whose dimension product stays within dim_bound.  Memoized
 * per (datum, depth, dim_bound).
 */
struct Battery {
  std::vector<std::string> labels;
  std::vector<WModule> modules;
};

const Battery& module_battery(const RootDatum& rd, long depth = 2,
                              long dim_bound = 200);

// dominant weight with prescribed coroot pairings, if one exists in X
std::optional<Wt> weight_with_pairings(const RootDatum& rd,
                                       const std::vector<long>& c);

// one weight per coroot-pairing vector in [-bound, bound]^n, when a lattice
// point exists (unique per vector for semisimple data)
std::vector<Wt> pairing_window(const RootDatum& rd, long bound);

}  // namespace qsp
