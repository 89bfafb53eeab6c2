#pragma once

#include "qsp/iqg.hpp"
#include "qsp/specialize.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsp {

// inverse mod an odd prime; throws std::domain_error on a multiple of p
long fp_inv(long a, long p);
// rational to the canonical residue in [0, p); denominator must be a unit
Rat fp_reduce(const Rat& x, long p);
RatMat fp_reduce_mat(RatMat m, long p);

/* The fixed faithful battery of the group functor at desk scale: the
 * smallest nontrivial simple modules (at most three) and one plain tensor
 * square V (x) V of the smallest.  Group points carry one matrix per entry;
 * determinant-one matrices on V pin the point and tensor-compatibility on
 * the square is the finitary shadow of group-likeness.  `perm` translates
 * between Kronecker coordinates (flat index of V times flat index of V)
 * and the tensor module's own weight-sorted coordinates.
 */
struct GroupBattery {
  struct Slot {
    long left = -1, right = -1;  // factor indices; -1 -1 for a simple entry
    std::vector<long> perm;      // perm[kron index] = flat index
  };
  RootDatum rd;
  std::vector<std::string> labels;
  std::vector<SpecModule> mods;
  std::vector<Slot> slots;
};

GroupBattery group_battery(const RootDatum& rd);

/* A point of the group scheme over Q (p = 0) or F_p, p an odd prime:
 * one exact invertible matrix per battery entry, entries reduced to the
 * canonical residues when p > 0.
 */
struct GroupPoint {
  long p = 0;
  std::vector<RatMat> mats;

  bool operator==(const GroupPoint& o) const {
    return p == o.p && mats == o.mats;
  }
  bool operator!=(const GroupPoint& o) const { return !(*this == o); }
};

GroupPoint gp_identity(const GroupBattery& gb, long p = 0);
GroupPoint gp_mul(const GroupPoint& a, const GroupPoint& b);
GroupPoint gp_inverse(const GroupPoint& g);

// the group-like condition, finitary: on every tensor entry the realization
// equals the Kronecker product of the factor realizations
bool tensor_compatible(const GroupBattery& gb, const GroupPoint& g);

/* Torus point of a character-lattice homomorphism t: X -> units, acting on
 * each battery entry diagonally by t(weight).  The first form takes the
 * values on the lattice basis; the second takes values on any generating
 * set and checks multiplicativity on a basis of its relation lattice
 * (throws std::invalid_argument on non-units, non-generating sets, or
 * inconsistent values).
 */
GroupPoint torus_point(const GroupBattery& gb,
                       const std::vector<Rat>& basis_units, long p = 0);
GroupPoint torus_point(const GroupBattery& gb,
                       const std::vector<std::pair<Wt, Rat>>& values,
                       long p = 0);

// x_i(a) = sum_n a^n E_i^(n) (upper) resp. the F side (lower); the sums
// truncate at the nilpotency degree, so the points are exact
enum class Side { upper, lower };
GroupPoint one_param(const GroupBattery& gb, long i, Side side, const Rat& a,
                     long p = 0);
// x_i(1) y_i(-1) x_i(1), the braid point
GroupPoint sbar_point(const GroupBattery& gb, long i, long p = 0);

/* All points over F_p of a rank-one simply connected datum: the
 * determinant-one matrices on V, each realized on the whole battery by
 * factoring as y(s) h(u) x(t) (times the braid point when the V matrix has
 * a zero corner).  Throws std::invalid_argument unless the datum is rank
 * one with a two-dimensional V and p is an odd prime <= 13.
 */
struct FiniteFieldGroup {
  long p = 0;
  std::vector<GroupPoint> elements;

  // index of the element with this realization on V, or -1
  long find_vmat(const RatMat& v) const;
  // index of this exact point (V lookup, then full tuple match), or -1
  long find(const GroupPoint& g) const;

  void build_index();
  std::map<std::vector<long>, long> index;
};

FiniteFieldGroup enumerate_group(const GroupBattery& gb, long p);

/* The involution on points: per battery entry an intertwiner matrix C with
 * C (action of x) C^{-1} = action of theta_A(x), solved from the images of
 * e_i, f_i, h_mu (tensor entries inherit the Kronecker product of their
 * factors' intertwiners, which suffices on group-like points).  Conjugation
 * by C then transports any point through theta_A.
 */
struct ThetaRealization {
  long p = 0;
  std::vector<RatMat> conj, conj_inv;
};

ThetaRealization theta_realization(const GroupBattery& gb, const UAlgebra& u,
                                   const Satake& s, const IParameters& prm,
                                   long p = 0);
GroupPoint theta_on_points(const ThetaRealization& th, const GroupPoint& g);

// the subset {g : theta(g) = g}, verified to be a subgroup (closure,
// inverses, identity checked exhaustively; failure would be a logic error)
FiniteFieldGroup fixed_points(const FiniteFieldGroup& group,
                              const ThetaRealization& th);

// #{(u,v) in F_p^2 : u^2 - v^2 = 1}, exhaustively; p odd
long conic_count(long p);
// independent double count through t -> ((t + 1/t)/2, (t - 1/t)/2)
long conic_count_torus_oracle(long p);
// #{(u,v) : u^2 + v^2 = 1}, the fixed conic of the other parameter sign
long circle_count(long p);

/* The exact polynomial witness that the conic ring A[u,v]/(u^2 - v^2 - 1)
 * is non-reduced when 2 = 0: (u+v+1)^2 = u^2 - v^2 - 1 + (even terms), so
 * u+v+1 is a nilpotent of the char-2 fiber.
 */
using Poly2 = std::map<std::pair<long, long>, Int>;  // (deg u, deg v) -> coeff

struct Char2Witness {
  Poly2 difference;  // (u+v+1)^2 - (u^2 - v^2 - 1) over Z
  bool all_even = false;
  bool zero_mod2 = false;
  bool nonzero_mod3 = false;
  bool ok() const { return all_even && zero_mod2 && nonzero_mod3; }
};

Char2Witness char2_nonreduced_witness();

/* Desk-scale shadow of the torus-times-identity-component factorization of
 * the fixed subgroup: the subgroup generated by the theta-fixed torus
 * points and the conic one-parameter points [[u,v],[v,u]] (whose tangent at
 * the identity is the fixed-algebra generator) must equal the fixed-point
 * set, and a non-fixed element must lie outside.  The caveat records that
 * the cited factorization is a statement over algebraically closed fields;
 * these finite counts are evidence, not the statement.
 */
struct TKReport {
  long p = 0;
  long torus_fixed = 0;      // # theta-fixed torus points
  long torus_component = 0;  // # conic one-parameter points found
  bool factors = false;
  bool control_outside = false;
  std::string caveat;
  bool ok() const { return factors && control_outside; }
};

TKReport tk_check(const GroupBattery& gb, const FiniteFieldGroup& group,
                  const FiniteFieldGroup& fixed, const ThetaRealization& th);

}  // namespace qsp
