#pragma once

#include "qsp/intmat.hpp"

#include <vector>

namespace qsp {

/* Cartan datum: a symmetric bilinear form (i . j) on the node set with
 *   (i . i) in {2, 4, 6},
 *   c_ij = 2 (i . j) / (i . i) a non-positive integer for i != j,
 * positive definite.  eps(i) = (i . i)/2 is the exponent rescaling q -> q^eps
 * attached to node i.
 */
class Cartan {
 public:
  static Cartan from_form(IntMat form);

  long rank() const { return form_.rows(); }
  const IntMat& form() const { return form_; }
  long ii(long i) const { return form_.at(i, i).get_si(); }
  long eps(long i) const { return ii(i) / 2; }
  // Cartan integer c_ij = <alpha_i^vee, alpha_j>
  long c(long i, long j) const;
  IntMat cartan_matrix() const;
  // Cartan datum of the sub-diagram on the given nodes
  Cartan restricted(const std::vector<long>& nodes) const;

  bool operator==(const Cartan& o) const { return form_ == o.form_; }

 private:
  explicit Cartan(IntMat f) : form_(std::move(f)) {}
  IntMat form_;
};

/* Root datum: character lattice X and cocharacter lattice Y, both Z^d in a
 * fixed basis, a perfect pairing <mu, lambda> = mu^T P lambda given by a
 * unimodular integer matrix P, and simple (co)roots as columns satisfying
 * <alpha_i^vee, alpha_j> = c_ij.
 */
struct RootDatum {
  Cartan cartan;
  IntMat pairing;  // d x d, unimodular
  IntMat roots;    // d x n, column j = alpha_j in X
  IntMat coroots;  // d x n, column i = alpha_i^vee in Y

  long rank_nodes() const { return cartan.rank(); }
  long rank_lattice() const { return pairing.rows(); }

  Int pair(const std::vector<Int>& mu, const std::vector<Int>& lambda) const;
  std::vector<Int> root(long j) const { return roots.column(j); }
  std::vector<Int> coroot(long i) const { return coroots.column(i); }
  // <alpha_i^vee, lambda>
  Int pair_coroot(long i, const std::vector<Int>& lambda) const;

  // simple reflection on X: lambda -> lambda - <alpha_i^vee, lambda> alpha_i
  IntMat reflection_X(long i) const;
  // simple reflection on Y: mu -> mu - <mu, alpha_i> alpha_i^vee
  IntMat reflection_Y(long i) const;

  // throws std::invalid_argument with a description on any failure
  void validate() const;

  // X = weight lattice of the simply connected group (pairing = identity,
  // roots expressed in the fundamental-weight basis)
  static RootDatum simply_connected(const Cartan& c);
  // X = root lattice (roots are the standard basis)
  static RootDatum adjoint(const Cartan& c);

  // change of basis: new X coords = tx * old, new Y coords = ty * old;
  // both matrices must be unimodular
  RootDatum transported(const IntMat& tx, const IntMat& ty) const;
};

// All positive roots (resp. coroots) of the root system of a Cartan datum,
// in simple-root coordinates, found by reflection closure from the simples.
std::vector<std::vector<long>> positive_roots(const Cartan& c);
std::vector<std::vector<long>> positive_coroots(const Cartan& c);

// Sum of the positive coroots of the sub-system on `nodes`, as a vector in
// Y; for the full node set this is 2 rho^vee.
std::vector<Int> coroot_sum(const RootDatum& rd, const std::vector<long>& nodes);

}  // namespace qsp
