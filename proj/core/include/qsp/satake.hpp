#pragma once

#include "qsp/rootdata.hpp"
#include "qsp/weyl.hpp"

#include <vector>

namespace qsp {

/* A marked Dynkin diagram on top of a root datum: a set of black nodes and
 * a diagram involution tau.  The data determines an involution theta of the
 * character lattice, theta = -w_black o tau, where w_black is the longest
 * element of the parabolic Weyl subgroup on the black nodes.
 */
struct SatakeDiagram {
  RootDatum rd;
  std::vector<bool> black;
  std::vector<long> tau;
};

struct SatakeOptions {
  // require <2 rho_black^vee, alpha_i> even for every tau-fixed white node;
  // exactly the solvability condition for the rank-one sign constraints
  bool parity_axiom = true;
};

class Satake {
 public:
  // validates the diagram and derives theta; throws std::invalid_argument
  static Satake build(SatakeDiagram d, SatakeOptions opts = {});

  const SatakeDiagram& diagram() const { return d_; }
  const IntMat& thetaX() const { return theta_x_; }
  const IntMat& thetaY() const { return theta_y_; }
  // shortlex reduced word for w_black
  const std::vector<long>& w_black() const { return w_black_; }
  // sum of the positive black coroots, as a vector in Y
  const std::vector<Int>& two_rho_black() const { return two_rho_black_; }
  // <2 rho_black^vee, alpha_j>
  Int rho_pair(long j) const;

  long tau(long i) const { return d_.tau[i]; }
  bool is_black(long i) const { return d_.black[i]; }
  std::vector<long> black_nodes() const;
  std::vector<long> white_nodes() const;

 private:
  explicit Satake(SatakeDiagram d) : d_(std::move(d)) {}

  SatakeDiagram d_;
  IntMat theta_x_, theta_y_;
  std::vector<long> w_black_;
  std::vector<Int> two_rho_black_;
};

/* The lattices of a symmetric pair: X_iota = X / (1 - theta) X, with its
 * 2-elementary torsion, and Y^iota = ker(1 - theta) in Y (saturated, since
 * it is a Smith-basis kernel).  Classes in X_iota are canonical coordinate
 * vectors: residues at the torsion rows followed by the free rows.
 */
class IotaLattice {
 public:
  static IotaLattice compute(const Satake& s);

  const std::vector<Int>& diag() const { return diag_; }
  const std::vector<long>& torsion_rows() const { return torsion_rows_; }
  const std::vector<long>& free_rows() const { return free_rows_; }
  const IntMat& yfix() const { return yfix_; }

  std::vector<Int> x_class(const std::vector<Int>& lambda) const;
  bool same_class(const std::vector<Int>& a, const std::vector<Int>& b) const {
    return x_class(a) == x_class(b);
  }

 private:
  IntMat u_;                        // Smith row transform of (1 - thetaX)
  std::vector<Int> diag_;           // elementary divisors, divisibility order
  std::vector<long> torsion_rows_;  // d_i > 1 (each equal to 2)
  std::vector<long> free_rows_;     // d_i == 0
  IntMat yfix_;                     // columns span Y^iota
};

}  // namespace qsp
