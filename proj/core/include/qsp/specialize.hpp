#pragma once

#include "qsp/intmat.hpp"
#include "qsp/module.hpp"

#include <map>
#include <tuple>

namespace qsp {

/* A weight module with every matrix evaluated at q = 1, flattened onto a
 * single coordinate space (weight blocks in lexicographic weight order).
 * Torus elements act as the identity and idempotents as block projections,
 * so the whole word algebra acts through exact rational matrices.  The
 * constructor throws std::domain_error if any stored block has a pole at
 * q = 1 (catalog batteries never do).
 */
class SpecModule {
 public:
  explicit SpecModule(const WModule& m);

  const RootDatum& rd() const { return rd_; }
  long dim() const { return dim_; }
  const std::map<Wt, long>& offsets() const { return off_; }
  const std::map<Wt, long>& dims() const { return dims_; }

  // largest n with E_i^(n) (equivalently F_i^(n)) nonzero
  long nilpotency(long i) const { return nilp_[i]; }

  // divided powers at q = 1, as dim x dim matrices
  RatMat ed(long i, long n = 1) const;
  RatMat fd(long i, long n = 1) const;
  // h_mu: diagonal <mu, lambda> on the weight-lambda block
  RatMat hmu(const std::vector<Int>& mu) const;

  // action of any word element at q = 1
  RatMat act_one(const Element& x) const;

  // one-parameter unipotent points x_i(a) = sum_n a^n E_i^(n) and the
  // F-side y_i(a); exact because the sums stop at the nilpotency degree
  RatMat xpoint(long i, const Rat& a) const;
  RatMat ypoint(long i, const Rat& a) const;

 private:
  RootDatum rd_;
  long dim_ = 0;
  std::map<Wt, long> off_, dims_;
  std::vector<long> nilp_;
  // [e?][node][n-1] -> flat matrix
  std::vector<std::vector<std::vector<RatMat>>> pow_;
};

// x_i(1) y_i(-1) x_i(1), the point realizing the braid operator T_i by
// conjugation at q = 1
RatMat sbar(const SpecModule& m, long i);

// compare two actions after evaluation at q = 1 (blocks that evaluate to
// zero count as absent)
bool blockmap_equal_one(const BlockMap& a, const BlockMap& b);

}  // namespace qsp
