#pragma once

#include "qsp/braid.hpp"
#include "qsp/relations.hpp"
#include "qsp/satake.hpp"

#include <string>
#include <vector>

namespace qsp {

/* Parameters of the coideal subalgebra attached to a marked diagram: one
 * scalar per node, restricted to signed powers of q.  Only the white-node
 * entries enter the B generators; sign is the q = 1 image, the part the
 * constraints below can see.
 */
struct IParameters {
  std::vector<int> sign;   // +1 or -1
  std::vector<long> expo;  // exponent of q

  RatFunc value(long i) const;
};

/* The two sign constraints, checked per white node i:
 *
 *   sign-match      sign_i = sign_{tau i}  whenever <alpha_i^vee, theta alpha_i> = 0
 *                   (vacuous at nodes where the pairing is nonzero)
 *   parity-product  sign_i * sign_{tau i} = (-1)^{<2 rho_black^vee, alpha_i>}
 */
struct ParamCheck {
  std::string name;
  long node = -1;
  bool vacuous = false;
  bool pass = true;
  std::string detail;
};

struct ParamReport {
  bool ok = true;
  std::vector<ParamCheck> checks;
};

ParamReport validate_params(const Satake& s, const IParameters& p);

// all signs +1 and exponents 0, except that whenever a tau orbit {i, tau i}
// of white nodes has odd <2 rho_black^vee, alpha_i>, the larger node of the
// orbit takes sign -1 (the minimal deterministic fix for parity-product)
IParameters default_params(const Satake& s);

/* B_i = F_i + varsigma_i T_{w_black}(E_{tau i}) K_i^{-1} for white i, with
 * T_{w_black} computed by braid_tw on the diagram's reduced word (or on a
 * caller-supplied one, for reduced-word independence checks).  Throws
 * std::invalid_argument on black nodes.
 */
Element bgen(const UAlgebra& u, const Satake& s, const IParameters& p, long i);
Element bgen(const UAlgebra& u, const Satake& s, const IParameters& p, long i,
             const std::vector<long>& wblack_word);

/* The full generator list of the coideal: B_i over white nodes, K_mu over a
 * basis of the theta-fixed part of Y, and the untouched E_i, F_i over black
 * nodes.
 */
struct IGeneratorSet {
  std::vector<long> white;
  std::vector<Element> bgens;
  std::vector<std::vector<Int>> kweights;
  std::vector<Element> kgens;
  std::vector<long> black;
  std::vector<Element> egens, fgens;
};

IGeneratorSet igens(const UAlgebra& u, const Satake& s, const IParameters& p);

/* Every generator must shift weights by a single class of the residual
 * lattice X / (1 - theta) X: acting on each battery module, all nonzero
 * blocks of one generator move src -> dst with x_class(dst - src) constant.
 * For B_i this is the computable shadow of the coideal property (both
 * summands shift by -alpha_i resp. -theta alpha_i, congruent by design).
 * A caller-supplied lattice (e.g. from a different diagram) serves as a
 * negative control.
 */
CheckResult igrading_check(const UAlgebra& u, const Satake& s,
                           const IParameters& p, const Battery& bat,
                           const IotaLattice* lattice = nullptr);

}  // namespace qsp
