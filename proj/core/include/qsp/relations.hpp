#pragma once

#include "qsp/module.hpp"

namespace qsp {

struct CheckResult {
  bool ok = true;
  std::string detail;  // first failure, empty when ok

  static CheckResult fail(std::string d) { return {false, std::move(d)}; }
};

/* The defining relations of the quantum group, checked through module
 * actions at generic q.  The word algebra imposes only grading rewrites, so
 * these sweeps are where the actual relations get verified.
 */

// torus elements act by q^{<mu,w>} and idempotents project onto one weight
CheckResult check_torus_action(const WModule& m);
// acting by K_mu after E_i / F_i rescales blocks by q^{<mu, destination>}
CheckResult check_torus_conjugation(const WModule& m);
// E_i F_j - F_j E_i = delta_ij (Kt_i - Kt_i^{-1}) / (q_i - q_i^{-1})
CheckResult check_ef_commutator(const WModule& m);
// quantum Serre relations in divided-power form, for E and for F
CheckResult check_serre(const WModule& m);
// x acts on the omega twist exactly as omega(x) acts on the original
CheckResult check_omega_twist(const WModule& m);
// the coproduct-built tensor satisfies the EF and Serre families
CheckResult check_coproduct(const WModule& a, const WModule& b,
                            const DeltaTable& dt = {});

// the five single-module families above, labeled
std::vector<std::pair<std::string, CheckResult>> relation_sweep(
    const WModule& m);

}  // namespace qsp
