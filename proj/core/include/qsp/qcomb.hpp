#pragma once

#include "qsp/laurent.hpp"

namespace qsp {

/* Balanced q-integers and their factorials and binomials:
 *
 *   [n]   = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n)
 *   [m]!  = [1][2]...[m]
 *   [n d] = [n][n-1]...[n-d+1] / [d]!        (d >= 0, n any integer)
 *
 * All three live in Z[q, q^-1].  The eps parameter rescales the variable,
 * q -> q^eps, which realizes the node-dependent forms [n]_{q_i} for a node
 * of squared length 2*eps.  qbinom performs the division exactly and treats
 * a nonzero remainder as a hard internal error.
 */

// [n] with q -> q^eps; [0] = 0, [-n] = -[n]
Laurent qint(long n, long eps = 1);

// [m]! with q -> q^eps; m must be >= 0
Laurent qfact(long m, long eps = 1);

// binomial [n choose d] with q -> q^eps; d must be >= 0, n may be negative
Laurent qbinom(long n, long d, long eps = 1);

}  // namespace qsp
