#pragma once

#include "qsp/algebra.hpp"

namespace qsp {

/* Braid-group symmetries on the word algebra.  T_i is defined on the
 * generator symbols,
 *
 *   T_i E_i^(n) = (-1)^n q_i^{-n(n-1)} F_i^(n) K(n eps_i alpha_i^vee)
 *   T_i F_i^(n) = (-1)^n q_i^{n(n-1)}  K(-n eps_i alpha_i^vee) E_i^(n)
 *   T_i E_j     = sum_{r=0}^{m} (-1)^r q_i^{-r} E_i^(m-r) E_j E_i^(r)
 *   T_i F_j     = sum_{r=0}^{m} (-1)^r q_i^{+r} F_i^(r) F_j F_i^(m-r)
 *                 with m = -c_ij, divided powers via T_i(E_j)^n / [n]_j!
 *   T_i K_mu    = K_{s_i mu},    T_i 1_lam = 1_{s_i lam}
 *
 * and extended multiplicatively over words.  Identities that need the
 * quantum Serre or commutator relations (braid relations, reduced-word
 * independence) only hold after acting on modules and are verified there.
 */
Element braid(const UAlgebra& u, long i, const Element& x);

// T_{i1} o T_{i2} o ... o T_{ik} (the last letter acts first)
Element braid_word(const UAlgebra& u, const std::vector<long>& word,
                   Element x);

/* braid_word with a fast path for longest elements acting as -1.  When the
 * word length equals the number of positive roots and the product of the
 * reflections is -1 on X, the word is reduced for a longest element w_0
 * with w_0 = -1; then w_0 s_i fixes alpha_i, so T_{w_0 s_i} fixes E_i^(n)
 * and F_i^(n) and the whole operator collapses to
 *
 *   E_i^(n) -> T_i(E_i^(n)),  F_i^(n) -> T_i(F_i^(n)),
 *   K_mu -> K_{-mu},  1_lam -> 1_{-lam}
 *
 * applied symbol by symbol, with no term growth (the generic composition is
 * exponential).  Like the braid relations, the collapse is an identity of
 * the quantum group, not of the free word algebra: the two code paths agree
 * after acting on modules, which is where all uses are checked.
 */
Element braid_tw(const UAlgebra& u, const std::vector<long>& word,
                 const Element& x);

}  // namespace qsp
