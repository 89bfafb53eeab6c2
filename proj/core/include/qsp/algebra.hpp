#pragma once

#include "qsp/ratfunc.hpp"
#include "qsp/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsp {

/* Words in the modified quantum group: generators are divided powers
 * E_i^(n), F_i^(n), torus elements K_mu (mu in Y) and weight idempotents
 * 1_lambda (lambda in X).  No Serre or commutator relation is imposed here;
 * the only rewrites are the ones that hold in any weight-graded setting:
 *
 *   K_mu K_nu = K_{mu+nu},      K_mu E_j^(n) = q^{n<mu,alpha_j>} E_j^(n) K_mu,
 *   1_lam 1_lam = 1_lam,        E_j^(n) 1_lam = 1_{lam+n alpha_j} E_j^(n),
 *   K_mu 1_lam = q^{<mu,lam>} 1_lam,
 *   E_i^(a) E_i^(b) = qbinom(a+b, a)_{q_i} E_i^(a+b)   (same for F),
 *
 * yielding a canonical form per word: divided powers, then at most one K
 * (when no idempotent occurs), or a single trailing idempotent.  Everything
 * deeper is checked by acting on modules.
 */
struct Sym {
  enum Kind { E, F, K, P };
  Kind kind;
  long node = -1;       // E, F
  long pow = 1;         // divided power, >= 1
  std::vector<Int> wt;  // K: mu in Y; P: lambda in X

  int cmp(const Sym& o) const;
  bool operator==(const Sym& o) const { return cmp(o) == 0; }
  bool operator<(const Sym& o) const { return cmp(o) < 0; }
};

using Word = std::vector<Sym>;

struct Term {
  RatFunc coeff;
  Word word;
};

class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Term> terms) : terms_(std::move(terms)) {}

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

class UAlgebra {
 public:
  explicit UAlgebra(RootDatum rd) : rd_(std::move(rd)) {}
  const RootDatum& rd() const { return rd_; }

  // generators
  Element one() const;
  Element idem(std::vector<Int> lambda) const;
  Element torus(std::vector<Int> mu) const;
  Element chevE(long i) const { return divE(i, 1); }
  Element chevF(long i) const { return divF(i, 1); }
  Element divE(long i, long n) const;
  Element divF(long i, long n) const;
  // K_i = K_{eps_i alpha_i^vee}, the node torus element of the EF relation
  Element torus_node(long i, long mult = 1) const;

  // linear and multiplicative structure (results are always normalized)
  Element add(const Element& a, const Element& b) const;
  Element scale(const RatFunc& c, const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element normalized(std::vector<Term> terms) const;

  // algebra maps
  // omega: E_i <-> F_i, K_mu -> K_{-mu}, 1_lam -> 1_{-lam}
  Element omega(const Element& a) const;
  // xi_t: E_i^(n) -> t_i^n E_i^(n), F_i^(n) -> t_i^{-n} F_i^(n)
  Element xi(const std::vector<RatFunc>& t, const Element& a) const;
  // node permutation with compatible lattice maps on X and Y
  Element remap(const std::vector<long>& perm, const IntMat& tau_x,
                const IntMat& tau_y, const Element& a) const;

 private:
  std::optional<Term> normalize_term(Term t) const;

  RootDatum rd_;
};

}  // namespace qsp
