#include "qsp/braid.hpp"

#include "qsp/qcomb.hpp"

namespace qsp {

namespace {

std::vector<Int> scaled_coroot(const RootDatum& rd, long i, long mult) {
  std::vector<Int> mu = rd.coroot(i);
  for (Int& v : mu) v *= rd.cartan.eps(i) * mult;
  return mu;
}

Element braid_sym(const UAlgebra& u, long i, const Sym& s) {
  const RootDatum& rd = u.rd();
  long eps_i = rd.cartan.eps(i);
  switch (s.kind) {
    case Sym::K: {
      std::vector<Int> mu = rd.reflection_Y(i) * s.wt;
      return u.torus(std::move(mu));
    }
    case Sym::P: {
      std::vector<Int> lam = rd.reflection_X(i) * s.wt;
      return u.idem(std::move(lam));
    }
    case Sym::E: {
      long n = s.pow;
      if (s.node == i) {
        RatFunc c = RatFunc::q(-eps_i * n * (n - 1));
        if (n % 2 != 0) c = -c;
        Term t{c, {Sym{Sym::F, i, n, {}},
                   Sym{Sym::K, -1, 1, scaled_coroot(rd, i, n)}}};
        return u.normalized({std::move(t)});
      }
      long m = -rd.cartan.c(i, s.node);
      std::vector<Term> base;
      for (long r = 0; r <= m; ++r) {
        RatFunc c = RatFunc::q(-eps_i * r);
        if (r % 2 != 0) c = -c;
        Word word;
        if (m - r > 0) word.push_back(Sym{Sym::E, i, m - r, {}});
        word.push_back(Sym{Sym::E, s.node, 1, {}});
        if (r > 0) word.push_back(Sym{Sym::E, i, r, {}});
        base.push_back(Term{std::move(c), std::move(word)});
      }
      Element img = u.normalized(std::move(base));
      if (n == 1) return img;
      Element out = img;
      for (long k = 1; k < n; ++k) out = u.mul(out, img);
      return u.scale(RatFunc(Laurent(1), qfact(n, rd.cartan.eps(s.node))),
                     out);
    }
    case Sym::F: {
      long n = s.pow;
      if (s.node == i) {
        RatFunc c = RatFunc::q(eps_i * n * (n - 1));
        if (n % 2 != 0) c = -c;
        Term t{c, {Sym{Sym::K, -1, 1, scaled_coroot(rd, i, -n)},
                   Sym{Sym::E, i, n, {}}}};
        return u.normalized({std::move(t)});
      }
      long m = -rd.cartan.c(i, s.node);
      std::vector<Term> base;
      for (long r = 0; r <= m; ++r) {
        RatFunc c = RatFunc::q(eps_i * r);
        if (r % 2 != 0) c = -c;
        Word word;
        if (r > 0) word.push_back(Sym{Sym::F, i, r, {}});
        word.push_back(Sym{Sym::F, s.node, 1, {}});
        if (m - r > 0) word.push_back(Sym{Sym::F, i, m - r, {}});
        base.push_back(Term{std::move(c), std::move(word)});
      }
      Element img = u.normalized(std::move(base));
      if (n == 1) return img;
      Element out = img;
      for (long k = 1; k < n; ++k) out = u.mul(out, img);
      return u.scale(RatFunc(Laurent(1), qfact(n, rd.cartan.eps(s.node))),
                     out);
    }
  }
  return Element();
}

}  // namespace

Element braid(const UAlgebra& u, long i, const Element& x) {
  Element out;
  for (const Term& t : x.terms()) {
    Element prod = u.scale(t.coeff, u.one());
    for (const Sym& s : t.word) prod = u.mul(prod, braid_sym(u, i, s));
    out = u.add(out, prod);
  }
  return out;
}

Element braid_word(const UAlgebra& u, const std::vector<long>& word,
                   Element x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    x = braid(u, *it, x);
  return x;
}

Element braid_tw(const UAlgebra& u, const std::vector<long>& word,
                 const Element& x) {
  const RootDatum& rd = u.rd();
  bool minus_one = !word.empty() &&
                   word.size() == positive_roots(rd.cartan).size();
  if (minus_one) {
    const long d = rd.rank_lattice();
    IntMat w = IntMat::identity(d);
    for (long i : word) w = w * rd.reflection_X(i);
    for (long r = 0; r < d && minus_one; ++r)
      for (long c = 0; c < d && minus_one; ++c)
        minus_one = w.at(r, c) == (r == c ? -1 : 0);
  }
  if (!minus_one) return braid_word(u, word, x);

  Element out;
  for (const Term& t : x.terms()) {
    Element prod = u.scale(t.coeff, u.one());
    for (const Sym& s : t.word) {
      Element img;
      if (s.kind == Sym::E || s.kind == Sym::F) {
        img = braid_sym(u, s.node, s);
      } else {
        std::vector<Int> neg = s.wt;
        for (Int& v : neg) v = -v;
        img = s.kind == Sym::K ? u.torus(std::move(neg))
                               : u.idem(std::move(neg));
      }
      prod = u.mul(prod, img);
    }
    out = u.add(out, prod);
  }
  return out;
}

}  // namespace qsp
