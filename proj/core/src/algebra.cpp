#include "qsp/algebra.hpp"

#include "qsp/qcomb.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsp {

int Sym::cmp(const Sym& o) const {
  if (kind != o.kind) return kind < o.kind ? -1 : 1;
  if (node != o.node) return node < o.node ? -1 : 1;
  if (pow != o.pow) return pow < o.pow ? -1 : 1;
  if (wt.size() != o.wt.size()) return wt.size() < o.wt.size() ? -1 : 1;
  for (std::size_t k = 0; k < wt.size(); ++k) {
    int c = ::cmp(wt[k], o.wt[k]);
    if (c != 0) return c;
  }
  return 0;
}

namespace {

int word_cmp(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    int c = a[k].cmp(b[k]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

bool Element::operator==(const Element& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (terms_[k].coeff != o.terms_[k].coeff ||
        word_cmp(terms_[k].word, o.terms_[k].word) != 0)
      return false;
  return true;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const Term& t : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    os << "(" << t.coeff.str() << ")";
    for (const Sym& s : t.word) {
      os << " ";
      switch (s.kind) {
        case Sym::E: os << "E" << s.node; break;
        case Sym::F: os << "F" << s.node; break;
        case Sym::K: os << "K"; break;
        case Sym::P: os << "1"; break;
      }
      if ((s.kind == Sym::E || s.kind == Sym::F) && s.pow != 1)
        os << "^(" << s.pow << ")";
      if (s.kind == Sym::K || s.kind == Sym::P) {
        os << "(";
        for (std::size_t k = 0; k < s.wt.size(); ++k) {
          if (k) os << ",";
          os << s.wt[k];
        }
        os << ")";
      }
    }
  }
  return os.str();
}

Element UAlgebra::one() const {
  return Element({Term{RatFunc(1), {}}});
}

Element UAlgebra::idem(std::vector<Int> lambda) const {
  if (static_cast<long>(lambda.size()) != rd_.rank_lattice())
    throw std::invalid_argument("idem: weight has wrong dimension");
  return Element({Term{RatFunc(1), {Sym{Sym::P, -1, 1, std::move(lambda)}}}});
}

Element UAlgebra::torus(std::vector<Int> mu) const {
  if (static_cast<long>(mu.size()) != rd_.rank_lattice())
    throw std::invalid_argument("torus: weight has wrong dimension");
  return normalized({Term{RatFunc(1), {Sym{Sym::K, -1, 1, std::move(mu)}}}});
}

Element UAlgebra::divE(long i, long n) const {
  if (n < 0) throw std::invalid_argument("divE: negative power");
  if (n == 0) return one();
  return Element({Term{RatFunc(1), {Sym{Sym::E, i, n, {}}}}});
}

Element UAlgebra::divF(long i, long n) const {
  if (n < 0) throw std::invalid_argument("divF: negative power");
  if (n == 0) return one();
  return Element({Term{RatFunc(1), {Sym{Sym::F, i, n, {}}}}});
}

Element UAlgebra::torus_node(long i, long mult) const {
  std::vector<Int> mu = rd_.coroot(i);
  for (Int& v : mu) v *= rd_.cartan.eps(i) * mult;
  return torus(std::move(mu));
}

std::optional<Term> UAlgebra::normalize_term(Term t) const {
  if (t.coeff.is_zero()) return std::nullopt;
  const Word& w = t.word;
  long r = -1;
  for (long k = static_cast<long>(w.size()) - 1; k >= 0; --k)
    if (w[k].kind == Sym::P) { r = k; break; }

  Word body;  // E/F symbols only, in order
  RatFunc coeff = t.coeff;
  auto addmul = [&](std::vector<Int>& acc, const std::vector<Int>& v,
                    long scale) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += scale * v[k];
  };

  if (r >= 0) {
    // weight state right of the current position while scanning the prefix
    std::vector<Int> wt = w[r].wt;
    Word left;
    for (long k = r - 1; k >= 0; --k) {
      const Sym& s = w[k];
      switch (s.kind) {
        case Sym::E:
          left.push_back(s);
          addmul(wt, rd_.root(s.node), s.pow);
          break;
        case Sym::F:
          left.push_back(s);
          addmul(wt, rd_.root(s.node), -s.pow);
          break;
        case Sym::K: {
          Int e = rd_.pair(s.wt, wt);
          coeff *= RatFunc::q(e.get_si());
          break;
        }
        case Sym::P:
          if (s.wt != wt) return std::nullopt;
          break;
      }
    }
    std::reverse(left.begin(), left.end());
    body = std::move(left);

    // push the idempotent right through the suffix
    std::vector<Int> nu = w[r].wt;
    for (long k = r + 1; k < static_cast<long>(w.size()); ++k) {
      const Sym& s = w[k];
      switch (s.kind) {
        case Sym::E:
          body.push_back(s);
          addmul(nu, rd_.root(s.node), -s.pow);
          break;
        case Sym::F:
          body.push_back(s);
          addmul(nu, rd_.root(s.node), s.pow);
          break;
        case Sym::K: {
          Int e = rd_.pair(s.wt, nu);
          coeff *= RatFunc::q(e.get_si());
          break;
        }
        case Sym::P:
          if (s.wt != nu) return std::nullopt;
          break;
      }
    }

    // merge adjacent divided powers on the same node
    Word merged;
    for (const Sym& s : body) {
      if (!merged.empty() && merged.back().kind == s.kind &&
          merged.back().node == s.node) {
        long a = merged.back().pow, b = s.pow;
        coeff *= RatFunc(qbinom(a + b, a, rd_.cartan.eps(s.node)));
        merged.back().pow = a + b;
      } else {
        merged.push_back(s);
      }
    }
    merged.push_back(Sym{Sym::P, -1, 1, std::move(nu)});
    if (coeff.is_zero()) return std::nullopt;
    return Term{std::move(coeff), std::move(merged)};
  }

  // no idempotent: slide every K to the right end, merging as we go
  std::vector<Int> mu(rd_.rank_lattice(), Int(0));
  bool have_k = false;
  for (const Sym& s : w) {
    switch (s.kind) {
      case Sym::E: {
        if (have_k) {
          Int e = rd_.pair(mu, rd_.root(s.node)) * s.pow;
          coeff *= RatFunc::q(e.get_si());
        }
        body.push_back(s);
        break;
      }
      case Sym::F: {
        if (have_k) {
          Int e = rd_.pair(mu, rd_.root(s.node)) * -s.pow;
          coeff *= RatFunc::q(e.get_si());
        }
        body.push_back(s);
        break;
      }
      case Sym::K:
        addmul(mu, s.wt, 1);
        have_k = true;
        break;
      case Sym::P:
        break;  // unreachable
    }
  }
  Word merged;
  for (const Sym& s : body) {
    if (!merged.empty() && merged.back().kind == s.kind &&
        merged.back().node == s.node) {
      long a = merged.back().pow, b = s.pow;
      coeff *= RatFunc(qbinom(a + b, a, rd_.cartan.eps(s.node)));
      merged.back().pow = a + b;
    } else {
      merged.push_back(s);
    }
  }
  bool nonzero_mu = false;
  for (const Int& v : mu)
    if (v != 0) nonzero_mu = true;
  if (nonzero_mu) merged.push_back(Sym{Sym::K, -1, 1, std::move(mu)});
  if (coeff.is_zero()) return std::nullopt;
  return Term{std::move(coeff), std::move(merged)};
}

Element UAlgebra::normalized(std::vector<Term> terms) const {
  std::vector<Term> flat;
  for (Term& t : terms) {
    auto n = normalize_term(std::move(t));
    if (n.has_value()) flat.push_back(std::move(*n));
  }
  std::sort(flat.begin(), flat.end(), [](const Term& a, const Term& b) {
    return word_cmp(a.word, b.word) < 0;
  });
  std::vector<Term> out;
  for (Term& t : flat) {
    if (!out.empty() && word_cmp(out.back().word, t.word) == 0) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return Element(std::move(out));
}

Element UAlgebra::add(const Element& a, const Element& b) const {
  std::vector<Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return normalized(std::move(terms));
}

Element UAlgebra::scale(const RatFunc& c, const Element& a) const {
  if (c.is_zero()) return Element();
  std::vector<Term> terms = a.terms();
  for (Term& t : terms) t.coeff *= c;
  return normalized(std::move(terms));
}

Element UAlgebra::mul(const Element& a, const Element& b) const {
  std::vector<Term> terms;
  for (const Term& ta : a.terms())
    for (const Term& tb : b.terms()) {
      Term t{ta.coeff * tb.coeff, ta.word};
      t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
      terms.push_back(std::move(t));
    }
  return normalized(std::move(terms));
}

Element UAlgebra::omega(const Element& a) const {
  std::vector<Term> terms = a.terms();
  for (Term& t : terms)
    for (Sym& s : t.word) {
      switch (s.kind) {
        case Sym::E: s.kind = Sym::F; break;
        case Sym::F: s.kind = Sym::E; break;
        case Sym::K:
        case Sym::P:
          for (Int& v : s.wt) v = -v;
          break;
      }
    }
  return normalized(std::move(terms));
}

Element UAlgebra::xi(const std::vector<RatFunc>& t, const Element& a) const {
  if (static_cast<long>(t.size()) != rd_.rank_nodes())
    throw std::invalid_argument("xi: one scalar per node required");
  std::vector<Term> terms = a.terms();
  for (Term& tm : terms)
    for (const Sym& s : tm.word) {
      if (s.kind == Sym::E || s.kind == Sym::F) {
        RatFunc f = s.kind == Sym::E ? t[s.node] : t[s.node].inverse();
        for (long k = 0; k < s.pow; ++k) tm.coeff *= f;
      }
    }
  return normalized(std::move(terms));
}

Element UAlgebra::remap(const std::vector<long>& perm, const IntMat& tau_x,
                        const IntMat& tau_y, const Element& a) const {
  std::vector<Term> terms = a.terms();
  for (Term& t : terms)
    for (Sym& s : t.word) {
      switch (s.kind) {
        case Sym::E:
        case Sym::F:
          s.node = perm[s.node];
          break;
        case Sym::K:
          s.wt = tau_y * s.wt;
          break;
        case Sym::P:
          s.wt = tau_x * s.wt;
          break;
      }
    }
  return normalized(std::move(terms));
}

}  // namespace qsp
