#include "qsp/specialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsp {

SpecModule::SpecModule(const WModule& m) : rd_(m.rd()) {
  for (const auto& [w, d] : m.dims()) {
    off_[w] = dim_;
    dims_[w] = d;
    dim_ += d;
  }
  const long n = rd_.rank_nodes();
  nilp_.assign(n, 0);
  pow_.assign(2, std::vector<std::vector<RatMat>>(n));
  for (long e = 0; e < 2; ++e)
    for (long i = 0; i < n; ++i) {
      for (long p = 1;; ++p) {
        RatMat flat(dim_, dim_);
        bool any = false;
        for (const auto& [w, d] : dims_) {
          const PolyMat* b = e ? m.epow(i, p, w) : m.fpow(i, p, w);
          if (!b || b->is_zero()) continue;
          any = true;
          RatMat v = b->eval_one();
          const Wt dst = wt_shift(w, rd_.roots, i, e ? p : -p);
          const long r0 = off_.at(dst), c0 = off_.at(w);
          for (long r = 0; r < v.rows(); ++r)
            for (long c = 0; c < v.cols(); ++c)
              flat.at(r0 + r, c0 + c) = v.at(r, c);
        }
        if (!any) break;
        pow_[e][i].push_back(std::move(flat));
      }
      nilp_[i] = std::max(nilp_[i], static_cast<long>(pow_[e][i].size()));
    }
}

RatMat SpecModule::ed(long i, long n) const {
  if (n <= 0 || n > static_cast<long>(pow_[1][i].size()))
    return RatMat(dim_, dim_);
  return pow_[1][i][n - 1];
}

RatMat SpecModule::fd(long i, long n) const {
  if (n <= 0 || n > static_cast<long>(pow_[0][i].size()))
    return RatMat(dim_, dim_);
  return pow_[0][i][n - 1];
}

RatMat SpecModule::hmu(const std::vector<Int>& mu) const {
  RatMat h(dim_, dim_);
  for (const auto& [w, off] : off_) {
    Rat v(rd_.pair(mu, w));
    for (long k = 0; k < dims_.at(w); ++k) h.at(off + k, off + k) = v;
  }
  return h;
}

RatMat SpecModule::act_one(const Element& x) const {
  RatMat out(dim_, dim_);
  for (const Term& t : x.terms()) {
    RatMat prod = RatMat::identity(dim_).scaled(t.coeff.eval_one());
    for (const Sym& s : t.word) {
      switch (s.kind) {
        case Sym::E:
          prod = prod * ed(s.node, s.pow);
          break;
        case Sym::F:
          prod = prod * fd(s.node, s.pow);
          break;
        case Sym::K:
          break;  // q^{<mu, w>} = 1
        case Sym::P: {
          RatMat proj(dim_, dim_);
          auto it = off_.find(s.wt);
          if (it != off_.end())
            for (long k = 0; k < dims_.at(s.wt); ++k)
              proj.at(it->second + k, it->second + k) = 1;
          prod = prod * proj;
          break;
        }
      }
    }
    out += prod;
  }
  return out;
}

RatMat SpecModule::xpoint(long i, const Rat& a) const {
  RatMat x = RatMat::identity(dim_);
  Rat an(1);
  for (long p = 1; p <= nilp_[i]; ++p) {
    an *= a;
    x += ed(i, p).scaled(an);
  }
  return x;
}

RatMat SpecModule::ypoint(long i, const Rat& a) const {
  RatMat y = RatMat::identity(dim_);
  Rat an(1);
  for (long p = 1; p <= static_cast<long>(nilp_[i]); ++p) {
    an *= a;
    y += fd(i, p).scaled(an);
  }
  return y;
}

RatMat sbar(const SpecModule& m, long i) {
  RatMat x1 = m.xpoint(i, Rat(1));
  return x1 * m.ypoint(i, Rat(-1)) * x1;
}

bool blockmap_equal_one(const BlockMap& a, const BlockMap& b) {
  auto flatten = [](const BlockMap& bm) {
    std::map<std::pair<Wt, Wt>, RatMat> out;
    for (const auto& [src, inner] : bm)
      for (const auto& [dst, block] : inner) {
        RatMat v = block.eval_one();
        if (!v.is_zero()) out.emplace(std::make_pair(src, dst), std::move(v));
      }
    return out;
  };
  return flatten(a) == flatten(b);
}

}  // namespace qsp
