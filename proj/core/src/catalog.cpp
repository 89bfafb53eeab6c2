#include "qsp/catalog.hpp"

#include <stdexcept>

namespace qsp {

namespace {

IntMat imat(long n, std::vector<long> v) {
  std::vector<Int> e(v.begin(), v.end());
  return IntMat(n, n, std::move(e));
}

RootDatum sc(long n, std::vector<long> form) {
  return RootDatum::simply_connected(Cartan::from_form(imat(n, std::move(form))));
}

std::vector<CatalogEntry> make_catalog() {
  RootDatum a1 = sc(1, {2});
  RootDatum a1_adj = RootDatum::adjoint(Cartan::from_form(imat(1, {2})));
  RootDatum a1a1 = sc(2, {2, 0, 0, 2});
  RootDatum a2 = sc(2, {2, -1, -1, 2});
  RootDatum c2 = sc(2, {2, -2, -2, 4});  // node 0 short, node 1 long
  RootDatum b2 = sc(2, {4, -2, -2, 2});  // node 0 long, node 1 short

  const std::vector<long> id1 = {0};
  const std::vector<long> id2 = {0, 1};
  const std::vector<long> swap2 = {1, 0};
  const std::vector<bool> w1 = {false};
  const std::vector<bool> b1 = {true};
  const std::vector<bool> w2 = {false, false};
  const std::vector<bool> b2b = {true, true};

  std::vector<CatalogEntry> cat;
  cat.push_back({"sl2-split",
                 "SL(2), split involution; theta = -1 on the weight lattice",
                 {a1, w1, id1}});
  cat.push_back({"sl2-compact",
                 "SL(2), one black node; theta = +1, the pair is degenerate",
                 {a1, b1, id1}});
  cat.push_back({"pgl2-split",
                 "PGL(2), split involution on the root lattice",
                 {a1_adj, w1, id1}});
  cat.push_back({"a1xa1-split",
                 "SL(2) x SL(2), split involution on both factors",
                 {a1a1, w2, id2}});
  cat.push_back({"sl2xsl2-diag",
                 "SL(2) x SL(2) with the factor-swapping involution",
                 {a1a1, w2, swap2}});
  cat.push_back({"sl3-split",
                 "SL(3), split involution; theta = -1",
                 {a2, w2, id2}});
  cat.push_back({"sl3-quasisplit",
                 "SL(3), quasi-split involution through the diagram flip",
                 {a2, w2, swap2}});
  cat.push_back({"sp4-split",
                 "Sp(4), split involution; theta = -1",
                 {c2, w2, id2}});
  cat.push_back({"sp4-cii",
                 "Sp(4) with the short node black; theta = -s_0",
                 {c2, {true, false}, id2}});
  cat.push_back({"sp4-compact",
                 "Sp(4), all nodes black; theta = +1, w_black has length 4",
                 {c2, b2b, id2}});
  cat.push_back({"spin5-split",
                 "Spin(5), split involution; theta = -1",
                 {b2, w2, id2}});
  cat.push_back({"spin5-bii",
                 "Spin(5) with the short node black; theta = -s_1",
                 {b2, {false, true}, id2}});
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = make_catalog();
  return cat;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e;
  throw std::invalid_argument("catalog: no entry named '" + name + "'");
}

}  // namespace qsp
