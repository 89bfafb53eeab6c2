#include "qsp/weyl.hpp"

#include <deque>
#include <stdexcept>

namespace qsp {

IntMat word_matrix(const RootDatum& rd, const std::vector<long>& word) {
  IntMat m = IntMat::identity(rd.rank_lattice());
  for (long i : word) m = m * rd.reflection_X(i);
  return m;
}

IntMat word_matrix_Y(const RootDatum& rd, const std::vector<long>& word) {
  IntMat m = IntMat::identity(rd.rank_lattice());
  for (long i : word) m = m * rd.reflection_Y(i);
  return m;
}

Weyl Weyl::enumerate(const RootDatum& rd, std::vector<long> gens,
                     long rank_bound, std::size_t order_bound) {
  if (gens.empty())
    for (long i = 0; i < rd.rank_nodes(); ++i) gens.push_back(i);
  if (static_cast<long>(gens.size()) > rank_bound)
    throw std::invalid_argument("Weyl::enumerate: too many generators");

  std::vector<IntMat> refl;
  for (long i : gens) refl.push_back(rd.reflection_X(i));

  Weyl w;
  IntMat id = IntMat::identity(rd.rank_lattice());
  w.elements.push_back(id);
  w.words.push_back({});
  w.index.emplace(id, 0);

  std::deque<long> queue{0};
  while (!queue.empty()) {
    long cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      IntMat next = w.elements[cur] * refl[g];
      if (w.index.count(next)) continue;
      if (w.elements.size() >= order_bound)
        throw std::invalid_argument("Weyl::enumerate: order bound exceeded");
      long idx = static_cast<long>(w.elements.size());
      w.index.emplace(next, idx);
      w.elements.push_back(std::move(next));
      std::vector<long> word = w.words[cur];
      word.push_back(gens[g]);
      w.words.push_back(std::move(word));
      queue.push_back(idx);
    }
  }

  // unique element of maximal length
  std::size_t maxlen = w.words.back().size();
  long count = 0;
  for (std::size_t k = 0; k < w.words.size(); ++k)
    if (w.words[k].size() == maxlen) {
      w.longest_index = static_cast<long>(k);
      ++count;
    }
  if (count != 1)
    throw std::logic_error("Weyl::enumerate: longest element is not unique");
  return w;
}

}  // namespace qsp
