#pragma once

#include "qsp/rootdata.hpp"

#include <map>
#include <vector>

namespace qsp {

// product of simple reflections on X along a word, left to right
IntMat word_matrix(const RootDatum& rd, const std::vector<long>& word);
// the same on Y
IntMat word_matrix_Y(const RootDatum& rd, const std::vector<long>& word);

/* Finite Weyl group (or parabolic subgroup) enumerated by breadth-first
 * search over right multiplication by generators, in ascending node order.
 * Each element keeps its shortlex-minimal reduced word; elements[0] is the
 * identity, and the unique element of maximal length is at longest_index.
 */
struct Weyl {
  std::vector<IntMat> elements;             // matrices acting on X
  std::vector<std::vector<long>> words;     // shortlex-minimal reduced words
  std::map<IntMat, long> index;
  long longest_index = 0;

  // gens empty = all nodes; refuses more than rank_bound generators or more
  // than order_bound elements (the search space grows factorially)
  static Weyl enumerate(const RootDatum& rd, std::vector<long> gens = {},
                        long rank_bound = 4, std::size_t order_bound = 100000);
};

}  // namespace qsp
