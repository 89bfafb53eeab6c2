#pragma once

#include "qsp/laurent.hpp"
#include "qsp/linalg.hpp"

namespace qsp {

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

RatMat to_rat(const IntMat& a);
// exact conversion; nullopt if any entry has a denominator
std::optional<IntMat> to_int(const RatMat& a);

Int int_det(const IntMat& a);

/* Smith normal form with recorded transforms: U * A * V = S where U and V
 * are unimodular and S is diagonal with S[0,0] | S[1,1] | ... >= 0.
 */
struct Smith {
  IntMat U, S, V;
};
Smith smith_form(const IntMat& a);

// inverse of a determinant +-1 matrix, computed over the integers
IntMat unimodular_inverse(const IntMat& a);

}  // namespace qsp
