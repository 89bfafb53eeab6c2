#include "qsp/qcomb.hpp"

#include <stdexcept>

namespace qsp {

Laurent qint(long n, long eps) {
  if (n == 0) return Laurent();
  if (n < 0) return -qint(-n, eps);
  Laurent p;
  for (long k = 0; k < n; ++k) p += Laurent::q(eps * (n - 1 - 2 * k));
  return p;
}

Laurent qfact(long m, long eps) {
  if (m < 0) throw std::domain_error("qfact: negative argument");
  Laurent p(1);
  for (long k = 2; k <= m; ++k) p *= qint(k, eps);
  return p;
}

Laurent qbinom(long n, long d, long eps) {
  if (d < 0) throw std::domain_error("qbinom: negative lower index");
  Laurent num(1);
  for (long k = 0; k < d; ++k) {
    num *= qint(n - k, eps);
    if (num.is_zero()) return num;  // 0 <= n < d
  }
  return num.exact_div(qfact(d, eps));
}

}  // namespace qsp
