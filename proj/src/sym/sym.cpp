#include "verlinde/sym/sym.hpp"

#include <vector>

namespace verlinde::sym {

ZPoly sym(unsigned k) {
  ZPoly prev = ZPoly::constant(1), cur = ZPoly::x();
  if (k == 0) return prev;
  for (unsigned i = 1; i < k; ++i) {
    ZPoly next = ZPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ZPoly sigma(unsigned k) { return sym(k).shifted(2); }

CycNumber root_point(long m, long k) {
  unsigned n = static_cast<unsigned>(2 * m);
  return CycNumber::zeta_power(n, k) + CycNumber::zeta_power(n, -k);
}

CycNumber sym_root_check(long m, long k) {
  CycNumber at = root_point(m, k);
  return sym(static_cast<unsigned>(m - 1)).evaluate(at, CycNumber(at.order()));
}

CycNumber sym_closed_form(long m, long i, long j) {
  unsigned n = static_cast<unsigned>(2 * m);
  CycNumber num = CycNumber::zeta_power(n, i * (j + 1)) - CycNumber::zeta_power(n, -i * (j + 1));
  CycNumber den = CycNumber::zeta_power(n, i) - CycNumber::zeta_power(n, -i);
  return num / den;
}

bool generating_identity_check(unsigned depth) {
  // coefficients of t^i are polynomials in x
  std::vector<ZPoly> series;
  for (unsigned i = 0; i <= depth; ++i) series.push_back(sym(i));
  for (unsigned i = 0; i <= depth; ++i) {
    ZPoly c = series[i];
    if (i >= 1) c -= ZPoly::x() * series[i - 1];
    if (i >= 2) c += series[i - 2];
    if (!(c == (i == 0 ? ZPoly::constant(1) : ZPoly()))) return false;
  }
  return true;
}

}  // namespace verlinde::sym
