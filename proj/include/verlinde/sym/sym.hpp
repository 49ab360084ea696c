#pragma once

#include "verlinde/exact/cyclotomic.hpp"
#include "verlinde/exact/poly.hpp"

namespace verlinde::sym {

// Sym^0 = 1, Sym^1 = x, x Sym^k = Sym^{k+1} + Sym^{k-1}
ZPoly sym(unsigned k);

// sigma^k(y) = Sym^k(y + 2)
ZPoly sigma(unsigned k);

// zeta_{2m}^k + zeta_{2m}^{-k}
CycNumber root_point(long m, long k);

// Sym^{m-1} at zeta_{2m}^k + zeta_{2m}^{-k}; zero for 1 <= k <= m-1
CycNumber sym_root_check(long m, long k);

// (zeta^{i(j+1)} - zeta^{-i(j+1)}) / (zeta^i - zeta^{-i}), zeta = zeta_{2m}
CycNumber sym_closed_form(long m, long i, long j);

// (t^2 - t x + 1) * sum_i Sym^i(x) t^i == 1 mod t^{D+1}
bool generating_identity_check(unsigned depth);

}  // namespace verlinde::sym
