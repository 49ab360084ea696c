#pragma once

#include <map>

#include "verlinde/exact/abelian.hpp"

namespace verlinde::completion {

// (p^i - 1)/2 for odd p, 2^i - 1 for p = 2, p^i || m
long delta(long p, long m);
// k in 1..m-1 with zeta_{2m}^k of p-power order
long delta_by_roots(long p, long m);

std::map<long, AbelianPStructure> completion_structure_sp1(long m);

// C(delta(p, m), n)
BigInt completion_rank_formula(long m, long n, long p);

}  // namespace verlinde::completion
