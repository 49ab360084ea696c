#include "verlinde/completion/delta.hpp"

#include <numeric>
#include <stdexcept>

namespace verlinde::completion {

long delta(long p, long m) {
  if (!is_prime(p) || m < 1) throw std::invalid_argument("delta: need prime p and m >= 1");
  int i = valuation(m, p);
  long pi = ipow(p, i);
  return p == 2 ? pi - 1 : (pi - 1) / 2;
}

long delta_by_roots(long p, long m) {
  long count = 0;
  for (long k = 1; k <= m - 1; ++k) {
    long ord = 2 * m / std::gcd(2 * m, k);
    while (ord % p == 0) ord /= p;
    if (ord == 1) ++count;
  }
  return count;
}

std::map<long, AbelianPStructure> completion_structure_sp1(long m) {
  std::map<long, AbelianPStructure> out;
  for (long p : prime_divisors(m))
    out[p] = AbelianPStructure(p, std::vector<int>(delta(p, m), kInfiniteExponent));
  return out;
}

BigInt completion_rank_formula(long m, long n, long p) {
  if (m < n + 2) throw std::invalid_argument("completion_rank_formula: need m >= n + 2");
  return binomial(delta(p, m), n);
}

}  // namespace verlinde::completion
