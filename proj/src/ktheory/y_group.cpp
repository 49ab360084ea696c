#include "verlinde/ktheory/y_group.hpp"

#include "verlinde/completion/tower.hpp"
#include "verlinde/exact/linalg.hpp"

namespace verlinde::ktheory {

namespace {

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

long epsilon(long p, long l, long r, long m, EpsilonReading reading) {
  if (!is_prime(p) || l < 1 || r < 1) throw std::invalid_argument("epsilon: need prime p, l >= 1, r >= 1");
  if (r > l + 1 || m % p) return 0;
  int i = valuation(m, p);
  for (int j = 1; j <= i; ++j) {
    long lo, hi;
    if (p == 2) {
      lo = ipow(2, j - 1) - 1;
      hi = ipow(2, j) - 1;
    } else {
      lo = (ipow(p, j - 1) - 1) / 2;
      hi = (ipow(p, j) - 1) / 2;
    }
    if (!(lo < r && r <= hi)) continue;
    long e = p == 2 ? ceil_div(2 + l - r, ipow(2, j - 1)) : ceil_div(2 * (2 + l - r), (p - 1) * ipow(p, j - 1));
    if (reading == EpsilonReading::kCorrected) e += i - j;
    return e;
  }
  return 0;
}

std::map<long, AbelianPStructure> y_group_structure(long m, long l, EpsilonReading reading) {
  std::map<long, AbelianPStructure> out;
  for (long p : prime_divisors(m)) {
    std::vector<int> e;
    for (long r = 1; r <= l + 1; ++r) e.push_back(static_cast<int>(epsilon(p, l, r, m, reading)));
    out[p] = AbelianPStructure(p, e);
  }
  return out;
}

AbelianPStructure y_group_oracle(long m, long l, long p) {
  return AbelianPStructure::from_diagonal(p, smith_diagonal(completion::truncated_sigma_presentation(m, static_cast<int>(l))));
}

long OmegaRing::summands_in_degree(long d) const {
  if (zero_ring || d < 0 || d % 2) return 0;
  return d / generator_degree + 1;
}

long OmegaRing::summands_up_to_degree(long d) const {
  long s = 0;
  for (long k = 0; k <= d; ++k) s += summands_in_degree(k);
  return s;
}

OmegaRing omega_hp_ring(long m, long l) {
  if (m < 1 || l < 1) throw std::invalid_argument("omega_hp_ring: need m >= 1, l >= 1");
  return OmegaRing{m, l, 4 * l + 2, m == 1};
}

}  // namespace verlinde::ktheory
