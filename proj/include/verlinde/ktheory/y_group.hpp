#pragma once

#include <map>

#include "verlinde/exact/abelian.hpp"

namespace verlinde::ktheory {

// kPrinted: exponent ceil((2 + l - r) / 2^{j-1}) (p = 2) resp.
// ceil(2(2 + l - r) / ((p - 1) p^{j-1})), the closed form as usually stated.
// kCorrected adds i - j, p^i || m; this is what the Smith form confirms.
enum class EpsilonReading { kCorrected, kPrinted };

long epsilon(long p, long l, long r, long m, EpsilonReading reading = EpsilonReading::kCorrected);

// sum over r of Z/p^{epsilon(p, l, r)}, for each p | m
std::map<long, AbelianPStructure> y_group_structure(long m, long l, EpsilonReading reading = EpsilonReading::kCorrected);

// p-part of Z[y]/(sigma^{m-1}(y), y^{l+1}) from the Smith form of its presentation
AbelianPStructure y_group_oracle(long m, long l, long p);

// K^tau_*(Omega HP^l) = (K_* / m)[t], |t| = 4l + 2
struct OmegaRing {
  long m = 0, l = 0;
  long generator_degree = 0;
  bool zero_ring = false;
  // copies of Z/m in total degree d: t^q beta^{(d - q|t|)/2} for q|t| <= d, d even
  long summands_in_degree(long d) const;
  long summands_up_to_degree(long d) const;
};
OmegaRing omega_hp_ring(long m, long l);

}  // namespace verlinde::ktheory
