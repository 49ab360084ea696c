#include "verlinde/exact/poly.hpp"

namespace verlinde {

ZPoly reduce_mod(const ZPoly& a, const BigInt& mod) {
  std::vector<BigInt> c;
  for (const auto& v : a.coeffs()) c.push_back(fmod_pos(v, mod));
  return ZPoly(std::move(c));
}

}  // namespace verlinde
