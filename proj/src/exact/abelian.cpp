#include "verlinde/exact/abelian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace verlinde {

AbelianPStructure::AbelianPStructure(long p, std::vector<int> e) : prime(p), exponents(std::move(e)) {
  exponents.erase(std::remove(exponents.begin(), exponents.end(), 0), exponents.end());
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
}

AbelianPStructure AbelianPStructure::from_diagonal(long p, const std::vector<BigInt>& diag) {
  std::vector<int> e;
  for (const auto& d : diag) e.push_back(d == 0 ? kInfiniteExponent : valuation(d, p));
  return AbelianPStructure(p, std::move(e));
}

bool AbelianPStructure::finite() const {
  return std::none_of(exponents.begin(), exponents.end(), [](int e) { return e == kInfiniteExponent; });
}

long AbelianPStructure::total_exponent() const {
  if (!finite()) throw std::domain_error("AbelianPStructure: infinite group");
  return std::accumulate(exponents.begin(), exponents.end(), 0L);
}

std::string AbelianPStructure::to_string() const {
  if (exponents.empty()) return "0";
  std::string s;
  const std::string p = std::to_string(prime);
  for (std::size_t i = 0; i < exponents.size();) {
    std::size_t j = i;
    while (j < exponents.size() && exponents[j] == exponents[i]) ++j;
    if (!s.empty()) s += " + ";
    std::string term = exponents[i] == kInfiniteExponent ? "Z_" + p : "Z/" + p + "^" + std::to_string(exponents[i]);
    s += term;
    if (j - i > 1) s += "^(" + std::to_string(j - i) + ")";
    i = j;
  }
  return s;
}

}  // namespace verlinde
