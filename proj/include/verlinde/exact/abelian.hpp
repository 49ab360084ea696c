#pragma once

#include <limits>
#include <string>
#include <vector>

#include "verlinde/exact/bigint.hpp"

namespace verlinde {

inline constexpr int kInfiniteExponent = std::numeric_limits<int>::max();

// sum of Z/p^e, e = kInfiniteExponent standing for Z_p; exponents descending.
struct AbelianPStructure {
  long prime = 0;
  std::vector<int> exponents;

  AbelianPStructure() = default;
  AbelianPStructure(long p, std::vector<int> e);

  // p-part of the group with the given SNF diagonal (zero entries are Z_p)
  static AbelianPStructure from_diagonal(long p, const std::vector<BigInt>& diag);

  std::size_t summands() const { return exponents.size(); }
  bool finite() const;
  long total_exponent() const;  // log_p of the order; throws if infinite
  std::string to_string() const;
  friend bool operator==(const AbelianPStructure&, const AbelianPStructure&) = default;
};

}  // namespace verlinde
