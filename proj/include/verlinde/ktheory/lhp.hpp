#pragma once

#include <string>
#include <utility>
#include <vector>

#include "verlinde/exact/abelian.hpp"
#include "verlinde/exact/matrix.hpp"
#include "verlinde/ktheory/zring.hpp"

namespace verlinde::ktheory {

// Z[t, y]/(y^{l+1}, sigma^{m-1}(y) - (l+1) y^l t), t > y lex.
// t_truncation > 0 adds t^D; modulus != 0 adds that constant.
QuotientRingZ lhp_ring(long m, long l, int t_truncation = 0, const BigInt& modulus = 0);
// m^2 / gcd(m, l + 1)
BigInt lhp_characteristic_bound(long m, long l);

// generators t^n y^j, n < D, j <= l at column n(l+1) + j
IntMatrix lhp_presentation(long m, long l, int t_truncation);

struct TruncatedStructure {
  AbelianPStructure structure;
  int precision = 0;
  bool stable = false;  // same at precision + 4, all exponents below precision
};
TruncatedStructure lhp_truncated_oracle(long m, long l, long p, int t_truncation, int precision);

// t^n M / t^{n+1} M for n < D, M the p-adic truncated module
std::vector<AbelianPStructure> lhp_graded_pieces(long m, long l, long p, int t_truncation, int precision);

struct Cell {
  int table = 0, row = 0, col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct TablePath {
  int table = 0;
  int start_col = 0;
  int window = 0;  // a: starts lie in [(p^a-1)/(p-1) d, (p^{a+1}-1)/(p-1) d)
  bool critical = false;
  std::vector<Cell> cells;  // own cells, then cells taken from table + 1
  bool boundary = false;    // touches column l of the last table
  int length() const { return static_cast<int>(cells.size()); }
};

struct PathTable {
  long m = 0, l = 0, p = 0;
  int tables = 0;
  int rows = 0;  // v_p(m)
  std::vector<TablePath> paths;  // nonempty ones
  bool disjoint = false;         // every cell used exactly once
  std::vector<int> lengths() const;
  std::vector<int> in_window_lengths() const;  // boundary paths dropped
};
PathTable lhp_additive_path_table(long m, long l, long p, int t_truncation);

struct CoproductReport {
  long m = 0, l = 0, p = 0;
  BigInt nu_one;         // nu(1) = nu_one * y^l (x) y^l
  bool nu_t_nonzero = false;
  bool l_is_delta = false;
  // coefficients of sigma^{m-1} mod p vanish below y^l and not at y^l
  bool sigma_mod_p_starts_at_l = false;
};
CoproductReport coproduct_values(long m, long l, long p);

struct EulerReport {
  long l = 0;
  BigInt euler_coeff;  // E = (l+1) y^l
  bool square_vanishes = false;
  std::string t_description;
};
EulerReport euler_and_t(long l);

}  // namespace verlinde::ktheory
