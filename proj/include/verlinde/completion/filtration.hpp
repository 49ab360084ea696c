#pragma once

#include <string>
#include <vector>

#include "verlinde/exact/abelian.hpp"
#include "verlinde/exact/poly.hpp"

namespace verlinde::completion {

struct GradedPiece {
  int degree = 0;
  AbelianPStructure structure;  // F^k / F^{k+1}
  int generators = 0;           // dim (F^k + 2V) / (F^{k+1} + 2V)
};

struct RelationCheck {
  std::string name;
  int degree = 0;
  bool holds = false;  // lies in F^{degree + 1}
};

struct FiltrationReport {
  int n = 0;
  int r = 0;
  std::vector<GradedPiece> pieces;
  std::vector<int> predicted_dims;  // from F_2[g_1, g_s]/(g_s g_1^{s-1}), s = 2^{r-1}
  int two_degree = -1;              // largest k with 2 in F^k
  bool two_matches_gamma = false;   // 2 - (g_s + g_1^s) in F^{s+1}
  std::vector<RelationCheck> relations;
  int generator_count = 0;
};

// Filtration of Z[x]/(Sym^{n+1}(x)) by weighted degree in the gammas
// (deg gamma_i = i), pieces in degrees 0..max_degree.
FiltrationReport associated_graded(int n, const std::vector<ZPoly>& gammas, int max_degree);

// n = 2^r - 2 with gamma_polynomials(n)
FiltrationReport gr_filtration(int r, int max_degree = -1);

}  // namespace verlinde::completion
