#pragma once

#include <functional>
#include <vector>

#include "verlinde/exact/cyclotomic.hpp"
#include "verlinde/exact/matrix.hpp"
#include "verlinde/exact/multipoly.hpp"
#include "verlinde/fusion/labels.hpp"

namespace verlinde::fusion {

// Entry k of A = (1, x_1, ..., x_n, 0, -x_n, ..., -x_1, -1), the coefficients of
// (1 - t^2) prod (1 + z_i t)(1 + t / z_i); `x` is 1-based, zero off the support.
// The last entry is -1: with +1, Sym^4 at n = 1 comes out as x^4 - 3x^2 - 1.
template <class T>
T bent_entry(int n, int k, const std::function<T(int)>& x, const T& zero, const T& one) {
  if (k < 0 || k > 2 * n + 2) return zero;
  if (k == 0) return one;
  if (k == 2 * n + 2) return zero - one;
  if (k <= n) return x(k);
  if (k == n + 1) return zero;
  return zero - x(2 * n + 2 - k);
}

// q x q matrix, row i = first q terms of A bent at mu_i - i + 1 (1-based i).
template <class T>
std::vector<std::vector<T>> bent_matrix(int n, const SpLabel& label, const std::function<T(int)>& x, const T& zero,
                                        const T& one) {
  auto mu = label.columns();
  int q = static_cast<int>(mu.size());
  std::vector<std::vector<T>> rows;
  for (int i = 0; i < q; ++i) {
    int b = mu[i] - i;
    std::vector<T> row;
    row.push_back(bent_entry<T>(n, b, x, zero, one));
    for (int j = 1; j < q; ++j) row.push_back(bent_entry<T>(n, b + j, x, zero, one) + bent_entry<T>(n, b - j, x, zero, one));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Division-free determinant by dynamic programming over column subsets.
template <class T>
T det_subset_dp(const std::vector<std::vector<T>>& a, const T& zero, const T& one) {
  std::size_t q = a.size();
  if (q == 0) return one;
  std::vector<T> dp(std::size_t(1) << q, zero);
  std::vector<bool> live(dp.size(), false);
  dp[0] = one;
  live[0] = true;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (!live[mask]) continue;
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == q) continue;
    for (std::size_t j = 0; j < q; ++j) {
      if (mask >> j & 1) continue;
      // sign from the number of already-used columns to the right of j
      int above = __builtin_popcountll(mask >> (j + 1));
      T term = dp[mask] * a[row][j];
      std::size_t next = mask | (std::size_t(1) << j);
      dp[next] = (above & 1) ? dp[next] - term : dp[next] + term;
      live[next] = true;
    }
  }
  return dp.back();
}

MultiPoly bent_character_poly(int n, const SpLabel& label);

// x_k(I) = e_k(Z) - e_{k-2}(Z), Z = {zeta_{2m}^{+-i_j}}
std::vector<CycNumber> fundamental_char_values(int m, int n, const EvalSet& point);
// the same values computed by direct expansion over subsets of Z
std::vector<CycNumber> fundamental_char_values_bruteforce(int m, int n, const EvalSet& point);

CycNumber character_value(int n, const SpLabel& label, const std::vector<CycNumber>& x);

// x_k at the identity: C(2n, k) - C(2n, k - 2)
std::vector<BigInt> fundamental_dimensions(int n);
// Bareiss determinant of the bent matrix at the dimension point
BigInt label_dimension(int n, const SpLabel& label);
// Weyl dimension formula for C_n
BigInt weyl_dimension(int n, const SpLabel& label);

}  // namespace verlinde::fusion
