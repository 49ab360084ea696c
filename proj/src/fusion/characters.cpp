#include "verlinde/fusion/characters.hpp"

#include "verlinde/exact/linalg.hpp"

namespace verlinde::fusion {

MultiPoly bent_character_poly(int n, const SpLabel& label) {
  std::function<MultiPoly(int)> x = [n](int k) { return MultiPoly::var(n, k - 1); };
  auto a = bent_matrix<MultiPoly>(n, label, x, MultiPoly(n), MultiPoly::constant(n, 1));
  return det_subset_dp<MultiPoly>(a, MultiPoly(n), MultiPoly::constant(n, 1));
}

namespace {

std::vector<CycNumber> torus_points(int m, const EvalSet& point) {
  unsigned order = static_cast<unsigned>(2 * m);
  std::vector<CycNumber> z;
  for (int i : point) {
    z.push_back(CycNumber::zeta_power(order, i));
    z.push_back(CycNumber::zeta_power(order, -i));
  }
  return z;
}

}  // namespace

std::vector<CycNumber> fundamental_char_values(int m, int n, const EvalSet& point) {
  unsigned order = static_cast<unsigned>(2 * m);
  auto z = torus_points(m, point);
  // e_k as coefficients of prod (1 + z t)
  std::vector<CycNumber> e(z.size() + 1, CycNumber(order));
  e[0] = CycNumber(order, BigRat(1));
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * z[i];
  std::vector<CycNumber> x;
  for (int k = 1; k <= n; ++k) x.push_back(k >= 2 ? e[k] - e[k - 2] : e[k]);
  return x;
}

std::vector<CycNumber> fundamental_char_values_bruteforce(int m, int n, const EvalSet& point) {
  unsigned order = static_cast<unsigned>(2 * m);
  auto z = torus_points(m, point);
  std::size_t s = z.size();
  std::vector<CycNumber> e(s + 1, CycNumber(order));
  for (std::size_t mask = 0; mask < (std::size_t(1) << s); ++mask) {
    CycNumber prod(order, BigRat(1));
    for (std::size_t i = 0; i < s; ++i)
      if (mask >> i & 1) prod *= z[i];
    e[__builtin_popcountll(mask)] += prod;
  }
  std::vector<CycNumber> x;
  for (int k = 1; k <= n; ++k) x.push_back(k >= 2 ? e[k] - e[k - 2] : e[k]);
  return x;
}

CycNumber character_value(int n, const SpLabel& label, const std::vector<CycNumber>& x) {
  unsigned order = x.at(0).order();
  CycNumber zero(order), one(order, BigRat(1));
  std::function<CycNumber(int)> xf = [&x](int k) { return x[k - 1]; };
  return det_subset_dp<CycNumber>(bent_matrix<CycNumber>(n, label, xf, zero, one), zero, one);
}

std::vector<BigInt> fundamental_dimensions(int n) {
  std::vector<BigInt> d;
  for (int k = 1; k <= n; ++k) d.push_back(binomial(2 * n, k) - binomial(2 * n, k - 2));
  return d;
}

BigInt label_dimension(int n, const SpLabel& label) {
  auto dims = fundamental_dimensions(n);
  std::function<BigInt(int)> x = [&dims](int k) { return dims[k - 1]; };
  auto rows = bent_matrix<BigInt>(n, label, x, BigInt(0), BigInt(1));
  IntMatrix a(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = rows[i][j];
  return det_exact(a);
}

// prod over positive roots of <lambda + rho, a> / <rho, a>, roots e_i +- e_j, 2 e_i
BigInt weyl_dimension(int n, const SpLabel& label) {
  std::vector<long> l(n), r(n);
  for (int i = 0; i < n; ++i) {
    r[i] = n - i;
    l[i] = label.rows[i] + r[i];
  }
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= l[i];
    den *= r[i];
    for (int j = i + 1; j < n; ++j) {
      num *= (l[i] - l[j]) * (l[i] + l[j]);
      den *= (r[i] - r[j]) * (r[i] + r[j]);
    }
  }
  return num / den;
}

}  // namespace verlinde::fusion
