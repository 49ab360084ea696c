#include "verlinde/fusion/douglas.hpp"

#include "verlinde/completion/delta.hpp"
#include "verlinde/exact/cyclotomic.hpp"
#include "verlinde/fusion/characters.hpp"
#include "verlinde/sym/sym.hpp"

namespace verlinde::fusion {

BigInt dimension_gcd_at_level(int n, int level) {
  BigInt g = 0;
  for (const auto& l : labels_of_level(n, level)) g = gcd(g, label_dimension(n, l));
  return g;
}

BigInt braun_douglas(int m, int n) {
  if (m < n + 2) throw std::invalid_argument("braun_douglas: need m >= n + 2");
  return dimension_gcd_at_level(n, m - n);
}

BigInt douglas_sum(long m, long i) {
  BigInt s = 0;
  for (long k = 1; k <= m; ++k) s += binomial(2 * k - 1, i);
  return s;
}

BigInt douglas_sum_generalized(long m, long i) {
  BigInt s = 0;
  for (long j = -m; j <= -1; ++j) s += binomial(2 * j + i, i);
  return s;
}

BigInt braun_douglas_via_sums(long m, long n) {
  BigInt g = 0;
  for (long i = 0; i <= 2 * (n - 1); i += 2) g = gcd(g, douglas_sum(m, i));
  return abs(g);
}

BigInt closed_form_K(long n) {
  BigInt k = 1;
  // delta(p, p) = (p - 1) / 2 >= n once p > 2n
  for (long p = 2; p <= 2 * n + 1; ++p) {
    if (!is_prime(p)) continue;
    long pe = 1;
    while (completion::delta(p, pe * p) < n) pe *= p;
    k *= pe;
  }
  return k;
}

BigInt braun_douglas_closed_form(long m, long n, ClosedFormReading reading) {
  BigInt k = closed_form_K(n);
  BigInt num = reading == ClosedFormReading::kPrinted ? BigInt(n) : BigInt(m);
  return num / gcd(num, k);
}

std::vector<ZPoly> gamma_polynomials(int n) {
  std::vector<ZPoly> out;
  for (int i = 0; i < n; ++i) {
    long c = 2L * n - 2L * i;
    ZPoly g;
    for (int j = 0; j <= i + 1; ++j) g += binomial(-c, i + 1 - j) * sym::sym(j);
    out.push_back(g);
  }
  return out;
}

namespace {

ZPoly lambda_level1(int k) {
  ZPoly s;
  for (int j = k; j >= 0; j -= 2) s += sym::sym(j);
  return s;
}

// Lambda^k(x - c) = sum_a Lambda^{k-a}(x) C(-c, a)
ZPoly lambda_shifted(int k, long c) {
  ZPoly s;
  for (int a = 0; a <= k; ++a) s += binomial(-c, a) * lambda_level1(k - a);
  return s;
}

}  // namespace

std::vector<ZPoly> gamma_polynomials_via_lambda(int n) {
  std::vector<ZPoly> out;
  for (int i = 0; i < n; ++i) {
    long c = 2L * n - 2L * i;
    ZPoly g = lambda_shifted(i + 1, c);
    if (i >= 1) g -= lambda_shifted(i - 1, c);
    out.push_back(g);
  }
  return out;
}

bool gamma_vanishes_on_subgroup(int n, int i, int m, const std::vector<int>& exponents) {
  unsigned order = static_cast<unsigned>(2 * m);
  std::vector<CycNumber> z;
  for (int a = 0; a < i; ++a) {
    z.push_back(CycNumber::zeta_power(order, exponents.at(a)));
    z.push_back(CycNumber::zeta_power(order, -exponents.at(a)));
  }
  while (static_cast<int>(z.size()) < 2 * n) z.push_back(CycNumber(order, BigRat(1)));
  // Lambda^k of the defining representation = e_k of the weights
  std::vector<CycNumber> e(z.size() + 1, CycNumber(order));
  e[0] = CycNumber(order, BigRat(1));
  for (std::size_t s = 0; s < z.size(); ++s)
    for (std::size_t k = s + 1; k >= 1; --k) e[k] += e[k - 1] * z[s];
  long c = 2L * n - 2L * i;
  auto lam = [&](int k) {
    CycNumber acc(order);
    for (int a = 0; a <= k; ++a) acc += e[k - a] * binomial(-c, a);
    return acc;
  };
  CycNumber g = lam(i + 1);
  if (i >= 1) g -= lam(i - 1);
  return g.is_zero();
}

}  // namespace verlinde::fusion
