#pragma once

#include "verlinde/exact/bigint.hpp"
#include "verlinde/exact/poly.hpp"

#include <vector>

namespace verlinde::fusion {

// gcd of dimensions of the level-(m - n) labels
BigInt braun_douglas(int m, int n);
// same gcd restricted to labels with exactly `level` columns and at most n rows
BigInt dimension_gcd_at_level(int n, int level);

// S(m, i) = sum_{s=1}^{m} C(2s - 1, i)
BigInt douglas_sum(long m, long i);
// sum_{j=-m}^{-1} C(2j + i, i) with the falling-factorial binomial
BigInt douglas_sum_generalized(long m, long i);
BigInt braun_douglas_via_sums(long m, long n);

enum class ClosedFormReading { kPrinted, kNumeratorM };
// K = prod_p p^{e_p}, p^{e_p} the largest power with delta(p, p^e) < n
BigInt closed_form_K(long n);
BigInt braun_douglas_closed_form(long m, long n, ClosedFormReading reading);

// gamma_1..gamma_n as polynomials in x: coefficient of t^{i+1} in
// (1 + t)^{-(2n - 2i)} / (t^2 - t x + 1)
std::vector<ZPoly> gamma_polynomials(int n);
// Lambda^{i+1}(x - c) - Lambda^{i-1}(x - c), c = 2n - 2i, Lambda^k(x) = sum_j Sym^{k-2j}(x)
std::vector<ZPoly> gamma_polynomials_via_lambda(int n);

// gamma_{i+1} computed in R(Sp(n)) at the torus point (zeta_{2m}^{a_1..a_i}, 1, ..., 1);
// vanishes since x - c restricts to the defining representation of Sp(i).
bool gamma_vanishes_on_subgroup(int n, int i, int m, const std::vector<int>& exponents);

}  // namespace verlinde::fusion
