#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "verlinde/exact/monomial.hpp"
#include "verlinde/exact/multipoly.hpp"

namespace verlinde::completion {

struct FpTerm {
  Monomial mono;
  std::uint32_t coeff;
};

struct FpRing {
  std::uint32_t prime;
  int nvars;
  MonomialOrder order = MonomialOrder::kDegRevLex;
};

// Terms sorted descending in the ring's order, nonzero coefficients.
using FpPoly = std::vector<FpTerm>;

FpPoly fp_add(const FpRing& r, const FpPoly& a, const FpPoly& b);
// a - c * mono * b
FpPoly fp_sub_mul(const FpRing& r, const FpPoly& a, std::uint32_t c, const Monomial& mono, const FpPoly& b);
FpPoly fp_mul(const FpRing& r, const FpPoly& a, const FpPoly& b);
FpPoly fp_constant(const FpRing& r, long c);
FpPoly fp_var(const FpRing& r, int i);
FpPoly fp_monic(const FpRing& r, FpPoly a);
// integer polynomial read mod p after x_k -> x_k + shift[k]
FpPoly fp_from_multipoly(const FpRing& r, const MultiPoly& f, const std::vector<long>& shift = {});

struct GroebnerOptions {
  std::size_t max_steps = 500000;
  // variable i of the input becomes variable perm[i]; empty = identity
  std::vector<int> permutation;
};

class GroebnerBasisFp {
 public:
  FpRing ring;
  std::vector<FpPoly> basis;  // reduced, monic
  std::size_t pairs_processed = 0;

  FpPoly normal_form(const FpPoly& f) const;
  bool is_reduced() const;
  bool s_pairs_reduce_to_zero() const;
  // nullopt when the quotient is infinite-dimensional
  std::optional<std::size_t> standard_monomial_count() const;
  std::vector<Monomial> standard_monomials() const;
};

// Buchberger with the coprime-leading-monomial criterion and normal selection.
// Throws ResourceLimit past options.max_steps pair reductions.
GroebnerBasisFp buchberger(const FpRing& ring, std::vector<FpPoly> gens, const GroebnerOptions& options = {});

}  // namespace verlinde::completion
