#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verlinde/exact/bigint.hpp"
#include "verlinde/exact/monomial.hpp"

namespace verlinde::ktheory {

struct ZTerm {
  Monomial mono;
  BigInt coeff;
};
// terms sorted by decreasing monomial, coefficients nonzero
using ZPolyM = std::vector<ZTerm>;

class QuotientRingZ {
 public:
  // Z[x_0..x_{k-1}]/(relations). Variable 0 is the largest.
  QuotientRingZ(std::vector<std::string> names, std::vector<ZPolyM> relations,
                MonomialOrder order = MonomialOrder::kLex, std::size_t max_pairs = 200000);

  int nvars() const { return static_cast<int>(names_.size()); }
  MonomialOrder order() const { return order_; }
  const std::vector<ZPolyM>& groebner_basis() const { return basis_; }
  std::size_t pairs_processed() const { return pairs_; }

  // canonical remainder; reverse walks the basis in the opposite order
  ZPolyM normal_form(const ZPolyM& f, bool reverse = false) const;
  bool is_zero(const ZPolyM& f) const { return normal_form(f).empty(); }

  // SNF diagonal of the underlying abelian group (entries != 1; 0 = Z), or
  // nullopt if some variable is not nilpotent modulo the leading monomials
  std::optional<std::vector<BigInt>> additive_structure() const;

  // polynomial helpers in this ring's order
  ZPolyM constant(const BigInt& c) const;
  ZPolyM var(int i, unsigned power = 1) const;
  ZPolyM term(const Monomial& m, const BigInt& c) const;
  ZPolyM add(const ZPolyM& a, const ZPolyM& b) const;
  ZPolyM sub(const ZPolyM& a, const ZPolyM& b) const;
  ZPolyM mul(const ZPolyM& a, const ZPolyM& b) const;
  ZPolyM scale(const ZPolyM& a, const BigInt& c, const Monomial& m) const;
  std::string to_string(const ZPolyM& f) const;

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<ZPolyM> basis_;
  std::size_t pairs_ = 0;

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b, order_) > 0; }
  ZPolyM reduce(ZPolyM f, const std::vector<ZPolyM>& g, bool reverse) const;
};

}  // namespace verlinde::ktheory
