#include "verlinde/completion/local_dimension.hpp"

#include "verlinde/exact/fp_matrix.hpp"
#include "verlinde/fusion/characters.hpp"

namespace verlinde::completion {

std::vector<MultiPoly> level_ideal_generators(int m, int n) {
  std::vector<MultiPoly> out;
  for (const auto& l : fusion::labels_of_level(n, m - n)) out.push_back(fusion::bent_character_poly(n, l));
  return out;
}

LocalDimensionReport local_dimension_groebner(int m, int n, long p, const GroebnerOptions& options) {
  if (m < n + 2) throw std::invalid_argument("local_dimension_groebner: need m >= n + 2");
  FpRing ring{static_cast<std::uint32_t>(p), n, MonomialOrder::kDegRevLex};
  std::vector<long> shift;
  for (const auto& d : fusion::fundamental_dimensions(n)) shift.push_back(to_long(fmod_pos(d, p)));
  std::vector<FpPoly> gens;
  for (const auto& f : level_ideal_generators(m, n)) gens.push_back(fp_from_multipoly(ring, f, shift));
  long big_n = to_long(binomial(m - 1, n));
  for (int k = 0; k < n; ++k) gens.push_back({FpTerm{Monomial::var(k, static_cast<unsigned>(big_n)), 1}});
  GroebnerBasisFp gb = buchberger(ring, std::move(gens), options);
  LocalDimensionReport rep;
  rep.dimension = gb.standard_monomial_count().value();
  rep.basis_size = gb.basis.size();
  rep.pairs_processed = gb.pairs_processed;
  rep.nilpotency_exponent = big_n;
  return rep;
}

std::size_t global_dimension_groebner(int m, int n, long p) {
  FpRing ring{static_cast<std::uint32_t>(p), n, MonomialOrder::kDegRevLex};
  std::vector<FpPoly> gens;
  for (const auto& f : level_ideal_generators(m, n)) gens.push_back(fp_from_multipoly(ring, f));
  auto count = buchberger(ring, std::move(gens)).standard_monomial_count();
  if (!count) throw std::logic_error("global_dimension_groebner: infinite quotient");
  return *count;
}

std::size_t local_dimension_linear(const fusion::FusionRing& ring, long p, const kernels::ModpKernels& k) {
  std::size_t L = ring.size();
  auto dims = fusion::fundamental_dimensions(ring.n);
  std::vector<FpMatrix> blocks;
  for (int i = 1; i <= ring.n; ++i) {
    IntMatrix u = ring.multiplication_matrix(ring.index_of(fusion::SpLabel::fundamental(ring.n, i)));
    for (std::size_t d = 0; d < L; ++d) u(d, d) -= dims[i - 1];
    blocks.push_back(FpMatrix::from_int(u, static_cast<std::uint32_t>(p)).power(L, k));
  }
  return L - FpMatrix::stack(blocks).rank(k);
}

}  // namespace verlinde::completion
