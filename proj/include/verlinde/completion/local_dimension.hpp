#pragma once

#include <vector>

#include "verlinde/completion/groebner.hpp"
#include "verlinde/fusion/fusion_ring.hpp"
#include "verlinde/kernels/modp.hpp"

namespace verlinde::completion {

// characters of the level-(m - n) labels, in x_1..x_n
std::vector<MultiPoly> level_ideal_generators(int m, int n);

struct LocalDimensionReport {
  std::size_t dimension = 0;
  std::size_t basis_size = 0;
  std::size_t pairs_processed = 0;
  long nilpotency_exponent = 0;
};

// F_p-dimension of F_p[u]/(J_{m-n}(u + dim), u_i^N), N = C(m - 1, n)
LocalDimensionReport local_dimension_groebner(int m, int n, long p, const GroebnerOptions& options = {});

// dim_{F_p} F_p[x]/J_{m-n}; equals C(m - 1, n)
std::size_t global_dimension_groebner(int m, int n, long p);

// L - rank of the stacked (M_{x_k} - dim_k)^L mod p: the generalized
// eigenspace of the dimension character, p < 2^16
std::size_t local_dimension_linear(const fusion::FusionRing& ring, long p,
                                   const kernels::ModpKernels& k = kernels::active());

}  // namespace verlinde::completion
