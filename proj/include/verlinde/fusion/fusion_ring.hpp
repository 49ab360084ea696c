#pragma once

#include <stdexcept>
#include <vector>

#include "verlinde/exact/cyclotomic.hpp"
#include "verlinde/exact/matrix.hpp"
#include "verlinde/fusion/labels.hpp"

namespace verlinde::fusion {

struct NonIntegralFusion : std::logic_error {
  using std::logic_error::logic_error;
};
struct NegativeFusion : std::logic_error {
  using std::logic_error::logic_error;
};

class FusionRing {
 public:
  int m = 0, n = 0;
  std::vector<SpLabel> labels;
  std::vector<EvalSet> points;
  // char_matrix[a][I]
  std::vector<std::vector<CycNumber>> char_matrix;

  std::size_t size() const { return labels.size(); }
  // N^c_{ab}
  long coeff(std::size_t a, std::size_t b, std::size_t c) const { return n_[(a * size() + b) * size() + c]; }
  std::size_t index_of(const SpLabel& l) const;
  std::size_t unit() const { return 0; }

  // M[c][b] = N^c_{ab}: multiplication by label a in the label basis
  IntMatrix multiplication_matrix(std::size_t a) const;
  // multiplication by an element given in label coordinates
  IntMatrix multiplication_matrix(const std::vector<BigInt>& element) const;
  std::vector<BigInt> product(const std::vector<BigInt>& u, const std::vector<BigInt>& v) const;

  bool check_associativity() const;

 private:
  friend FusionRing build_fusion_ring(int m, int n);
  std::vector<long> n_;
};

// Structure constants by solving against the character matrix over Q(zeta_2m).
FusionRing build_fusion_ring(int m, int n);

// multiplication by sum_a a * a (every label is self-dual)
IntMatrix handle_operator(const FusionRing& r);
BigInt det_T(const FusionRing& r);

// (-2)^{m-1} m^{m-3}
BigInt det_T_formula_sp1(long m);
// kPrinted: 2^{(m-1) C(m-3, n-2)} m^{(m-3) C(m-3, n-2)}.
// kShifted uses C(m-3, n-1), i.e. |det T in V(m,1)|^{C(m-3, n-1)}; this is what
// the computed determinants follow.
enum class ConjectureReading { kPrinted, kShifted };
BigInt det_T_conjecture(long m, long n, ConjectureReading reading = ConjectureReading::kPrinted);

}  // namespace verlinde::fusion
