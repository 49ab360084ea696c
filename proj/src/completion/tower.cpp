#include "verlinde/completion/tower.hpp"

#include "verlinde/completion/delta.hpp"
#include "verlinde/exact/linalg.hpp"
#include "verlinde/sym/sym.hpp"

namespace verlinde::completion {

IntMatrix truncated_sigma_presentation(long m, int l) {
  ZPoly s = sym::sigma(static_cast<unsigned>(m - 1));
  IntMatrix rel(l + 1, l + 1, BigInt(0));
  for (int j = 0; j <= l; ++j)
    for (int i = 0; i + j <= l; ++i) rel(j, i + j) = s.coeff(i);
  return rel;
}

namespace {

IntMatrix with_precision(const IntMatrix& rel, const BigInt& pk) {
  std::size_t g = rel.cols();
  IntMatrix out(rel.rows() + g, g, BigInt(0));
  for (std::size_t i = 0; i < rel.rows(); ++i)
    for (std::size_t j = 0; j < g; ++j) out(i, j) = rel(i, j);
  for (std::size_t j = 0; j < g; ++j) out(rel.rows() + j, j) = pk;
  return out;
}

}  // namespace

TowerReport completion_tower_sp1(long m, int l_max, long p, int precision) {
  if (m < 2 || l_max < 0 || precision < 1) throw std::invalid_argument("completion_tower_sp1: bad parameters");
  TowerReport rep;
  rep.m = m;
  rep.p = p;
  rep.precision = precision;
  rep.delta = delta(p, m);
  BigInt pk = pow_big(BigInt(p), precision);
  for (int l = 0; l <= l_max; ++l) {
    TowerStage st;
    st.l = l;
    IntMatrix rel = with_precision(truncated_sigma_presentation(m, l), pk);
    st.structure = AbelianPStructure::from_diagonal(p, smith_diagonal(rel));
    for (int e : st.structure.exponents)
      if (e == precision) ++st.full_precision_summands;
    if (l >= 1) {
      // y^j -> y^j (j < l), y^l -> 0 sends each relation of stage l into stage l - 1
      IntMatrix prev = with_precision(truncated_sigma_presentation(m, l - 1), pk);
      Lattice lat(l);
      for (std::size_t i = 0; i < prev.rows(); ++i) {
        std::vector<BigInt> row;
        for (int j = 0; j < l; ++j) row.push_back(prev(i, j));
        lat.insert(row);
      }
      for (std::size_t i = 0; i < rel.rows(); ++i) {
        std::vector<BigInt> row;
        for (int j = 0; j < l; ++j) row.push_back(rel(i, j));
        if (!lat.contains(row)) st.well_defined_map = false;
      }
      // every generator of stage l - 1 is the image of a generator
      st.surjective = true;
    }
    rep.stages.push_back(st);
  }
  AbelianPStructure target(p, std::vector<int>(rep.delta, precision));
  for (int l = l_max; l >= 0; --l) {
    if (!(rep.stages[l].structure == target)) break;
    rep.stabilized_from = l;
  }
  return rep;
}

}  // namespace verlinde::completion
