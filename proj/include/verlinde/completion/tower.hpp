#pragma once

#include <optional>
#include <vector>

#include "verlinde/exact/abelian.hpp"
#include "verlinde/exact/matrix.hpp"

namespace verlinde::completion {

// rows y^j sigma^{m-1}(y) mod y^{l+1}, j = 0..l, over generators y^0..y^l
IntMatrix truncated_sigma_presentation(long m, int l);

struct TowerStage {
  int l = 0;
  AbelianPStructure structure;  // of Z[y]/(sigma, y^{l+1}) (x) Z/p^k
  long full_precision_summands = 0;
  bool well_defined_map = true;  // relations of stage l map into those of stage l - 1
  bool surjective = true;
};

struct TowerReport {
  long m = 0, p = 0;
  int precision = 0;
  long delta = 0;
  std::vector<TowerStage> stages;
  std::optional<int> stabilized_from;  // first l after which the structure is (Z/p^k)^delta
};

TowerReport completion_tower_sp1(long m, int l_max, long p, int precision);

}  // namespace verlinde::completion
