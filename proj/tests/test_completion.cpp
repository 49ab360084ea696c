#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "verlinde/completion/delta.hpp"
#include "verlinde/completion/filtration.hpp"
#include "verlinde/completion/local_dimension.hpp"
#include "verlinde/completion/tower.hpp"
#include "verlinde/exact/linalg.hpp"

using namespace verlinde;
using namespace verlinde::completion;

TEST_CASE("delta: closed form equals the count of p-power roots") {
  for (long m = 2; m <= 40; ++m)
    for (long p : {2L, 3L, 5L, 7L}) CHECK(delta(p, m) == delta_by_roots(p, m));
  CHECK(delta(2, 8) == 7);
  CHECK(delta(3, 9) == 4);
  CHECK(delta(5, 6) == 0);
}

TEST_CASE("completion ranks: Groebner local dimension equals C(delta, n)") {
  struct Case { int m, n; long p; std::size_t expect; };
  for (auto c : std::vector<Case>{{4, 2, 2, 3}, {6, 2, 2, 0}, {6, 2, 3, 0}, {8, 2, 2, 21}, {5, 3, 5, 0}}) {
    auto rep = local_dimension_groebner(c.m, c.n, c.p);
    CHECK(rep.dimension == c.expect);
    CHECK(BigInt(static_cast<unsigned long>(rep.dimension)) == completion_rank_formula(c.m, c.n, c.p));
  }
  for (int n = 1; n <= 2; ++n)
    for (int m = n + 2; m <= 8; ++m)
      for (long p : {2L, 3L, 5L}) {
        auto rep = local_dimension_groebner(m, n, p);
        CHECK(BigInt(static_cast<unsigned long>(rep.dimension)) == completion_rank_formula(m, n, p));
      }
}

TEST_CASE("local dimension does not depend on the variable order") {
  std::mt19937 rng(7);
  for (auto [m, n, p] : std::vector<std::tuple<int, int, long>>{{6, 3, 2}, {8, 2, 2}, {7, 3, 7}}) {
    std::size_t base = local_dimension_groebner(m, n, p).dimension;
    for (int trial = 0; trial < 3; ++trial) {
      GroebnerOptions opt;
      opt.permutation.resize(n);
      std::iota(opt.permutation.begin(), opt.permutation.end(), 0);
      std::shuffle(opt.permutation.begin(), opt.permutation.end(), rng);
      CHECK(local_dimension_groebner(m, n, p, opt).dimension == base);
    }
  }
}

TEST_CASE("generalized eigenspace of the fusion ring matches the Groebner count") {
  for (auto [m, n, p] : std::vector<std::tuple<int, int, long>>{{4, 2, 2}, {8, 2, 2}, {6, 2, 3}, {9, 2, 3}, {7, 3, 7}, {8, 1, 2}}) {
    auto ring = fusion::build_fusion_ring(m, n);
    std::size_t g = local_dimension_groebner(m, n, p).dimension;
    CHECK(local_dimension_linear(ring, p, kernels::scalar_kernels()) == g);
    if (const auto* avx = kernels::avx2_kernels()) CHECK(local_dimension_linear(ring, p, *avx) == g);
  }
}

TEST_CASE("the level ideal has colength C(m-1, n)") {
  for (int n = 1; n <= 3; ++n)
    for (int m = n + 2; m <= 8; ++m) CHECK(BigInt(static_cast<unsigned long>(global_dimension_groebner(m, n, 32003))) == binomial(m - 1, n));
}

TEST_CASE("Groebner bases are reduced and closed under S-pairs") {
  FpRing r{101, 2, MonomialOrder::kDegRevLex};
  auto x = fp_var(r, 0), y = fp_var(r, 1);
  // x^2 - y, x y - 1
  auto f = fp_sub_mul(r, fp_mul(r, x, x), 1, Monomial{}, y);
  auto g = fp_sub_mul(r, fp_mul(r, x, y), 1, Monomial{}, fp_constant(r, 1));
  auto gb = buchberger(r, {f, g});
  CHECK(gb.is_reduced());
  CHECK(gb.s_pairs_reduce_to_zero());
  // V(x^2 - y, xy - 1) = cube roots of unity: 3 points
  REQUIRE(gb.standard_monomial_count());
  CHECK(*gb.standard_monomial_count() == 3);
  CHECK(gb.normal_form(fp_mul(r, f, y)).empty());
}

TEST_CASE("truncated presentation of the Sp(1) completion tower") {
  IntMatrix a = truncated_sigma_presentation(4, 2);
  CHECK(a.rows() == 3);
  CHECK(a.cols() == 3);
  // sigma^3(y) = Sym^3(y + 2) = y^3 + 6y^2 + 10y + 4
  CHECK(a(0, 0) == 4);
  CHECK(a(0, 1) == 10);
  CHECK(a(0, 2) == 6);
  CHECK(a(1, 1) == 4);
  for (long m : {4L, 8L, 9L})
    for (long p : prime_divisors(m)) {
      auto rep = completion_tower_sp1(m, 8, p, 4);
      CHECK(rep.delta == delta(p, m));
      for (const auto& st : rep.stages) {
        CHECK(st.well_defined_map);
        CHECK(st.surjective);
      }
    }
}

namespace {

// F_2[g_1, g_s]/(g_s g_1^{s-1}), deg g_1 = 1, deg g_s = s
std::vector<int> predicted(int s, int max_degree) {
  std::vector<int> out;
  for (int k = 0; k <= max_degree; ++k) {
    int c = 0;
    for (int b = 0; b * s <= k; ++b) {
      int a = k - b * s;
      if (!(b >= 1 && a >= s - 1)) ++c;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("associated graded for r = 2") {
  auto rep = gr_filtration(2);
  CHECK(rep.n == 2);
  REQUIRE(rep.pieces.size() >= 3);
  for (int k = 0; k < 3; ++k) CHECK(rep.pieces[k].generators == 1);
  for (std::size_t k = 3; k < rep.pieces.size(); ++k) CHECK(rep.pieces[k].generators == 0);
  CHECK(rep.two_degree == 2);
  CHECK(rep.two_matches_gamma);
  auto pred = predicted(2, static_cast<int>(rep.pieces.size()) - 1);
  for (std::size_t k = 0; k < rep.pieces.size(); ++k) {
    CHECK(static_cast<int>(rep.pieces[k].structure.summands()) == pred[k]);
    CHECK(rep.predicted_dims[k] == pred[k]);
  }
  for (const auto& rc : rep.relations) CHECK_MESSAGE(rc.holds, rc.name);
}

TEST_CASE("associated graded for r = 3") {
  auto rep = gr_filtration(3);
  CHECK(rep.n == 6);
  CHECK(rep.two_degree == 4);
  CHECK(rep.two_matches_gamma);
  CHECK(rep.generator_count == 7);
  auto pred = predicted(4, static_cast<int>(rep.pieces.size()) - 1);
  for (std::size_t k = 0; k < rep.pieces.size(); ++k) CHECK(static_cast<int>(rep.pieces[k].structure.summands()) == pred[k]);
  // degree 4 carries one class beyond its generators: the class of 2
  CHECK(static_cast<int>(rep.pieces[4].structure.summands()) == rep.pieces[4].generators + 1);
  for (const auto& rc : rep.relations) CHECK_MESSAGE(rc.holds, rc.name);
}
