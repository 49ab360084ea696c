#include <doctest.h>

#include <algorithm>
#include <random>

#include "verlinde/completion/delta.hpp"
#include "verlinde/exact/linalg.hpp"
#include "verlinde/ktheory/lhp.hpp"
#include "verlinde/ktheory/y_group.hpp"
#include "verlinde/sym/sym.hpp"

using namespace verlinde;
using namespace verlinde::ktheory;

namespace {

int precision_for(long m, long l, long p) {
  int e = 0;
  auto ys = y_group_structure(m, l);
  for (int x : ys[p].exponents) e = std::max(e, x);
  return e + 2;
}

bool sub_multiset(std::vector<int> big, std::vector<int> small) {
  std::sort(big.begin(), big.end());
  std::sort(small.begin(), small.end());
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("Y group exponents agree with the Smith form") {
  for (long m = 2; m <= 12; ++m)
    for (long l = 1; l <= 6; ++l) {
      auto s = y_group_structure(m, l);
      for (long p : prime_divisors(m)) {
        auto oracle = y_group_oracle(m, l, p);
        CHECK_MESSAGE(s[p] == oracle, m, " ", l, " ", p);
        long sum = 0;
        for (long r = 1; r <= l + 1; ++r) sum += epsilon(p, l, r, m);
        CHECK(sum == oracle.total_exponent());
      }
    }
}

TEST_CASE("the printed exponent misses the i - j shift") {
  // 4 = 2^2: the first window gains 1
  CHECK(y_group_oracle(4, 2, 2).exponents == std::vector<int>{4, 1, 1});
  CHECK(y_group_structure(4, 2, EpsilonReading::kPrinted)[2].exponents == std::vector<int>{3, 1, 1});
  // prime m: both readings agree
  for (long l = 1; l <= 6; ++l) CHECK(y_group_structure(5, l) == y_group_structure(5, l, EpsilonReading::kPrinted));
}

TEST_CASE("Omega HP^l ring") {
  auto r = omega_hp_ring(6, 2);
  CHECK(r.generator_degree == 10);
  CHECK(r.summands_in_degree(1) == 0);
  CHECK(r.summands_in_degree(8) == 1);
  CHECK(r.summands_in_degree(10) == 2);
  CHECK(r.summands_up_to_degree(10) == 7);
  CHECK(omega_hp_ring(1, 3).zero_ring);
}

TEST_CASE("t-truncated oracle at the acceptance tuples") {
  struct Case { long m, l, p; int D; std::vector<int> expect; };
  std::vector<Case> cases{{2, 1, 2, 3, {2, 2, 2}},
                          {2, 3, 2, 3, {4, 4, 4}},
                          {4, 2, 2, 3, {4, 4, 4, 2, 2, 1, 1}},
                          {4, 3, 2, 3, {5, 5, 5, 2, 2, 2, 1, 1, 1}},
                          {6, 2, 2, 3, {3, 3, 3}},
                          {6, 2, 3, 3, {3, 3, 3}}};
  for (const auto& c : cases) {
    auto o = lhp_truncated_oracle(c.m, c.l, c.p, c.D, precision_for(c.m, c.l, c.p) + 3);
    CHECK(o.stable);
    CHECK(o.structure.exponents == c.expect);
    auto pt = lhp_additive_path_table(c.m, c.l, c.p, c.D);
    CHECK(pt.disjoint);
    CHECK(sub_multiset(o.structure.exponents, pt.in_window_lengths()));
    CHECK(pt.lengths() == c.expect);
  }
}

TEST_CASE("path table: every cell on exactly one path") {
  for (long m = 2; m <= 12; ++m)
    for (long l = 1; l <= 4; ++l)
      for (long p : prime_divisors(m)) {
        auto pt = lhp_additive_path_table(m, l, p, 3);
        CHECK(pt.disjoint);
        std::size_t cells = 0;
        for (const auto& path : pt.paths) cells += path.cells.size();
        CHECK(cells == static_cast<std::size_t>(3 * pt.rows * (l + 1)));
      }
}

TEST_CASE("path table against the oracle, known failure at m = 8") {
  for (long m = 2; m <= 12; ++m)
    for (long l = 1; l <= 3; ++l)
      for (long p : prime_divisors(m)) {
        auto pt = lhp_additive_path_table(m, l, p, 3);
        auto o = lhp_truncated_oracle(m, l, p, 3, precision_for(m, l, p));
        bool ok = sub_multiset(o.structure.exponents, pt.in_window_lengths());
        if (m == 8 && l == 1 && p == 2) CHECK_FALSE(ok);
        else CHECK_MESSAGE(ok, m, " ", l, " ", p);
      }
  auto pt = lhp_additive_path_table(8, 1, 2, 3);
  CHECK(pt.lengths() == std::vector<int>{4, 4, 3, 3, 2, 2});
}

TEST_CASE("Z Groebner basis of the lhp ring, additive structure vs SNF") {
  auto r = lhp_ring(4, 2, 3, pow_big(BigInt(2), 8));
  auto add = r.additive_structure();
  REQUIRE(add.has_value());
  std::vector<BigInt> two_part;
  for (const auto& d : *add)
    if (d != 0) two_part.push_back(d);
  auto o = lhp_truncated_oracle(4, 2, 2, 3, 8);
  CHECK(AbelianPStructure::from_diagonal(2, two_part) == o.structure);

  for (auto [m, l, p] : std::vector<std::tuple<long, long, long>>{{2, 1, 2}, {2, 3, 2}, {4, 3, 2}, {6, 2, 3}, {9, 2, 3}}) {
    int k = precision_for(m, l, p) + 3;
    auto ring = lhp_ring(m, l, 3, pow_big(BigInt(p), k));
    auto s = ring.additive_structure();
    REQUIRE(s.has_value());
    CHECK(AbelianPStructure::from_diagonal(p, *s) == lhp_truncated_oracle(m, l, p, 3, k).structure);
  }
}

TEST_CASE("untruncated ring: N is not the characteristic in general") {
  auto r = lhp_ring(2, 2);
  CHECK(r.is_zero(r.constant(8)));
  CHECK_FALSE(r.is_zero(r.constant(4)));
  CHECK(lhp_characteristic_bound(2, 2) == 4);
}

TEST_CASE("normal forms do not depend on the reduction order") {
  auto r = lhp_ring(4, 2);
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> e(0, 6), c(-20, 20);
  for (int i = 0; i < 1000; ++i) {
    Monomial mono = Monomial::var(0, e(rng)) * Monomial::var(1, e(rng));
    auto f = r.term(mono, c(rng) == 0 ? 1 : c(rng));
    auto a = r.normal_form(f, false), b = r.normal_form(f, true);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].mono == b[k].mono);
      CHECK(a[k].coeff == b[k].coeff);
    }
  }
}

TEST_CASE("graded pieces in t reproduce the Y group") {
  for (auto [m, l, p] : std::vector<std::tuple<long, long, long>>{{2, 1, 2}, {4, 2, 2}, {4, 3, 2}, {6, 2, 3}, {8, 2, 2}, {9, 3, 3}}) {
    auto y = y_group_oracle(m, l, p);
    int k = precision_for(m, l, p) + 3;
    for (const auto& g : lhp_graded_pieces(m, l, p, 3, k)) CHECK(g == y);
    // M / t M
    CHECK(lhp_truncated_oracle(m, l, p, 1, k).structure == y);
  }
}

TEST_CASE("coproduct: nu(t) != 0 exactly when l = delta(p, m)") {
  for (long m = 2; m <= 12; ++m)
    for (long l = 1; l <= 6; ++l)
      for (long p : prime_divisors(m)) {
        auto r = coproduct_values(m, l, p);
        CHECK(r.nu_one == fmod_pos(BigInt(l + 1), p));
        CHECK(r.sigma_mod_p_starts_at_l == r.l_is_delta);
        CHECK(r.l_is_delta == (completion::delta(p, m) == l));
        // independent look at sigma^{m-1} mod p
        ZPoly s = sym::sigma(static_cast<unsigned>(m - 1));
        long first = -1;
        for (int i = 0; i <= s.degree() && first < 0; ++i)
          if (fmod_pos(s.coeff(i), p) != 0) first = i;
        CHECK((first == l) == r.nu_t_nonzero);
      }
  CHECK(coproduct_values(4, 3, 2).nu_t_nonzero);
  CHECK_FALSE(coproduct_values(4, 2, 2).nu_t_nonzero);
}

TEST_CASE("Euler class squares to zero") {
  for (long l = 1; l <= 10; ++l) {
    auto r = euler_and_t(l);
    CHECK(r.euler_coeff == l + 1);
    CHECK(r.square_vanishes);
  }
}
