#include <doctest.h>

#include <complex>
#include <functional>
#include <numeric>
#include <random>

#include "verlinde/exact/abelian.hpp"
#include "verlinde/exact/cyclotomic.hpp"
#include "verlinde/exact/linalg.hpp"
#include "verlinde/exact/monomial.hpp"
#include "verlinde/exact/multipoly.hpp"
#include "verlinde/exact/poly.hpp"

using namespace verlinde;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c, BigInt(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// cofactor expansion along the first row
BigInt det_cofactor(const IntMatrix& a) {
  std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  BigInt s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1, BigInt(0));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != j) minor(i - 1, kk++) = a(i, k);
    BigInt t = a(0, j) * det_cofactor(minor);
    s += (j % 2 ? -t : t);
  }
  return s;
}

// gcd of all k x k minors
BigInt determinantal_divisor(const IntMatrix& a, std::size_t k) {
  BigInt g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::size_t, std::function<void()>)> choose =
      [&](std::size_t start, std::size_t depth, std::vector<std::size_t>& out, std::size_t limit, std::function<void()> f) {
        if (depth == k) return f();
        for (std::size_t i = start; i < limit; ++i) {
          out[depth] = i;
          choose(i + 1, depth + 1, out, limit, f);
        }
      };
  choose(0, 0, rs, a.rows(), [&] {
    choose(0, 0, cs, a.cols(), [&] {
      IntMatrix sub(k, k, BigInt(0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rs[i], cs[j]);
      BigInt d = det_cofactor(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (int t = 0; t < 20; ++t) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    int f = d(rng);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
  }
  return u;
}

std::complex<double> numeric(const CycNumber& z, unsigned order) {
  std::complex<double> acc = 0;
  const double pi = std::acos(-1.0);
  std::complex<double> zeta = std::polar(1.0, 2 * pi / order);
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) acc += z.coeff(i).get_d() * std::pow(zeta, static_cast<double>(i));
  return acc;
}

}  // namespace

TEST_CASE("binomial with negative upper argument") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-3, 2) == 6);  // (-3)(-4)/2
  CHECK(binomial(-1, 5) == -1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(4, -1) == 0);
}

TEST_CASE("valuations and primes") {
  CHECK(valuation(48L, 2) == 4);
  CHECK(valuation(BigInt(81), 3) == 4);
  CHECK(prime_divisors(360) == std::vector<long>{2, 3, 5});
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65535));
  CHECK(fmod_pos(BigInt(-7), BigInt(3)) == 2);
  CHECK(fdiv(BigInt(-7), BigInt(3)) == -3);
}

TEST_CASE("Bareiss determinant against cofactor expansion and multiplicativity") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + t % 6;
    IntMatrix a = random_matrix(rng, n, n, -9, 9), b = random_matrix(rng, n, n, -9, 9);
    CHECK(det_exact(a) == det_cofactor(a));
    CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
  }
  IntMatrix sing(3, 3, BigInt(1));
  CHECK(det_exact(sing) == 0);
}

TEST_CASE("Smith normal form: determinantal divisors and scramble invariance") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 2 + t % 3, c = 2 + (t / 3) % 3;
    IntMatrix a = random_matrix(rng, r, c, -12, 12);
    auto s = smith_normal_form(a);
    // d_1 ... d_k = gcd of k x k minors
    BigInt prod = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      prod *= s.diagonal[k - 1];
      CHECK(prod == determinantal_divisor(a, k));
    }
    for (std::size_t k = 1; k < s.diagonal.size(); ++k)
      if (s.diagonal[k - 1] != 0) CHECK(s.diagonal[k] % s.diagonal[k - 1] == 0);
    // left * a * right is diagonal
    IntMatrix d = s.left * a * s.right;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) CHECK(d(i, j) == (i == j ? s.diagonal[i] : BigInt(0)));
    CHECK(abs(det_exact(s.left)) == 1);
    CHECK(abs(det_exact(s.right)) == 1);
    IntMatrix scrambled = random_unimodular(rng, r) * a * random_unimodular(rng, c);
    CHECK(smith_diagonal(scrambled) == s.diagonal);
  }
}

TEST_CASE("abelian p-structure from a diagonal") {
  auto s = AbelianPStructure::from_diagonal(2, {BigInt(1), BigInt(12), BigInt(8), BigInt(0), BigInt(3)});
  CHECK(s.exponents == std::vector<int>{kInfiniteExponent, 3, 2});
  CHECK_FALSE(s.finite());
  auto f = AbelianPStructure(3, {0, 2, 1});
  CHECK(f.exponents == std::vector<int>{2, 1});
  CHECK(f.total_exponent() == 3);
}

TEST_CASE("lattice membership and coordinates") {
  Lattice lat(3);
  lat.insert({BigInt(2), BigInt(0), BigInt(4)});
  lat.insert({BigInt(0), BigInt(3), BigInt(3)});
  CHECK(lat.rank() == 2);
  CHECK(lat.contains({BigInt(2), BigInt(3), BigInt(7)}));
  CHECK_FALSE(lat.contains({BigInt(1), BigInt(0), BigInt(2)}));
  std::vector<BigInt> v{BigInt(4), BigInt(-3), BigInt(5)};
  auto c = lat.coordinates(v);
  auto b = lat.basis();
  for (std::size_t j = 0; j < 3; ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += c[i] * b[i][j];
    CHECK(s == v[j]);
  }
  lat.insert({BigInt(0), BigInt(0), BigInt(5)});
  CHECK(lat.full_rank());
  CHECK(lat.index() == 30);
}

TEST_CASE("polynomials") {
  ZPoly x = ZPoly::x();
  ZPoly p = x * x - ZPoly::constant(3) * x + ZPoly::constant(2);
  CHECK(p.evaluate(BigInt(5)) == 12);
  CHECK(p.shifted(1).evaluate(BigInt(4)) == 12);
  auto [q, r] = divmod_monic(p * (x + ZPoly::constant(7)) + ZPoly::constant(4), p);
  CHECK(q == x + ZPoly::constant(7));
  CHECK(r == ZPoly::constant(4));
  CHECK(p.truncated(1) == ZPoly::constant(2));
}

TEST_CASE("cyclotomic polynomials vanish at zeta and the inverse is exact") {
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u, 15u, 20u, 24u}) {
    ZPoly phi = cyclotomic_poly(n);
    CHECK(phi.degree() == euler_phi(n));
    CycNumber z = CycNumber::zeta_power(n, 1);
    CycNumber acc(n);
    CycNumber pw(n, BigRat(1));
    for (int i = 0; i <= phi.degree(); ++i) {
      acc += pw * phi.coeff(i);
      pw = pw * z;
    }
    CHECK(acc.is_zero());
    CHECK(pw == CycNumber::zeta_power(n, phi.degree() + 1));
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  for (unsigned n : {5u, 8u, 12u, 14u, 18u}) {
    for (int t = 0; t < 10; ++t) {
      CycNumber a(n);
      for (int k = 0; k < 4; ++k) a += CycNumber::zeta_power(n, d(rng)) * BigInt(d(rng));
      if (a.is_zero()) continue;
      CHECK((a * a.inverse()) == CycNumber(n, BigRat(1)));
      auto num = numeric(a, n), inv = numeric(a.inverse(), n);
      CHECK(std::abs(num * inv - 1.0) < 1e-9);
      // Galois conjugate k = -1 is complex conjugation
      CHECK(std::abs(numeric(a.galois(n - 1), n) - std::conj(num)) < 1e-9);
    }
  }
  CycNumber half(10, BigRat(1, 2));
  CHECK(half.as_rational() == BigRat(1, 2));
  CHECK_FALSE(half.as_integer().has_value());
}

TEST_CASE("monomial orders") {
  Monomial a = Monomial::var(0, 2), b = Monomial::var(1, 3), c = Monomial::var(0) * Monomial::var(1);
  CHECK(compare(a, b, MonomialOrder::kLex) > 0);
  CHECK(compare(a, b, MonomialOrder::kDegRevLex) < 0);
  CHECK(compare(c, a, MonomialOrder::kDegRevLex) < 0);
  CHECK(Monomial::lcm(a, c) == Monomial::var(0, 2) * Monomial::var(1));
  CHECK(c.divides(a * b));
  CHECK_FALSE(b.divides(c));
}

TEST_CASE("multivariate polynomials evaluate consistently") {
  MultiPoly x = MultiPoly::var(2, 0), y = MultiPoly::var(2, 1);
  MultiPoly f = x * x * y - BigInt(3) * y + MultiPoly::constant(2, 5);
  CHECK(f.evaluate<BigInt>({BigInt(2), BigInt(7)}, BigInt(1)) == 4 * 7 - 21 + 5);
  CHECK((f - f).is_zero());
  CHECK(f.total_degree() == 3);
}

TEST_CASE("exact field solve over Q") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int t = 0; t < 10; ++t) {
    std::size_t n = 4;
    Matrix<BigRat> a(n, n, BigRat(0));
    std::vector<BigRat> x(n), b(n, BigRat(0));
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = BigRat(d(rng), 1 + (t % 3));
      x[i].canonicalize();
      for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += a(i, j) * x[j];
    IntMatrix ai(n, n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ai(i, j) = a(i, j).get_num();
    if (det_exact(ai) == 0) continue;
    struct Q {
      BigRat v;
      bool is_zero() const { return v == 0; }
      Q inverse() const { return {1 / v}; }
      Q operator*(const Q& o) const { return {v * o.v}; }
      Q& operator-=(const Q& o) { v -= o.v; return *this; }
      Q& operator*=(const Q& o) { v *= o.v; return *this; }
    };
    Matrix<Q> aq(n, n, Q{0});
    std::vector<Q> bq;
    for (std::size_t i = 0; i < n; ++i) {
      bq.push_back({b[i]});
      for (std::size_t j = 0; j < n; ++j) aq(i, j) = {a(i, j)};
    }
    auto sol = solve_exact(aq, bq);
    for (std::size_t i = 0; i < n; ++i) CHECK(sol[i].v == x[i]);
  }
}
