#include "verlinde/completion/filtration.hpp"

#include <functional>

#include "verlinde/exact/fp_matrix.hpp"
#include "verlinde/exact/linalg.hpp"
#include "verlinde/fusion/douglas.hpp"
#include "verlinde/sym/sym.hpp"

namespace verlinde::completion {

namespace {

struct Model {
  int n;
  ZPoly modulus;
  std::vector<ZPoly> gammas;

  ZPoly reduce(const ZPoly& p) const { return divmod_monic(p, modulus).second; }
  std::vector<BigInt> vec(const ZPoly& p) const {
    ZPoly r = reduce(p);
    std::vector<BigInt> v;
    for (int j = 0; j <= n; ++j) v.push_back(r.coeff(j));
    return v;
  }
  ZPoly gamma_power(int i, int e) const {
    ZPoly r = ZPoly::constant(1);
    for (int k = 0; k < e; ++k) r = reduce(r * gammas[i - 1]);
    return r;
  }

  // ideal generated by gamma monomials of weight >= k
  Lattice level(int k) const {
    Lattice lat(n + 1);
    std::function<void(int, const ZPoly&, int)> rec = [&](int i, const ZPoly& cur, int w) {
      if (i == n) {
        if (w < k) return;
        ZPoly xj = cur;
        for (int j = 0; j <= n; ++j) {
          lat.insert(vec(xj));
          xj = reduce(xj * ZPoly::x());
        }
        return;
      }
      ZPoly acc = cur;
      for (int e = 0; w + e * (i + 1) <= k + n - 1; ++e) {
        rec(i + 1, acc, w + e * (i + 1));
        acc = reduce(acc * gammas[i]);
      }
    };
    rec(0, ZPoly::constant(1), 0);
    return lat;
  }
};

std::size_t rank_mod2(const Lattice& lat, int dim) {
  auto b = lat.basis();
  FpMatrix m(b.size(), dim, 2);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = static_cast<std::uint32_t>(fmod_pos(b[i][j], 2).get_ui());
  return m.rank();
}

}  // namespace

FiltrationReport associated_graded(int n, const std::vector<ZPoly>& gammas, int max_degree) {
  if (static_cast<int>(gammas.size()) != n) throw std::invalid_argument("associated_graded: need n gammas");
  Model model{n, sym::sym(static_cast<unsigned>(n + 1)), gammas};
  FiltrationReport rep;
  rep.n = n;
  for (int r = 1; r < 30; ++r)
    if ((1 << r) - 2 == n) rep.r = r;

  std::vector<Lattice> f;
  for (int k = 0; k <= max_degree + 1; ++k) f.push_back(model.level(k));

  for (int k = 0; k <= max_degree; ++k) {
    GradedPiece piece;
    piece.degree = k;
    auto sub = f[k + 1].basis();
    IntMatrix coords(sub.size(), f[k].rank(), BigInt(0));
    for (std::size_t i = 0; i < sub.size(); ++i) {
      auto c = f[k].coordinates(sub[i]);
      for (std::size_t j = 0; j < c.size(); ++j) coords(i, j) = c[j];
    }
    auto diag = smith_diagonal(coords);
    for (std::size_t j = diag.size(); j < f[k].rank(); ++j) diag.push_back(0);
    std::vector<BigInt> finite;
    for (const auto& d : diag)
      if (d != 1) finite.push_back(d);
    piece.structure = AbelianPStructure::from_diagonal(2, finite);
    // (F^k + 2V)/(F^{k+1} + 2V)
    Lattice a = f[k], b = f[k + 1];
    for (int j = 0; j <= n; ++j) {
      std::vector<BigInt> two(n + 1);
      two[j] = 2;
      a.insert(two);
      b.insert(two);
    }
    piece.generators = static_cast<int>(rank_mod2(a, n + 1)) - static_cast<int>(rank_mod2(b, n + 1));
    rep.generator_count += piece.generators;
    rep.pieces.push_back(piece);
  }

  std::vector<BigInt> two(n + 1);
  two[0] = 2;
  for (int k = 0; k <= max_degree + 1; ++k)
    if (f[k].contains(two)) rep.two_degree = k;

  if (rep.r >= 2) {
    int s = 1 << (rep.r - 1);
    auto g1 = [&](int e) { return model.gamma_power(1, e); };
    auto g = [&](int i) { return gammas[i - 1]; };
    auto in_next = [&](const ZPoly& p, int deg) {
      return deg + 1 <= max_degree + 1 ? f[deg + 1].contains(model.vec(p)) : model.level(deg + 1).contains(model.vec(p));
    };
    if (s <= max_degree) rep.two_matches_gamma = in_next(ZPoly::constant(2) - (g(s) + g1(s)), s);
    for (int i = 2; i <= s - 1; ++i)
      rep.relations.push_back({"g" + std::to_string(i) + " + g1^" + std::to_string(i), i, in_next(g(i) + g1(i), i)});
    for (int i = s + 1; i <= n; ++i)
      rep.relations.push_back({"g" + std::to_string(i) + " + g" + std::to_string(s) + "*g1^" + std::to_string(i - s), i,
                               in_next(g(i) + model.reduce(g(s) * g1(i - s)), i)});
    rep.relations.push_back({"g" + std::to_string(s) + "*g1^" + std::to_string(s - 1), 2 * s - 1,
                             in_next(model.reduce(g(s) * g1(s - 1)), 2 * s - 1)});
    for (int k = 0; k <= max_degree; ++k) {
      int count = 0;
      for (int b = 0; s * b <= k; ++b) {
        int a = k - s * b;
        if (b == 0 || a < s - 1) ++count;
      }
      rep.predicted_dims.push_back(count);
    }
  }
  return rep;
}

FiltrationReport gr_filtration(int r, int max_degree) {
  if (r < 2) throw std::invalid_argument("gr_filtration: need r >= 2");
  int n = (1 << r) - 2;
  if (max_degree < 0) max_degree = (1 << r) + 1;
  return associated_graded(n, fusion::gamma_polynomials(n), max_degree);
}

}  // namespace verlinde::completion
