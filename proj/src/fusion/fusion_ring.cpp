#include "verlinde/fusion/fusion_ring.hpp"

#include <algorithm>
#include <random>

#include "verlinde/exact/linalg.hpp"
#include "verlinde/fusion/characters.hpp"

namespace verlinde::fusion {

std::size_t FusionRing::index_of(const SpLabel& l) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || !(*it == l)) throw std::out_of_range("FusionRing: unknown label " + l.to_string());
  return static_cast<std::size_t>(it - labels.begin());
}

IntMatrix FusionRing::multiplication_matrix(std::size_t a) const {
  std::size_t L = size();
  IntMatrix mat(L, L);
  for (std::size_t b = 0; b < L; ++b)
    for (std::size_t c = 0; c < L; ++c) mat(c, b) = coeff(a, b, c);
  return mat;
}

IntMatrix FusionRing::multiplication_matrix(const std::vector<BigInt>& element) const {
  std::size_t L = size();
  IntMatrix mat(L, L, BigInt(0));
  for (std::size_t a = 0; a < L; ++a) {
    if (element[a] == 0) continue;
    for (std::size_t b = 0; b < L; ++b)
      for (std::size_t c = 0; c < L; ++c)
        if (long k = coeff(a, b, c)) mat(c, b) += element[a] * k;
  }
  return mat;
}

std::vector<BigInt> FusionRing::product(const std::vector<BigInt>& u, const std::vector<BigInt>& v) const {
  std::size_t L = size();
  std::vector<BigInt> out(L);
  for (std::size_t a = 0; a < L; ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < L; ++b) {
      if (v[b] == 0) continue;
      BigInt s = u[a] * v[b];
      for (std::size_t c = 0; c < L; ++c)
        if (long k = coeff(a, b, c)) out[c] += s * k;
    }
  }
  return out;
}

bool FusionRing::check_associativity() const {
  std::size_t L = size();
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (std::size_t e = 0; e < L; ++e) {
      long lhs = 0, rhs = 0;
      for (std::size_t d = 0; d < L; ++d) {
        lhs += coeff(a, b, d) * coeff(d, c, e);
        rhs += coeff(b, c, d) * coeff(a, d, e);
      }
      if (lhs != rhs) return false;
    }
    return true;
  };
  if (L <= 60) {
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b < L; ++b)
        for (std::size_t c = 0; c < L; ++c)
          if (!check(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(L);
  std::uniform_int_distribution<std::size_t> pick(0, L - 1);
  for (int t = 0; t < 20000; ++t)
    if (!check(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

FusionRing build_fusion_ring(int m, int n) {
  FusionRing r;
  r.m = m;
  r.n = n;
  r.labels = verlinde_labels(m, n);
  r.points = eval_sets(m, n);
  std::size_t L = r.labels.size();
  if (r.points.size() != L) throw std::logic_error("build_fusion_ring: label/point count mismatch");
  unsigned order = static_cast<unsigned>(2 * m);

  for (const auto& lab : r.labels) {
    std::vector<CycNumber> row;
    for (const auto& pt : r.points) row.push_back(character_value(n, lab, fundamental_char_values(m, n, pt)));
    r.char_matrix.push_back(std::move(row));
  }

  // B^T: rows indexed by points, columns by labels
  Matrix<CycNumber> bt(L, L, CycNumber(order));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t c = 0; c < L; ++c) bt(i, c) = r.char_matrix[c][i];
  FieldLU<CycNumber> lu(std::move(bt));

  r.n_.assign(L * L * L, 0);
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = a; b < L; ++b) {
      std::vector<CycNumber> rhs;
      for (std::size_t i = 0; i < L; ++i) rhs.push_back(r.char_matrix[a][i] * r.char_matrix[b][i]);
      auto sol = lu.solve(rhs);
      for (std::size_t c = 0; c < L; ++c) {
        auto v = sol[c].as_integer();
        if (!v)
          throw NonIntegralFusion("N^" + r.labels[c].to_string() + "_{" + r.labels[a].to_string() + "," +
                                  r.labels[b].to_string() + "} = " + sol[c].to_string());
        if (*v < 0) throw NegativeFusion("negative structure constant " + v->get_str());
        long k = to_long(*v);
        r.n_[(a * L + b) * L + c] = k;
        r.n_[(b * L + a) * L + c] = k;
      }
    }
  return r;
}

IntMatrix handle_operator(const FusionRing& r) {
  std::size_t L = r.size();
  std::vector<BigInt> h(L);
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t c = 0; c < L; ++c) h[c] += r.coeff(a, a, c);
  return r.multiplication_matrix(h);
}

BigInt det_T(const FusionRing& r) { return det_exact(handle_operator(r)); }

BigInt det_T_formula_sp1(long m) { return pow_big(BigInt(-2), m - 1) * pow_big(BigInt(m), m - 3); }

BigInt det_T_conjecture(long m, long n, ConjectureReading reading) {
  BigInt c = binomial(m - 3, reading == ConjectureReading::kPrinted ? n - 2 : n - 1);
  if (c < 0) return 0;
  unsigned long e = c.get_ui();
  return pow_big(BigInt(2), (m - 1) * e) * pow_big(BigInt(m), (m - 3) * e);
}

}  // namespace verlinde::fusion
