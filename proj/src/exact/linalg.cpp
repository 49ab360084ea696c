#include "verlinde/exact/linalg.hpp"

#include <algorithm>

namespace verlinde {

namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

struct Snf {
  IntMatrix& a;
  IntMatrix* u;
  IntMatrix* v;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (u) u->swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (v) v->swap_cols(i, j);
  }
  // row i += q * row k
  void add_row(std::size_t i, std::size_t k, const BigInt& q) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(k, c) != 0) a(i, c) += q * a(k, c);
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c)
        if ((*u)(k, c) != 0) (*u)(i, c) += q * (*u)(k, c);
  }
  void add_col(std::size_t j, std::size_t k, const BigInt& q) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, k) != 0) a(r, j) += q * a(r, k);
    if (v)
      for (std::size_t r = 0; r < v->rows(); ++r)
        if ((*v)(r, k) != 0) (*v)(r, j) += q * (*v)(r, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c) (*u)(i, c) = -(*u)(i, c);
  }

  void run() {
    std::size_t rows = a.rows(), cols = a.cols(), n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
      // smallest nonzero entry of the trailing block as pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (pi == rows || cmpabs(a(i, j), a(pi, pj)) < 0) pi = i, pj = j;
        }
      if (pi == rows) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a(i, t) == 0) continue;
          BigInt q = a(i, t) / a(t, t);
          if (q != 0) add_row(i, t, -q);
          if (a(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(t, j) == 0) continue;
          BigInt q = a(t, j) / a(t, t);
          if (q != 0) add_col(j, t, -q);
          if (a(t, j) != 0) dirty = true;
        }
        if (dirty) {
          std::size_t bi = t, bj = t;
          for (std::size_t i = t + 1; i < rows; ++i)
            if (a(i, t) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) bi = i, bj = t;
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a(t, j) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) bi = t, bj = j;
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        // divisibility of the trailing block
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
              bad = i;
              break;
            }
        if (bad == rows) break;
        add_row(t, bad, 1);
      }
      if (a(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult r;
  IntMatrix a = m;
  r.left = IntMatrix::identity(m.rows());
  r.right = IntMatrix::identity(m.cols());
  Snf{a, &r.left, &r.right}.run();
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) r.diagonal.push_back(a(i, i));
  return r;
}

std::vector<BigInt> smith_diagonal(const IntMatrix& m) {
  IntMatrix a = m;
  Snf{a, nullptr, nullptr}.run();
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) d.push_back(a(i, i));
  return d;
}

BigInt det_exact(IntMatrix a) {
  std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("det_exact: matrix not square");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a(i, k) == 0) ++i;
      if (i == n) return 0;
      a.swap_rows(k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void Lattice::reduce_above(std::size_t col) {
  const auto& p = rows_[col];
  for (std::size_t r = 0; r < col; ++r) {
    auto& row = rows_[r];
    if (row.empty() || row[col] == 0) continue;
    BigInt q = fdiv(row[col], p[col]);
    if (q == 0) continue;
    for (std::size_t c = col; c < dim_; ++c) row[c] -= q * p[c];
  }
}

void Lattice::insert(std::vector<BigInt> v) {
  if (v.size() != dim_) throw std::invalid_argument("Lattice: dimension mismatch");
  for (std::size_t c = 0; c < dim_; ++c) {
    if (v[c] == 0) continue;
    auto& b = rows_[c];
    if (b.empty()) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      b = std::move(v);
      break;
    }
    BigInt g, s, t;
    xgcd(b[c], v[c], g, s, t);
    BigInt bc = b[c] / g, vc = v[c] / g;
    std::vector<BigInt> nb(dim_), nv(dim_);
    for (std::size_t k = c; k < dim_; ++k) {
      nb[k] = s * b[k] + t * v[k];
      nv[k] = bc * v[k] - vc * b[k];
    }
    b = std::move(nb);
    v = std::move(nv);
  }
  for (std::size_t c = 0; c < dim_; ++c)
    if (!rows_[c].empty()) reduce_above(c);
}

bool Lattice::contains(std::vector<BigInt> v) const {
  for (std::size_t c = 0; c < dim_; ++c) {
    if (v[c] == 0) continue;
    const auto& b = rows_[c];
    if (b.empty() || !mpz_divisible_p(v[c].get_mpz_t(), b[c].get_mpz_t())) return false;
    BigInt q = v[c] / b[c];
    for (std::size_t k = c; k < dim_; ++k) v[k] -= q * b[k];
  }
  return true;
}

std::vector<BigInt> Lattice::coordinates(std::vector<BigInt> v) const {
  std::vector<BigInt> out;
  for (std::size_t c = 0; c < dim_; ++c) {
    const auto& b = rows_[c];
    if (b.empty()) {
      if (v[c] != 0) throw std::invalid_argument("Lattice: vector not in lattice");
      continue;
    }
    if (!mpz_divisible_p(v[c].get_mpz_t(), b[c].get_mpz_t()))
      throw std::invalid_argument("Lattice: vector not in lattice");
    BigInt q = v[c] / b[c];
    for (std::size_t k = c; k < dim_; ++k) v[k] -= q * b[k];
    out.push_back(q);
  }
  return out;
}

bool Lattice::full_rank() const { return rank() == dim_; }

std::size_t Lattice::rank() const {
  return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [](const auto& r) { return !r.empty(); }));
}

BigInt Lattice::index() const {
  if (!full_rank()) return 0;
  BigInt r = 1;
  for (std::size_t c = 0; c < dim_; ++c) r *= rows_[c][c];
  return r;
}

std::vector<std::vector<BigInt>> Lattice::basis() const {
  std::vector<std::vector<BigInt>> out;
  for (const auto& r : rows_)
    if (!r.empty()) out.push_back(r);
  return out;
}

}  // namespace verlinde
