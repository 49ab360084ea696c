#pragma once

#include <vector>

#include "verlinde/exact/matrix.hpp"

namespace verlinde {

struct SmithResult {
  std::vector<BigInt> diagonal;  // length min(rows, cols), d_i | d_{i+1}, nonnegative
  IntMatrix left, right;         // left * M * right = diag
};

SmithResult smith_normal_form(const IntMatrix& m);
// Diagonal only; skips transform bookkeeping.
std::vector<BigInt> smith_diagonal(const IntMatrix& m);

BigInt det_exact(IntMatrix a);

// Gaussian elimination over a field F (F needs is_zero(), inverse(), *, -).
template <class F>
class FieldLU {
 public:
  explicit FieldLU(Matrix<F> a) : lu_(std::move(a)), perm_(lu_.rows()) {
    std::size_t n = lu_.rows();
    if (lu_.cols() != n) throw std::invalid_argument("FieldLU: matrix not square");
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      while (piv < n && lu_(piv, k).is_zero()) ++piv;
      if (piv == n) throw SingularMatrix("FieldLU: singular matrix");
      lu_.swap_rows(k, piv);
      std::swap(perm_[k], perm_[piv]);
      inv_diag_.push_back(lu_(k, k).inverse());
      for (std::size_t i = k + 1; i < n; ++i) {
        if (lu_(i, k).is_zero()) continue;
        F f = lu_(i, k) * inv_diag_[k];
        lu_(i, k) = f;
        for (std::size_t j = k + 1; j < n; ++j)
          if (!lu_(k, j).is_zero()) lu_(i, j) -= f * lu_(k, j);
      }
    }
  }

  std::vector<F> solve(const std::vector<F>& b) const {
    std::size_t n = lu_.rows();
    std::vector<F> y;
    y.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      F acc = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j)
        if (!lu_(i, j).is_zero()) acc -= lu_(i, j) * y[j];
      y.push_back(std::move(acc));
    }
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j)
        if (!lu_(i, j).is_zero()) y[i] -= lu_(i, j) * y[j];
      y[i] *= inv_diag_[i];
    }
    return y;
  }

 private:
  Matrix<F> lu_;
  std::vector<std::size_t> perm_;
  std::vector<F> inv_diag_;
};

template <class F>
std::vector<F> solve_exact(const Matrix<F>& a, const std::vector<F>& b) {
  return FieldLU<F>(a).solve(b);
}

// Hermite-normal-form lattice in Z^dim, grown by inserting vectors.
class Lattice {
 public:
  explicit Lattice(std::size_t dim) : dim_(dim), rows_(dim) {}
  void insert(std::vector<BigInt> v);
  bool contains(std::vector<BigInt> v) const;
  bool full_rank() const;
  BigInt index() const;  // [Z^dim : L], 0 if not full rank
  std::size_t rank() const;
  std::size_t dim() const { return dim_; }
  // basis rows (pivot rows only), upper triangular
  std::vector<std::vector<BigInt>> basis() const;
  // coordinates of v in basis(); v must lie in the lattice
  std::vector<BigInt> coordinates(std::vector<BigInt> v) const;

 private:
  void reduce_above(std::size_t col);
  std::size_t dim_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[c] has pivot at c, or empty
};

}  // namespace verlinde
