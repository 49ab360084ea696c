#include "verlinde/exact/fp_matrix.hpp"

#include <stdexcept>

namespace verlinde {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("inv_mod: not invertible");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols) {
  if (p < 2 || p > kernels::kMaxPrime) throw std::invalid_argument("FpMatrix: prime out of kernel range");
}

FpMatrix FpMatrix::from_int(const IntMatrix& m, std::uint32_t p) {
  FpMatrix r(m.rows(), m.cols(), p);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<std::uint32_t>(fmod_pos(m(i, j), p).get_ui());
  return r;
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix r(n, n, p);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

FpMatrix FpMatrix::multiply(const FpMatrix& o, const kernels::ModpKernels& k) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("FpMatrix: shape mismatch");
  FpMatrix c(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      std::uint32_t s = (*this)(i, j);
      if (s) k.axpy(c.row(i), o.row(j), o.cols_, s, p_);
    }
  return c;
}

FpMatrix FpMatrix::power(unsigned long e, const kernels::ModpKernels& k) const {
  FpMatrix result = identity(rows_, p_), base = *this;
  while (e) {
    if (e & 1) result = result.multiply(base, k);
    e >>= 1;
    if (e) base = base.multiply(base, k);
  }
  return result;
}

std::size_t FpMatrix::row_reduce(const kernels::ModpKernels& k) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t piv = rank;
    while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(rank, j));
    k.scale(row(rank), cols_, inv_mod((*this)(rank, c), p_), p_);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      std::uint32_t f = (*this)(i, c);
      if (f) k.axpy(row(i), row(rank), cols_, p_ - f, p_);
    }
    ++rank;
  }
  return rank;
}

std::size_t FpMatrix::rank(const kernels::ModpKernels& k) const {
  FpMatrix t = *this;
  return t.row_reduce(k);
}

FpMatrix FpMatrix::stack(const std::vector<FpMatrix>& parts) {
  if (parts.empty()) throw std::invalid_argument("FpMatrix::stack: empty");
  std::size_t rows = 0;
  for (const auto& m : parts) {
    if (m.cols_ != parts[0].cols_ || m.p_ != parts[0].p_) throw std::invalid_argument("FpMatrix::stack: mismatch");
    rows += m.rows_;
  }
  FpMatrix out(rows, parts[0].cols_, parts[0].p_);
  std::size_t r = 0;
  for (const auto& m : parts) {
    std::copy(m.a_.begin(), m.a_.end(), out.a_.begin() + r * out.cols_);
    r += m.rows_;
  }
  return out;
}

}  // namespace verlinde
