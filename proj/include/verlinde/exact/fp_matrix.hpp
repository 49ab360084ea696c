#pragma once

#include <cstdint>
#include <vector>

#include "verlinde/exact/matrix.hpp"
#include "verlinde/kernels/modp.hpp"

namespace verlinde {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

// Dense matrix over F_p, p < 2^16, rows stored contiguously.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
  static FpMatrix from_int(const IntMatrix& m, std::uint32_t p);
  static FpMatrix identity(std::size_t n, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::uint32_t* row(std::size_t r) { return a_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const { return a_.data() + r * cols_; }

  FpMatrix multiply(const FpMatrix& o, const kernels::ModpKernels& k = kernels::active()) const;
  FpMatrix power(unsigned long e, const kernels::ModpKernels& k = kernels::active()) const;
  // row echelon in place; returns rank
  std::size_t row_reduce(const kernels::ModpKernels& k = kernels::active());
  std::size_t rank(const kernels::ModpKernels& k = kernels::active()) const;
  // rows of b appended below a
  static FpMatrix stack(const std::vector<FpMatrix>& parts);

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> a_;
};

}  // namespace verlinde
