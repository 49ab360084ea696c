#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "verlinde/exact/bigint.hpp"
#include "verlinde/exact/poly.hpp"

namespace verlinde {

// Phi_N by exact division of x^N - 1 by Phi_d, d | N, d < N.
ZPoly cyclotomic_poly(unsigned n);

long euler_phi(long n);

struct CycField;

// Element of Q(zeta_N), reduced mod Phi_N. Stored as an integer vector over a
// positive common denominator with content coprime to it.
class CycNumber {
 public:
  explicit CycNumber(unsigned order);
  CycNumber(unsigned order, const BigRat& value);

  static CycNumber zeta_power(unsigned order, long k);

  unsigned order() const;
  int dimension() const;  // phi(N)
  BigRat coeff(int i) const;
  std::vector<BigRat> coeffs() const;
  bool is_zero() const;
  std::optional<BigRat> as_rational() const;
  std::optional<BigInt> as_integer() const;

  CycNumber inverse() const;  // throws std::domain_error on zero
  // sigma_k: zeta -> zeta^k, gcd(k, N) = 1
  CycNumber galois(long k) const;

  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o) { return *this *= o.inverse(); }
  CycNumber& operator+=(const BigInt& a);
  CycNumber& operator*=(const BigInt& a);
  CycNumber& operator+=(const BigRat& a);
  CycNumber& operator*=(const BigRat& a);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend CycNumber operator*(CycNumber a, const BigInt& b) { return a *= b; }
  friend CycNumber operator-(CycNumber a) {
    for (auto& v : a.num_) v = -v;
    return a;
  }
  friend bool operator==(const CycNumber& a, const CycNumber& b);

  std::string to_string() const;

 private:
  void normalize();
  void check_same(const CycNumber& o) const;

  std::shared_ptr<const CycField> field_;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

}  // namespace verlinde
