#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "verlinde/exact/bigint.hpp"

namespace verlinde {

// Dense univariate polynomial, ascending coefficients. R must be constructible
// from int and value-initialise to zero.
template <class R>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<R> c) : c_(std::move(c)) { trim(); }
  UniPoly(std::initializer_list<R> c) : c_(c) { trim(); }

  static UniPoly constant(const R& a) { return UniPoly(std::vector<R>{a}); }
  static UniPoly x() { return monomial(R(1), 1); }
  static UniPoly monomial(const R& a, std::size_t deg) {
    std::vector<R> c(deg + 1);
    c[deg] = a;
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& lead() const { return c_.back(); }
  std::span<const R> coeffs() const { return c_; }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const R& s, UniPoly a) {
    for (auto& v : a.c_) v *= s;
    a.trim();
    return a;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // coefficients of degree >= n dropped
  UniPoly truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return UniPoly(std::vector<R>(c_.begin(), c_.begin() + n));
  }

  // p(x + a)
  UniPoly shifted(const R& a) const {
    UniPoly out;
    const UniPoly lin{a, R(1)};
    for (int i = degree(); i >= 0; --i) out = out * lin + constant(c_[i]);
    return out;
  }

  // Horner; T needs T*T and T+=R.
  template <class T>
  T evaluate(const T& at, T zero) const {
    T acc = std::move(zero);
    for (int i = degree(); i >= 0; --i) {
      acc = acc * at;
      acc += c_[i];
    }
    return acc;
  }
  R evaluate(const R& at) const { return evaluate<R>(at, R(0)); }

  std::string to_string(const char* var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const R& a = c_[i];
      if (a == 0) continue;
      std::string num = verlinde::to_string(a);
      bool neg = num[0] == '-';
      if (neg) num.erase(0, 1);
      if (!s.empty()) s += neg ? " - " : " + ";
      else if (neg) s += "-";
      bool unit = num == "1";
      if (i == 0 || !unit) s += num;
      if (i >= 1) {
        if (!unit) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<R> c_;
};

using ZPoly = UniPoly<BigInt>;
using QPoly = UniPoly<BigRat>;

// Division by a monic divisor; exact over any ring.
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> divmod_monic(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.is_zero() || b.lead() != 1) throw std::invalid_argument("divmod_monic: divisor not monic");
  std::vector<R> r(a.coeffs().begin(), a.coeffs().end());
  int db = b.degree();
  if (a.degree() < db) return {UniPoly<R>(), a};
  std::vector<R> q(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    R f = r[i];
    if (f == 0) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  r.resize(db);
  return {UniPoly<R>(std::move(q)), UniPoly<R>(std::move(r))};
}

// Reduce coefficients into [0, mod).
ZPoly reduce_mod(const ZPoly& a, const BigInt& mod);

}  // namespace verlinde
