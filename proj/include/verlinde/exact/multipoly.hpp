#pragma once

#include <map>
#include <string>
#include <vector>

#include "verlinde/exact/bigint.hpp"
#include "verlinde/exact/monomial.hpp"

namespace verlinde {

// Sparse polynomial over Z in nvars variables.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const BigInt& c);
  static MultiPoly var(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  BigInt coeff(const Monomial& m) const;
  int total_degree() const;
  void add_term(const Monomial& m, const BigInt& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const BigInt& s, MultiPoly a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  // T needs T*T, T+T and T*BigInt.
  template <class T>
  T evaluate(const std::vector<T>& values, const T& one) const {
    T acc = one * BigInt(0);
    for (const auto& [m, c] : terms_) {
      T t = one * c;
      for (int i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < m.e[i]; ++k) t = t * values[i];
      acc = acc + t;
    }
    return acc;
  }

  std::string to_string() const;

 private:
  int nvars_;
  std::map<Monomial, BigInt> terms_;
};

}  // namespace verlinde
