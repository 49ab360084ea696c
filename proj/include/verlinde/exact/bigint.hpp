#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace verlinde {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// C(a, k) for any integer a, via the falling factorial a(a-1)...(a-k+1)/k!.
BigInt binomial(long a, long k);

// v_p(x); x must be nonzero.
int valuation(const BigInt& x, long p);
int valuation(long x, long p);

long ipow(long base, int e);
BigInt pow_big(const BigInt& base, unsigned long e);

bool is_prime(long n);
std::vector<long> prime_divisors(long n);

// s*a + t*b = g >= 0
void xgcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t);

// floor division / remainder in [0, |b|)
BigInt fdiv(const BigInt& a, const BigInt& b);
BigInt fmod_pos(const BigInt& a, const BigInt& b);

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const BigRat& x) { return x.get_str(); }

long to_long(const BigInt& x);

}  // namespace verlinde
