#include "verlinde/exact/bigint.hpp"

namespace verlinde {

BigInt binomial(long a, long k) {
  if (k < 0) return 0;
  BigInt num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= a - i;
    den *= i + 1;
  }
  return num / den;
}

int valuation(const BigInt& x, long p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  BigInt q = abs(x);
  int v = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(p))) {
    q /= p;
    ++v;
  }
  return v;
}

int valuation(long x, long p) { return valuation(BigInt(x), p); }

long ipow(long base, int e) {
  long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

BigInt pow_big(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  if (n < 0) n = -n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void xgcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt fmod_pos(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long to_long(const BigInt& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + x.get_str());
  return x.get_si();
}

}  // namespace verlinde
