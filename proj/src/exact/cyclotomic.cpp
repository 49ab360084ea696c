#include "verlinde/exact/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace verlinde {

namespace {

std::mutex g_poly_mutex;
std::map<unsigned, ZPoly>& poly_cache() {
  static std::map<unsigned, ZPoly> cache;
  return cache;
}

}  // namespace

ZPoly cyclotomic_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly: N must be positive");
  {
    std::lock_guard lock(g_poly_mutex);
    auto it = poly_cache().find(n);
    if (it != poly_cache().end()) return it->second;
  }
  ZPoly p = ZPoly::monomial(1, n) - ZPoly::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    auto [q, r] = divmod_monic(p, cyclotomic_poly(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
    p = q;
  }
  std::lock_guard lock(g_poly_mutex);
  poly_cache().emplace(n, p);
  return p;
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

struct CycField {
  unsigned order;
  int phi;
  // x^k reduced mod Phi_N, for 0 <= k <= max(N - 1, 2 phi - 2)
  std::vector<std::vector<BigInt>> powers;
};

namespace {

std::mutex g_field_mutex;

std::shared_ptr<const CycField> field_for(unsigned order) {
  static std::map<unsigned, std::shared_ptr<const CycField>> cache;
  std::lock_guard lock(g_field_mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<CycField>();
  f->order = order;
  ZPoly phi = cyclotomic_poly(order);
  f->phi = phi.degree();
  int d = f->phi;
  std::vector<BigInt> cur(d);
  cur[0] = 1;
  int top_k = std::max<int>(static_cast<int>(order) - 1, 2 * d - 2);
  for (int k = 0; k <= top_k; ++k) {
    f->powers.push_back(cur);
    BigInt top = cur[d - 1];
    for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < d; ++i) cur[i] -= top * phi.coeff(i);
  }
  cache.emplace(order, f);
  return f;
}

}  // namespace

CycNumber::CycNumber(unsigned order) : field_(field_for(order)), num_(field_->phi) {}

CycNumber::CycNumber(unsigned order, const BigRat& value) : CycNumber(order) {
  num_[0] = value.get_num();
  den_ = value.get_den();
}

CycNumber CycNumber::zeta_power(unsigned order, long k) {
  CycNumber z(order);
  long n = static_cast<long>(order);
  k %= n;
  if (k < 0) k += n;
  z.num_ = z.field_->powers[k];
  return z;
}

unsigned CycNumber::order() const { return field_->order; }
int CycNumber::dimension() const { return field_->phi; }

BigRat CycNumber::coeff(int i) const {
  BigRat r(num_[i], den_);
  r.canonicalize();
  return r;
}

std::vector<BigRat> CycNumber::coeffs() const {
  std::vector<BigRat> out;
  for (int i = 0; i < field_->phi; ++i) out.push_back(coeff(i));
  return out;
}

bool CycNumber::is_zero() const {
  for (const auto& v : num_)
    if (v != 0) return false;
  return true;
}

std::optional<BigRat> CycNumber::as_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return std::nullopt;
  return coeff(0);
}

std::optional<BigInt> CycNumber::as_integer() const {
  auto r = as_rational();
  if (!r || r->get_den() != 1) return std::nullopt;
  return r->get_num();
}

void CycNumber::normalize() {
  BigInt g = den_;
  for (const auto& v : num_) {
    if (g == 1) break;
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (is_zero()) g = den_;
  if (g != 1) {
    for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycNumber::check_same(const CycNumber& o) const {
  if (field_ != o.field_) throw std::invalid_argument("CycNumber: mixed cyclotomic orders");
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  check_same(o);
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  check_same(o);
  int d = field_->phi;
  std::vector<BigInt> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (o.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
  }
  for (int k = d; k <= 2 * d - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = field_->powers[k];
    for (int i = 0; i < d; ++i)
      if (row[i] != 0) mpz_addmul(prod[i].get_mpz_t(), prod[k].get_mpz_t(), row[i].get_mpz_t());
  }
  prod.resize(d);
  num_ = std::move(prod);
  den_ *= o.den_;
  normalize();
  return *this;
}

CycNumber& CycNumber::operator+=(const BigInt& a) {
  num_[0] += a * den_;
  normalize();
  return *this;
}

CycNumber& CycNumber::operator*=(const BigInt& a) {
  for (auto& v : num_) v *= a;
  normalize();
  return *this;
}

CycNumber& CycNumber::operator+=(const BigRat& a) {
  for (auto& v : num_) v *= a.get_den();
  num_[0] += a.get_num() * den_;
  den_ *= a.get_den();
  normalize();
  return *this;
}

CycNumber& CycNumber::operator*=(const BigRat& a) {
  for (auto& v : num_) v *= a.get_num();
  den_ *= a.get_den();
  normalize();
  return *this;
}

CycNumber CycNumber::galois(long k) const {
  long n = static_cast<long>(field_->order);
  if (std::gcd(k, n) != 1) throw std::invalid_argument("galois: exponent not a unit");
  CycNumber out(field_->order);
  for (int i = 0; i < field_->phi; ++i) {
    if (num_[i] == 0) continue;
    const auto& row = field_->powers[(k % n) * i % n];
    for (int j = 0; j < field_->phi; ++j)
      if (row[j] != 0) mpz_addmul(out.num_[j].get_mpz_t(), num_[i].get_mpz_t(), row[j].get_mpz_t());
  }
  out.den_ = den_;
  out.normalize();
  return out;
}

// a^{-1} = prod_{sigma != 1} sigma(a) / N(a)
CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycNumber: inverse of zero");
  long n = static_cast<long>(field_->order);
  CycNumber conj(field_->order, BigRat(1));
  for (long k = 2; k < n; ++k)
    if (std::gcd(k, n) == 1) conj *= galois(k);
  CycNumber norm = conj * *this;
  auto r = norm.as_rational();
  if (!r) throw std::logic_error("CycNumber: norm not rational");
  conj *= BigRat(1) / *r;
  return conj;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

std::string CycNumber::to_string() const {
  std::string s;
  for (int i = 0; i < field_->phi; ++i) {
    if (num_[i] == 0) continue;
    BigRat c = coeff(i);
    if (!s.empty()) s += " + ";
    s += "(" + c.get_str() + ")";
    if (i > 0) s += "*z^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace verlinde
