#include "verlinde/exact/multipoly.hpp"

namespace verlinde {

MultiPoly MultiPoly::constant(int nvars, const BigInt& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::var(int nvars, int i) {
  MultiPoly p(nvars);
  p.add_term(Monomial::var(i), 1);
  return p;
}

BigInt MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m.deg));
  return d;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly operator*(const BigInt& s, MultiPoly a) {
  if (s == 0) return MultiPoly(a.nvars_);
  for (auto& [m, c] : a.terms_) c *= s;
  return a;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string num = c.get_str();
    bool neg = num[0] == '-';
    if (neg) num.erase(0, 1);
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (!m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    if (mono.empty()) s += num;
    else if (num == "1") s += mono;
    else s += num + "*" + mono;
  }
  return s;
}

}  // namespace verlinde
