#include "verlinde/ktheory/zring.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "verlinde/exact/linalg.hpp"

namespace verlinde::ktheory {

QuotientRingZ::QuotientRingZ(std::vector<std::string> names, std::vector<ZPolyM> relations, MonomialOrder order,
                             std::size_t max_pairs)
    : names_(std::move(names)), order_(order) {
  if (names_.empty() || static_cast<int>(names_.size()) > kMaxVars) throw std::invalid_argument("QuotientRingZ: bad variable count");

  std::vector<ZPolyM> g;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  auto insert = [&](ZPolyM h) {
    h = reduce(std::move(h), g, false);
    if (h.empty()) return;
    if (h[0].coeff < 0)
      for (auto& t : h) t.coeff = -t.coeff;
    for (std::size_t i = 0; i < g.size(); ++i) pairs.emplace_back(i, g.size());
    g.push_back(std::move(h));
  };
  for (auto& r : relations) insert(std::move(r));

  while (!pairs.empty()) {
    if (++pairs_ > max_pairs) throw ResourceLimit("QuotientRingZ: pair limit exceeded");
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const ZPolyM f = g[i], h = g[j];
    const BigInt& a = f[0].coeff;
    const BigInt& b = h[0].coeff;
    Monomial l = Monomial::lcm(f[0].mono, h[0].mono);
    Monomial uf = l / f[0].mono, uh = l / h[0].mono;
    BigInt c;
    mpz_lcm(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // S-polynomial
    insert(sub(scale(f, c / a, uf), scale(h, c / b, uh)));
    // G-polynomial when neither leading coefficient divides the other
    if (a % b != 0 && b % a != 0) {
      BigInt d, s, t;
      xgcd(a, b, d, s, t);
      insert(add(scale(f, s, uf), scale(h, t, uh)));
    }
  }

  // drop elements whose leading term is divisible by another's
  std::vector<bool> keep(g.size(), true);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (g[j][0].mono.divides(g[i][0].mono) && g[i][0].coeff % g[j][0].coeff == 0) {
        if (g[j][0].mono == g[i][0].mono && g[j][0].coeff == g[i][0].coeff && j > i) continue;
        keep[i] = false;
      }
    }
  std::vector<ZPolyM> minimal;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (keep[i]) minimal.push_back(g[i]);
  // reduce tails
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ZPolyM> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    ZPolyM lead{minimal[i][0]};
    ZPolyM tail(minimal[i].begin() + 1, minimal[i].end());
    minimal[i] = add(lead, reduce(tail, others, false));
  }
  std::sort(minimal.begin(), minimal.end(), [&](const ZPolyM& x, const ZPolyM& y) {
    if (!(x[0].mono == y[0].mono)) return greater(y[0].mono, x[0].mono);
    return x[0].coeff < y[0].coeff;
  });
  basis_ = std::move(minimal);
}

ZPolyM QuotientRingZ::reduce(ZPolyM f, const std::vector<ZPolyM>& g, bool reverse) const {
  ZPolyM out;
  while (!f.empty()) {
    ZTerm lt = f[0];
    bool changed = true;
    while (changed && !f.empty() && f[0].mono == lt.mono) {
      changed = false;
      for (std::size_t k = 0; k < g.size(); ++k) {
        const ZPolyM& r = g[reverse ? g.size() - 1 - k : k];
        if (!r[0].mono.divides(f[0].mono)) continue;
        BigInt q = fdiv(f[0].coeff, r[0].coeff);
        if (q == 0) continue;
        f = sub(f, scale(r, q, f[0].mono / r[0].mono));
        changed = true;
        break;
      }
    }
    if (!f.empty() && f[0].mono == lt.mono) {
      out.push_back(f[0]);
      f.erase(f.begin());
    }
  }
  return out;
}

ZPolyM QuotientRingZ::normal_form(const ZPolyM& f, bool reverse) const { return reduce(f, basis_, reverse); }

std::optional<std::vector<BigInt>> QuotientRingZ::additive_structure() const {
  std::vector<int> bound(nvars(), -1);
  for (const auto& g : basis_) {
    if (g[0].coeff != 1) continue;
    int nz = -1, cnt = 0;
    for (int i = 0; i < nvars(); ++i)
      if (g[0].mono.e[i]) nz = i, ++cnt;
    if (cnt == 1 && (bound[nz] < 0 || g[0].mono.e[nz] < bound[nz])) bound[nz] = g[0].mono.e[nz];
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;

  std::vector<Monomial> box{Monomial{}};
  for (int i = 0; i < nvars(); ++i) {
    std::vector<Monomial> next;
    for (const auto& m : box)
      for (int e = 0; e < bound[i]; ++e) next.push_back(m * Monomial::var(i, e));
    box = std::move(next);
  }
  // c_m: smallest leading coefficient over elements whose leading monomial divides m
  std::vector<Monomial> gens;
  std::vector<BigInt> order;
  for (const auto& m : box) {
    BigInt c = 0;
    for (const auto& g : basis_)
      if (g[0].mono.divides(m) && (c == 0 || g[0].coeff < c)) c = g[0].coeff;
    if (c == 1) continue;
    gens.push_back(m);
    order.push_back(c);
  }
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < gens.size(); ++i) index[gens[i]] = i;
  std::vector<std::vector<BigInt>> rows;
  std::size_t free_count = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (order[i] == 0) {
      ++free_count;
      continue;
    }
    std::vector<BigInt> row(gens.size(), BigInt(0));
    row[i] = order[i];
    for (const auto& t : normal_form(term(gens[i], order[i]))) row[index.at(t.mono)] -= t.coeff;
    rows.push_back(std::move(row));
  }
  std::vector<BigInt> diag;
  if (!rows.empty()) {
    IntMatrix m(rows.size(), gens.size(), BigInt(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) m(i, j) = rows[i][j];
    diag = smith_diagonal(m);
  }
  while (diag.size() < gens.size()) diag.push_back(0);
  std::vector<BigInt> out;
  for (const auto& d : diag)
    if (d != 1) out.push_back(d);
  (void)free_count;
  return out;
}

ZPolyM QuotientRingZ::constant(const BigInt& c) const { return term(Monomial{}, c); }

ZPolyM QuotientRingZ::var(int i, unsigned power) const { return term(Monomial::var(i, power), 1); }

ZPolyM QuotientRingZ::term(const Monomial& m, const BigInt& c) const {
  if (c == 0) return {};
  return {ZTerm{m, c}};
}

ZPolyM QuotientRingZ::add(const ZPolyM& a, const ZPolyM& b) const {
  ZPolyM r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && greater(a[i].mono, b[j].mono))) {
      r.push_back(a[i++]);
    } else if (i == a.size() || greater(b[j].mono, a[i].mono)) {
      r.push_back(b[j++]);
    } else {
      BigInt c = a[i].coeff + b[j].coeff;
      if (c != 0) r.push_back({a[i].mono, c});
      ++i, ++j;
    }
  }
  return r;
}

ZPolyM QuotientRingZ::sub(const ZPolyM& a, const ZPolyM& b) const { return add(a, scale(b, -1, Monomial{})); }

ZPolyM QuotientRingZ::scale(const ZPolyM& a, const BigInt& c, const Monomial& m) const {
  if (c == 0) return {};
  ZPolyM r;
  r.reserve(a.size());
  for (const auto& t : a) r.push_back({t.mono * m, t.coeff * c});
  return r;
}

ZPolyM QuotientRingZ::mul(const ZPolyM& a, const ZPolyM& b) const {
  ZPolyM r;
  for (const auto& t : b) r = add(r, scale(a, t.coeff, t.mono));
  return r;
}

std::string QuotientRingZ::to_string(const ZPolyM& f) const {
  if (f.empty()) return "0";
  std::string s;
  for (const auto& t : f) {
    std::string mono;
    for (int i = 0; i < nvars(); ++i) {
      if (!t.mono.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names_[i];
      if (t.mono.e[i] > 1) mono += "^" + std::to_string(t.mono.e[i]);
    }
    BigInt c = t.coeff;
    if (!s.empty()) {
      s += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0 && !mono.empty() && c == -1) {
      s += "-";
      c = 1;
    }
    if (mono.empty()) s += c.get_str();
    else if (c == 1) s += mono;
    else s += c.get_str() + "*" + mono;
  }
  return s;
}

}  // namespace verlinde::ktheory
