#include "verlinde/completion/groebner.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "verlinde/exact/bigint.hpp"
#include "verlinde/exact/fp_matrix.hpp"

namespace verlinde::completion {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  // p may exceed the kernel range here
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

void sort_terms(const FpRing& r, FpPoly& a) {
  std::sort(a.begin(), a.end(), [&](const FpTerm& x, const FpTerm& y) { return compare(x.mono, y.mono, r.order) > 0; });
}

}  // namespace

FpPoly fp_add(const FpRing& r, const FpPoly& a, const FpPoly& b) { return fp_sub_mul(r, a, r.prime - 1, Monomial{}, b); }

FpPoly fp_sub_mul(const FpRing& r, const FpPoly& a, std::uint32_t c, const Monomial& mono, const FpPoly& b) {
  FpPoly out;
  out.reserve(a.size() + b.size());
  std::uint32_t p = r.prime, neg = c % p == 0 ? 0 : p - c % p;
  if (neg == 0) return a;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b[j].mono * mono;
    int cmp = i == a.size() ? -1 : compare(a[i].mono, bm, r.order);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, mulmod(neg, b[j].coeff, p)});
      ++j;
    } else {
      std::uint32_t v = (a[i].coeff + mulmod(neg, b[j].coeff, p)) % p;
      if (v) out.push_back({bm, v});
      ++i, ++j;
    }
  }
  return out;
}

FpPoly fp_mul(const FpRing& r, const FpPoly& a, const FpPoly& b) {
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto& v = acc[x.mono * y.mono];
      v = static_cast<std::uint32_t>((v + std::uint64_t(x.coeff) * y.coeff) % r.prime);
    }
  FpPoly out;
  for (const auto& [m, c] : acc)
    if (c) out.push_back({m, c});
  sort_terms(r, out);
  return out;
}

FpPoly fp_constant(const FpRing& r, long c) {
  long v = c % static_cast<long>(r.prime);
  if (v < 0) v += r.prime;
  if (!v) return {};
  return {FpTerm{Monomial{}, static_cast<std::uint32_t>(v)}};
}

FpPoly fp_var(const FpRing& r, int i) {
  if (i < 0 || i >= r.nvars) throw std::out_of_range("fp_var: variable index");
  return {FpTerm{Monomial::var(i), 1}};
}

FpPoly fp_monic(const FpRing& r, FpPoly a) {
  if (a.empty() || a[0].coeff == 1) return a;
  std::uint32_t s = inv(a[0].coeff, r.prime);
  for (auto& t : a) t.coeff = mulmod(t.coeff, s, r.prime);
  return a;
}

FpPoly fp_from_multipoly(const FpRing& r, const MultiPoly& f, const std::vector<long>& shift) {
  // powers of (x_k + shift_k), built lazily
  std::vector<std::vector<FpPoly>> pw(r.nvars);
  auto power = [&](int k, unsigned e) -> const FpPoly& {
    auto& v = pw[k];
    if (v.empty()) v.push_back(fp_constant(r, 1));
    FpPoly base = fp_var(r, k);
    if (!shift.empty() && shift[k]) base = fp_add(r, base, fp_constant(r, shift[k]));
    while (v.size() <= e) v.push_back(fp_mul(r, v.back(), base));
    return v[e];
  };
  FpPoly out;
  for (const auto& [m, c] : f.terms()) {
    long cm = static_cast<long>(fmod_pos(c, r.prime).get_ui());
    FpPoly t = fp_constant(r, cm);
    for (int k = 0; k < r.nvars; ++k)
      if (m.e[k]) t = fp_mul(r, t, power(k, m.e[k]));
    out = fp_add(r, out, t);
  }
  return out;
}

FpPoly GroebnerBasisFp::normal_form(const FpPoly& f) const {
  FpPoly rest = f, out;
  while (!rest.empty()) {
    const FpTerm lead = rest[0];
    const FpPoly* by = nullptr;
    for (const auto& g : basis)
      if (g[0].mono.divides(lead.mono)) {
        by = &g;
        break;
      }
    if (by) {
      rest = fp_sub_mul(ring, rest, lead.coeff, lead.mono / (*by)[0].mono, *by);
    } else {
      out.push_back(lead);
      rest.erase(rest.begin());
    }
  }
  return out;
}

bool GroebnerBasisFp::is_reduced() const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].empty() || basis[i][0].coeff != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i])
        if (basis[j][0].mono.divides(t.mono)) return false;
    }
  }
  return true;
}

bool GroebnerBasisFp::s_pairs_reduce_to_zero() const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      Monomial l = Monomial::lcm(f[0].mono, g[0].mono);
      FpPoly s = fp_sub_mul(ring, fp_sub_mul(ring, {}, ring.prime - 1, l / f[0].mono, f), 1, l / g[0].mono, g);
      if (!normal_form(s).empty()) return false;
    }
  return true;
}

std::vector<Monomial> GroebnerBasisFp::standard_monomials() const {
  std::vector<unsigned> bound(ring.nvars, 0);
  for (const auto& g : basis) {
    const Monomial& m = g[0].mono;
    int nz = 0, var = -1;
    for (int k = 0; k < ring.nvars; ++k)
      if (m.e[k]) ++nz, var = k;
    if (nz == 1 && (bound[var] == 0 || m.e[var] < bound[var])) bound[var] = m.e[var];
    if (nz == 0) return {};  // unit ideal
  }
  for (unsigned b : bound)
    if (b == 0) throw std::domain_error("standard_monomials: quotient is infinite-dimensional");
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int)> rec = [&](int k) {
    if (k == ring.nvars) {
      for (const auto& g : basis)
        if (g[0].mono.divides(cur)) return;
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e < bound[k]; ++e) {
      cur.e[k] = static_cast<std::uint16_t>(e);
      cur.deg += e;
      rec(k + 1);
      cur.deg -= e;
    }
    cur.e[k] = 0;
  };
  rec(0);
  return out;
}

std::optional<std::size_t> GroebnerBasisFp::standard_monomial_count() const {
  try {
    return standard_monomials().size();
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

GroebnerBasisFp buchberger(const FpRing& ring, std::vector<FpPoly> gens, const GroebnerOptions& options) {
  if (ring.nvars > kMaxVars) throw std::invalid_argument("buchberger: too many variables");
  if (!options.permutation.empty()) {
    for (auto& f : gens) {
      for (auto& t : f) {
        Monomial m;
        m.deg = t.mono.deg;
        for (int k = 0; k < ring.nvars; ++k) m.e[options.permutation[k]] = t.mono.e[k];
        t.mono = m;
      }
      sort_terms(ring, f);
    }
  }
  GroebnerBasisFp gb;
  gb.ring = ring;
  auto& g = gb.basis;
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add = [&](FpPoly f) {
    f = fp_monic(ring, std::move(f));
    std::size_t k = g.size();
    g.push_back(std::move(f));
    for (std::size_t i = 0; i < k; ++i) {
      if (g[i].empty()) continue;
      if (g[i][0].mono.coprime(g[k][0].mono)) continue;
      pairs.push_back({i, k, Monomial::lcm(g[i][0].mono, g[k][0].mono)});
    }
  };
  for (auto& f : gens) {
    FpPoly r = gb.normal_form(f);
    if (!r.empty()) add(std::move(r));
  }
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return compare(a.lcm, b.lcm, ring.order) < 0;
    });
    Pair pr = *it;
    pairs.erase(it);
    if (++gb.pairs_processed > options.max_steps) throw ResourceLimit("buchberger: step budget exhausted");
    const FpPoly& f = g[pr.i];
    const FpPoly& h = g[pr.j];
    if (f.empty() || h.empty()) continue;
    FpPoly s = fp_sub_mul(ring, fp_sub_mul(ring, {}, ring.prime - 1, pr.lcm / f[0].mono, f), 1, pr.lcm / h[0].mono, h);
    FpPoly r = gb.normal_form(s);
    if (!r.empty()) add(std::move(r));
  }
  // minimal basis, then inter-reduce
  std::vector<FpPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !g[j][0].mono.divides(g[i][0].mono)) continue;
      redundant = !(g[j][0].mono == g[i][0].mono) || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  g = minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    FpPoly head{g[i][0]}, tail(g[i].begin() + 1, g[i].end());
    GroebnerBasisFp others;
    others.ring = ring;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) others.basis.push_back(g[j]);
    FpPoly t = others.normal_form(tail);
    head.insert(head.end(), t.begin(), t.end());
    g[i] = head;
  }
  std::sort(g.begin(), g.end(), [&](const FpPoly& a, const FpPoly& b) { return compare(a[0].mono, b[0].mono, ring.order) < 0; });
  return gb;
}

}  // namespace verlinde::completion
