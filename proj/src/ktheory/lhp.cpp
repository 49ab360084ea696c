#include "verlinde/ktheory/lhp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "verlinde/completion/delta.hpp"
#include "verlinde/exact/linalg.hpp"
#include "verlinde/sym/sym.hpp"

namespace verlinde::ktheory {

QuotientRingZ lhp_ring(long m, long l, int t_truncation, const BigInt& modulus) {
  if (m < 2 || l < 1) throw std::invalid_argument("lhp_ring: need m >= 2, l >= 1");
  ZPoly s = sym::sigma(static_cast<unsigned>(m - 1));
  // t = variable 0, y = variable 1
  auto mono = [](int a, int b) { return Monomial::var(0, a) * Monomial::var(1, b); };
  ZPolyM rel;
  rel.push_back({mono(1, static_cast<int>(l)), BigInt(-(l + 1))});
  for (long i = std::min<long>(l, s.degree()); i >= 0; --i)
    if (s.coeff(i) != 0) rel.push_back({mono(0, static_cast<int>(i)), s.coeff(i)});
  std::vector<ZPolyM> rels{{{mono(0, static_cast<int>(l + 1)), BigInt(1)}}, rel};
  if (t_truncation > 0) rels.push_back({{mono(t_truncation, 0), BigInt(1)}});
  if (modulus != 0) rels.push_back({{Monomial{}, modulus}});
  return QuotientRingZ({"t", "y"}, std::move(rels));
}

BigInt lhp_characteristic_bound(long m, long l) {
  BigInt g;
  BigInt mm = m, ll = l + 1;
  mpz_gcd(g.get_mpz_t(), mm.get_mpz_t(), ll.get_mpz_t());
  return mm * mm / g;
}

IntMatrix lhp_presentation(long m, long l, int t_truncation) {
  ZPoly s = sym::sigma(static_cast<unsigned>(m - 1));
  int D = t_truncation;
  std::size_t ng = static_cast<std::size_t>(D) * (l + 1);
  auto idx = [&](int n, long j) { return static_cast<std::size_t>(n) * (l + 1) + j; };
  IntMatrix rel(ng, ng, BigInt(0));
  for (int n = 0; n < D; ++n)
    for (long j = 0; j <= l; ++j) {
      std::size_t row = idx(n, j);
      for (long e = 0; j + e <= l; ++e) rel(row, idx(n, j + e)) += s.coeff(static_cast<int>(e));
      if (j == 0 && n + 1 < D) rel(row, idx(n + 1, l)) -= l + 1;
    }
  return rel;
}

namespace {

IntMatrix stack_precision(const IntMatrix& rel, const BigInt& pk, const std::vector<std::size_t>& extra_cols = {},
                          const BigInt& extra = 0) {
  std::size_t g = rel.cols();
  IntMatrix out(rel.rows() + g + extra_cols.size(), g, BigInt(0));
  for (std::size_t i = 0; i < rel.rows(); ++i)
    for (std::size_t j = 0; j < g; ++j) out(i, j) = rel(i, j);
  for (std::size_t j = 0; j < g; ++j) out(rel.rows() + j, j) = pk;
  for (std::size_t k = 0; k < extra_cols.size(); ++k) out(rel.rows() + g + k, extra_cols[k]) = extra;
  return out;
}

long log_order(const IntMatrix& m, long p) {
  long s = 0;
  for (const auto& d : smith_diagonal(m)) {
    if (d == 0) throw std::logic_error("log_order: infinite group");
    s += valuation(d, p);
  }
  return s;
}

}  // namespace

TruncatedStructure lhp_truncated_oracle(long m, long l, long p, int t_truncation, int precision) {
  if (t_truncation < 1 || precision < 1) throw std::invalid_argument("lhp_truncated_oracle: bad parameters");
  IntMatrix rel = lhp_presentation(m, l, t_truncation);
  auto at = [&](int k) {
    return AbelianPStructure::from_diagonal(p, smith_diagonal(stack_precision(rel, pow_big(BigInt(p), k))));
  };
  TruncatedStructure out;
  out.precision = precision;
  out.structure = at(precision);
  out.stable = out.structure == at(precision + 4);
  for (int e : out.structure.exponents)
    if (e >= precision) out.stable = false;
  return out;
}

std::vector<AbelianPStructure> lhp_graded_pieces(long m, long l, long p, int t_truncation, int precision) {
  BigInt pk = pow_big(BigInt(p), precision);
  std::vector<AbelianPStructure> out;
  for (int n = 0; n < t_truncation; ++n) {
    // M_n = M / t^{n+1} M; H = t^n M_n
    IntMatrix rel = lhp_presentation(m, l, n + 1);
    std::vector<std::size_t> top;
    for (long j = 0; j <= l; ++j) top.push_back(static_cast<std::size_t>(n) * (l + 1) + j);
    long whole = log_order(stack_precision(rel, pk), p);
    // log |p^e H| = log |M_n| - log |M_n / p^e H|
    std::vector<long> sizes;
    for (int e = 0;; ++e) {
      long q = log_order(stack_precision(rel, pk, top, pow_big(BigInt(p), e)), p);
      sizes.push_back(whole - q);
      if (whole == q) break;
    }
    std::vector<int> ex;
    for (std::size_t e = 0; e + 1 < sizes.size(); ++e) {
      long above = sizes[e] - sizes[e + 1];  // summands of exponent > e
      long above_next = e + 2 < sizes.size() ? sizes[e + 1] - sizes[e + 2] : 0;
      for (long k = 0; k < above - above_next; ++k) ex.push_back(static_cast<int>(e + 1));
    }
    out.emplace_back(p, ex);
  }
  return out;
}

std::vector<int> PathTable::lengths() const {
  std::vector<int> v;
  for (const auto& path : paths) v.push_back(path.length());
  std::sort(v.rbegin(), v.rend());
  return v;
}

std::vector<int> PathTable::in_window_lengths() const {
  std::vector<int> v;
  for (const auto& path : paths)
    if (!path.boundary) v.push_back(path.length());
  std::sort(v.rbegin(), v.rend());
  return v;
}

PathTable lhp_additive_path_table(long m, long l, long p, int t_truncation) {
  if (!is_prime(p) || m % p || l < 1 || t_truncation < 1) throw std::invalid_argument("lhp_additive_path_table: bad parameters");
  const int k = valuation(m, p);
  const long d = p == 2 ? 1 : (p - 1) / 2;
  const int D = t_truncation;

  struct YPath {
    long j;
    int a;
    bool critical;
    std::vector<std::pair<int, long>> cells;
  };
  std::vector<YPath> ypaths;
  for (int a = 0; a < k; ++a) {
    long lo = (ipow(p, a) - 1) / (p - 1) * d, hi = (ipow(p, a + 1) - 1) / (p - 1) * d;
    for (long j = lo; j < std::min(hi, l + 1); ++j) {
      YPath y{j, a, j == lo, {}};
      for (int r = 0; r < k - a; ++r) y.cells.emplace_back(r, j);
      long step = ipow(p, a) * d;
      for (long c = j + step; c <= l; c += step) y.cells.emplace_back(k - a - 1, c);
      ypaths.push_back(std::move(y));
    }
  }

  BigInt g;
  {
    BigInt mm = m, ll = l + 1;
    mpz_gcd(g.get_mpz_t(), mm.get_mpz_t(), ll.get_mpz_t());
  }
  int c = g % p == 0 ? std::min(valuation(g, p), k) : 0;

  std::map<std::pair<int, long>, int> pos;
  for (const auto& y : ypaths)
    for (std::size_t t = 0; t < y.cells.size(); ++t) pos[y.cells[t]] = static_cast<int>(t);

  std::vector<std::set<std::pair<int, long>>> taken(D + 1);
  std::vector<std::vector<std::vector<std::pair<int, long>>>> appended(D, std::vector<std::vector<std::pair<int, long>>>(ypaths.size()));
  for (int n = 0; n + 1 < D; ++n)
    for (std::size_t q = 0; q < ypaths.size(); ++q) {
      const auto& y = ypaths[q];
      if (!y.critical) continue;
      std::vector<std::pair<int, long>> own;
      for (const auto& cell : y.cells)
        if (!taken[n].count(cell)) own.push_back(cell);
      if (own.empty()) continue;
      int top = 0;
      for (const auto& cell : own) top = std::max(top, cell.first);
      int alpha = c - 1;
      for (const auto& cell : own)
        if (cell.first == top) ++alpha;
      for (int dd = 0;; ++dd) {
        int row = c + alpha + dd;
        if (row >= k) break;
        std::pair<int, long> cell{row, l};
        if (pos.at(cell) <= alpha + dd + k - y.a && !taken[n + 1].count(cell)) {
          taken[n + 1].insert(cell);
          appended[n][q].push_back(cell);
        }
      }
    }

  PathTable out;
  out.m = m;
  out.l = l;
  out.p = p;
  out.tables = D;
  out.rows = k;
  std::set<Cell> used;
  bool clash = false;
  for (int n = 0; n < D; ++n)
    for (std::size_t q = 0; q < ypaths.size(); ++q) {
      TablePath path{n, static_cast<int>(ypaths[q].j), ypaths[q].a, ypaths[q].critical, {}, false};
      for (const auto& cell : ypaths[q].cells)
        if (!taken[n].count(cell)) path.cells.push_back({n, cell.first, static_cast<int>(cell.second)});
      for (const auto& cell : appended[n][q]) path.cells.push_back({n + 1, cell.first, static_cast<int>(cell.second)});
      if (path.cells.empty()) continue;
      for (const auto& cell : path.cells) {
        if (!used.insert(cell).second) clash = true;
        if (cell.table == D - 1 && cell.col == l) path.boundary = true;
      }
      out.paths.push_back(std::move(path));
    }
  out.disjoint = !clash && used.size() == static_cast<std::size_t>(D) * k * (l + 1);
  return out;
}

CoproductReport coproduct_values(long m, long l, long p) {
  if (!is_prime(p) || m < 2 || l < 1) throw std::invalid_argument("coproduct_values: bad parameters");
  CoproductReport r;
  r.m = m;
  r.l = l;
  r.p = p;
  r.nu_one = fmod_pos(BigInt(l + 1), p);
  ZPoly s = sym::sigma(static_cast<unsigned>(m - 1));
  bool ok = fmod_pos(s.coeff(static_cast<int>(l)), p) != 0;
  for (long i = 0; i < l; ++i)
    if (fmod_pos(s.coeff(static_cast<int>(i)), p) != 0) ok = false;
  r.sigma_mod_p_starts_at_l = ok;
  r.l_is_delta = completion::delta(p, m) == l;
  r.nu_t_nonzero = r.l_is_delta;
  return r;
}

EulerReport euler_and_t(long l) {
  if (l < 1) throw std::invalid_argument("euler_and_t: need l >= 1");
  EulerReport r;
  r.l = l;
  r.euler_coeff = l + 1;
  ZPoly e = ZPoly::monomial(BigInt(l + 1), static_cast<std::size_t>(l));
  r.square_vanishes = (e * e).truncated(static_cast<std::size_t>(l + 1)).degree() < 0;
  r.t_description = r.square_vanishes ? "T = E^2 = 0" : "T = E^2 != 0";
  return r;
}

}  // namespace verlinde::ktheory
