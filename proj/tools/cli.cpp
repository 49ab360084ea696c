#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "verlinde/completion/delta.hpp"
#include "verlinde/completion/filtration.hpp"
#include "verlinde/completion/local_dimension.hpp"
#include "verlinde/completion/tower.hpp"
#include "verlinde/fusion/douglas.hpp"
#include "verlinde/fusion/fusion_ring.hpp"
#include "verlinde/ktheory/lhp.hpp"
#include "verlinde/ktheory/y_group.hpp"

#ifndef VERLINDE_CODE_HASH
#define VERLINDE_CODE_HASH "unknown"
#endif

namespace verlinde::cli {

std::string code_version() { return VERLINDE_CODE_HASH; }

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string cache_dir;
  std::uint64_t seed = 1;
  long m = -1, n = -1, l = -1, prime = -1, r = -1;
  long t_cutoff = 3;
  long max_m = 8, max_n = 3;
  long l_max = -1, precision = 8;
};

Json big(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

const char* yes(bool b) { return b ? "MATCH" : "MISMATCH"; }

Json exponents(const AbelianPStructure& s) {
  Json a = Json::array();
  for (int e : s.exponents) a.push_back(e == kInfiniteExponent ? Json("inf") : Json(e));
  return a;
}

bool contains_multiset(std::vector<int> big_set, std::vector<int> small) {
  std::sort(big_set.begin(), big_set.end());
  std::sort(small.begin(), small.end());
  return std::includes(big_set.begin(), big_set.end(), small.begin(), small.end());
}

void need(long v, const char* name) {
  if (v < 0) throw UsageError(std::string("missing --") + name);
}

long need_prime(const Options& o) {
  need(o.prime, "prime");
  if (!is_prime(o.prime)) throw UsageError("--prime must be prime");
  return o.prime;
}

bool is_mismatch(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items()) {
    bool gate = k == "match" || k == "all_pass" || (k.size() > 6 && k.compare(k.size() - 6, 6, "_match") == 0);
    if (gate && v.is_boolean() && !v.get<bool>()) return true;
  }
  return false;
}

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump() + "\n";
  std::ostringstream os;
  const Json* rows = nullptr;
  for (const auto& [k, v] : j.items()) {
    if (k == "rows" && v.is_array()) {
      rows = &v;
      continue;
    }
    os << k << '\t' << cell_text(v) << '\n';
  }
  if (rows && !rows->empty()) {
    bool first = true;
    for (const auto& [k, v] : rows->front().items()) {
      (void)v;
      os << (first ? "" : "\t") << k;
      first = false;
    }
    os << '\n';
    for (const auto& row : *rows) {
      first = true;
      for (const auto& [k, v] : row.items()) {
        (void)k;
        os << (first ? "" : "\t") << cell_text(v);
        first = false;
      }
      os << '\n';
    }
  }
  return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

Json with_cache(const Options& o, const std::string& op, const std::string& params, const std::function<Json()>& compute) {
  if (o.cache_dir.empty()) return compute();
  namespace fs = std::filesystem;
  std::string key = op + "|" + params + "|seed=" + std::to_string(o.seed) + "|" + code_version();
  char name[32];
  std::snprintf(name, sizeof name, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  std::string stem = op;
  std::replace(stem.begin(), stem.end(), ' ', '-');
  fs::path dir(o.cache_dir);
  fs::path file = dir / (stem + "-" + name + ".json");
  {
    std::ifstream in(file);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        Json j = Json::parse(ss.str());
        if (j.value("_cache_key", std::string()) == key) {
          j.erase("_cache_key");
          return j;
        }
      } catch (const Json::exception&) {
      }
    }
  }
  Json result = compute();
  std::error_code ec;
  fs::create_directories(dir, ec);
  Json stored = result;
  stored["_cache_key"] = key;
  fs::path tmp = dir / (file.filename().string() + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())));
  {
    std::ofstream out(tmp);
    out << stored.dump() << '\n';
  }
  fs::rename(tmp, file, ec);
  if (ec) fs::remove(tmp, ec);
  return result;
}

// ---- fusion ----

Json fusion_table(const Options& o) {
  need(o.m, "m");
  need(o.n, "n");
  Json j;
  j["m"] = o.m;
  j["n"] = o.n;
  fusion::FusionRing ring;
  try {
    ring = fusion::build_fusion_ring(static_cast<int>(o.m), static_cast<int>(o.n));
  } catch (const fusion::NonIntegralFusion& e) {
    j["integral_match"] = false;
    j["error"] = e.what();
    return j;
  } catch (const fusion::NegativeFusion& e) {
    j["integral_match"] = false;
    j["error"] = e.what();
    return j;
  }
  std::size_t L = ring.size();
  j["label_count"] = L;
  j["expected_count"] = big(binomial(o.m - 1, o.n));
  j["count_match"] = BigInt(static_cast<unsigned long>(L)) == binomial(o.m - 1, o.n);
  j["integral_match"] = true;
  bool unit = true;
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b) {
      if (ring.coeff(a, b, 0) != (a == b ? 1 : 0)) unit = false;
      if (ring.coeff(0, a, b) != (a == b ? 1 : 0)) unit = false;
    }
  j["unit_match"] = unit;
  j["associativity_match"] = ring.check_associativity();
  Json labels = Json::array();
  for (const auto& lab : ring.labels) labels.push_back(lab.to_string());
  j["labels"] = labels;
  Json rows = Json::array();
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = a; b < L; ++b)
      for (std::size_t c = 0; c < L; ++c)
        if (long k = ring.coeff(a, b, c)) {
          Json row;
          row["a"] = labels[a];
          row["b"] = labels[b];
          row["c"] = labels[c];
          row["N"] = k;
          rows.push_back(row);
        }
  j["rows"] = rows;
  return j;
}

Json fusion_det_t(const Options& o) {
  need(o.m, "m");
  need(o.n, "n");
  auto ring = fusion::build_fusion_ring(static_cast<int>(o.m), static_cast<int>(o.n));
  BigInt det = fusion::det_T(ring);
  Json j;
  if (o.n == 1) {
    BigInt f = fusion::det_T_formula_sp1(o.m);
    j["det_T"] = big(det);
    j["formula"] = big(f);
    j["match"] = det == f;
    return j;
  }
  BigInt d = fusion::braun_douglas(static_cast<int>(o.m), static_cast<int>(o.n));
  bool div = true;
  if (o.m > 3)
    for (long p : prime_divisors(to_long(d)))
      if (det % p != 0) div = false;
  BigInt conj = fusion::det_T_conjecture(o.m, o.n);
  j["det_T"] = big(det);
  j["douglas_d"] = big(d);
  j["divisibility_match"] = div;
  j["conjecture"] = big(conj);
  j["conjecture_info"] = yes(conj == abs(det));
  BigInt shifted = fusion::det_T_conjecture(o.m, o.n, fusion::ConjectureReading::kShifted);
  j["conjecture_shifted"] = big(shifted);
  j["conjecture_shifted_info"] = yes(shifted == abs(det));
  return j;
}

Json fusion_douglas(const Options& o) {
  need(o.m, "m");
  need(o.n, "n");
  if (o.m < o.n + 2 || o.n < 1) throw UsageError("need n >= 1 and m >= n + 2");
  BigInt d = fusion::braun_douglas(static_cast<int>(o.m), static_cast<int>(o.n));
  BigInt s = fusion::braun_douglas_via_sums(o.m, o.n);
  BigInt cp = fusion::braun_douglas_closed_form(o.m, o.n, fusion::ClosedFormReading::kPrinted);
  BigInt cm = fusion::braun_douglas_closed_form(o.m, o.n, fusion::ClosedFormReading::kNumeratorM);
  Json j;
  j["m"] = o.m;
  j["n"] = o.n;
  j["d"] = big(d);
  j["via_sums"] = big(s);
  j["match"] = d == s;
  j["closed_form_printed"] = big(cp);
  j["closed_form_printed_info"] = yes(cp == d);
  j["closed_form_numerator_m"] = big(cm);
  j["closed_form_numerator_m_info"] = yes(cm == d);
  return j;
}

// ---- completion ----

Json completion_rank(const Options& o) {
  need(o.m, "m");
  need(o.n, "n");
  long p = need_prime(o);
  Json j;
  j["m"] = o.m;
  j["n"] = o.n;
  j["prime"] = p;
  j["delta"] = completion::delta(p, o.m);
  j["rank"] = big(completion::completion_rank_formula(o.m, o.n, p));
  return j;
}

Json completion_groebner(const Options& o) {
  need(o.m, "m");
  need(o.n, "n");
  long p = need_prime(o);
  int m = static_cast<int>(o.m), n = static_cast<int>(o.n);
  if (n < 1 || m < n + 2) throw UsageError("need n >= 1 and m >= n + 2");
  auto rep = completion::local_dimension_groebner(m, n, p);
  BigInt formula = completion::completion_rank_formula(m, n, p);
  Json j;
  j["m"] = m;
  j["n"] = n;
  j["prime"] = p;
  j["dimension"] = rep.dimension;
  j["formula"] = big(formula);
  j["match"] = BigInt(static_cast<unsigned long>(rep.dimension)) == formula;
  j["basis_size"] = rep.basis_size;
  j["pairs_processed"] = rep.pairs_processed;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(o.seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  completion::GroebnerOptions opt;
  opt.permutation = perm;
  j["permutation"] = perm;
  j["permutation_match"] = completion::local_dimension_groebner(m, n, p, opt).dimension == rep.dimension;
  std::size_t global = completion::global_dimension_groebner(m, n, p);
  j["global_dimension"] = global;
  j["global_match"] = BigInt(static_cast<unsigned long>(global)) == binomial(m - 1, n);
  return j;
}

Json completion_tower(const Options& o) {
  need(o.m, "m");
  long p = need_prime(o);
  long d = completion::delta(p, o.m);
  int l_max = static_cast<int>(o.l_max >= 0 ? o.l_max : 2 * d + 2);
  auto rep = completion::completion_tower_sp1(o.m, l_max, p, static_cast<int>(o.precision));
  Json j;
  j["m"] = o.m;
  j["prime"] = p;
  j["precision"] = rep.precision;
  j["delta"] = rep.delta;
  j["stabilized_from"] = rep.stabilized_from ? Json(*rep.stabilized_from) : Json(nullptr);
  bool maps = true;
  Json rows = Json::array();
  for (const auto& st : rep.stages) {
    Json row;
    row["l"] = st.l;
    row["structure"] = st.structure.to_string();
    row["full_precision_summands"] = st.full_precision_summands;
    row["well_defined"] = st.well_defined_map;
    maps = maps && st.well_defined_map;
    rows.push_back(row);
  }
  j["maps_match"] = maps;
  // reaching (Z/p^k)^delta needs l large compared with the precision k
  j["stable_info"] = yes(rep.stabilized_from.has_value());
  j["rows"] = rows;
  return j;
}

// ---- ktheory ----

Json ktheory_y_group(const Options& o) {
  need(o.m, "m");
  need(o.l, "l");
  if (o.m < 2 || o.l < 1) throw UsageError("need m >= 2, l >= 1");
  std::vector<long> primes = o.prime > 0 ? std::vector<long>{need_prime(o)} : prime_divisors(o.m);
  auto corrected = ktheory::y_group_structure(o.m, o.l, ktheory::EpsilonReading::kCorrected);
  auto printed = ktheory::y_group_structure(o.m, o.l, ktheory::EpsilonReading::kPrinted);
  Json j;
  j["m"] = o.m;
  j["l"] = o.l;
  bool all = true;
  Json rows = Json::array();
  for (long p : primes) {
    AbelianPStructure c = corrected.count(p) ? corrected[p] : AbelianPStructure(p, {});
    AbelianPStructure pr = printed.count(p) ? printed[p] : AbelianPStructure(p, {});
    AbelianPStructure oracle = ktheory::y_group_oracle(o.m, o.l, p);
    Json row;
    row["prime"] = p;
    row["structure"] = exponents(c);
    row["oracle"] = exponents(oracle);
    row["match"] = c == oracle;
    row["printed"] = exponents(pr);
    row["printed_info"] = yes(pr == oracle);
    all = all && c == oracle;
    rows.push_back(row);
  }
  j["match"] = all;
  j["rows"] = rows;
  return j;
}

int precision_for(long m, long l, long p) {
  auto y = ktheory::y_group_oracle(m, l, p);
  int mx = 0;
  for (int e : y.exponents) mx = std::max(mx, e);
  return 2 + mx;
}

AbelianPStructure p_part(const std::optional<std::vector<BigInt>>& diag, long p) {
  if (!diag) return AbelianPStructure(p, {kInfiniteExponent});
  return AbelianPStructure::from_diagonal(p, *diag);
}

Json ktheory_lhp_ring(const Options& o) {
  need(o.m, "m");
  need(o.l, "l");
  long p = need_prime(o);
  if (o.m < 2 || o.l < 1 || o.t_cutoff < 1) throw UsageError("need m >= 2, l >= 1, t-cutoff >= 1");
  int D = static_cast<int>(o.t_cutoff);
  int K = precision_for(o.m, o.l, p);
  BigInt pk = pow_big(BigInt(p), K);
  auto ring = ktheory::lhp_ring(o.m, o.l);
  Json j;
  j["m"] = o.m;
  j["l"] = o.l;
  j["prime"] = p;
  j["t_cutoff"] = D;
  j["precision"] = K;
  j["N"] = big(ktheory::lhp_characteristic_bound(o.m, o.l));
  Json gb = Json::array();
  for (const auto& g : ring.groebner_basis()) gb.push_back(ring.to_string(g));
  j["groebner_basis"] = gb;

  auto oracle = ktheory::lhp_truncated_oracle(o.m, o.l, p, D, K);
  auto truncated = ktheory::lhp_ring(o.m, o.l, D, pk);
  auto gb_struct = p_part(truncated.additive_structure(), p);
  j["truncated_structure"] = exponents(gb_struct);
  j["oracle"] = exponents(oracle.structure);
  j["oracle_stable"] = oracle.stable;
  j["truncated_match"] = gb_struct == oracle.structure;

  auto y = ktheory::y_group_oracle(o.m, o.l, p);
  auto quotient = p_part(ktheory::lhp_ring(o.m, o.l, 1, pk).additive_structure(), p);
  j["quotient_t_structure"] = exponents(quotient);
  j["quotient_t_match"] = quotient == y;
  bool graded = true;
  Json pieces = Json::array();
  for (const auto& piece : ktheory::lhp_graded_pieces(o.m, o.l, p, D, K)) {
    pieces.push_back(exponents(piece));
    graded = graded && piece == y;
  }
  j["graded_pieces"] = pieces;
  j["graded_match"] = graded;

  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> te(0, 3 * D), ye(0, static_cast<int>(2 * o.l + 2));
  std::uniform_int_distribution<long> ce(-50, 50);
  bool confluent = true;
  for (int s = 0; s < 1000; ++s) {
    Monomial mono = Monomial::var(0, te(rng)) * Monomial::var(1, ye(rng));
    long c = ce(rng);
    auto f = ring.term(mono, c == 0 ? 1 : c);
    if (!(ring.to_string(ring.normal_form(f)) == ring.to_string(ring.normal_form(f, true)))) confluent = false;
  }
  j["confluence_samples"] = 1000;
  j["confluence_match"] = confluent;
  return j;
}

Json ktheory_path_table(const Options& o) {
  need(o.m, "m");
  need(o.l, "l");
  long p = need_prime(o);
  if (o.m % p) throw UsageError("--prime must divide --m");
  int D = static_cast<int>(o.t_cutoff);
  int K = precision_for(o.m, o.l, p);
  auto pt = ktheory::lhp_additive_path_table(o.m, o.l, p, D);
  auto oracle = ktheory::lhp_truncated_oracle(o.m, o.l, p, D, K);
  Json j;
  j["m"] = o.m;
  j["l"] = o.l;
  j["prime"] = p;
  j["t_cutoff"] = D;
  j["lengths"] = pt.lengths();
  j["in_window_lengths"] = pt.in_window_lengths();
  j["oracle"] = exponents(oracle.structure);
  j["oracle_stable"] = oracle.stable;
  j["disjoint_match"] = pt.disjoint;
  j["in_window_match"] = contains_multiset(oracle.structure.exponents, pt.in_window_lengths());
  j["full_info"] = yes(pt.lengths() == oracle.structure.exponents);
  Json rows = Json::array();
  for (const auto& path : pt.paths) {
    Json row;
    row["table"] = path.table;
    row["start"] = path.start_col;
    row["window"] = path.window;
    row["critical"] = path.critical;
    row["boundary"] = path.boundary;
    row["length"] = path.length();
    std::string cells;
    for (const auto& c : path.cells) {
      if (!cells.empty()) cells += ' ';
      cells += std::to_string(c.table) + ":" + std::to_string(c.row) + "," + std::to_string(c.col);
    }
    row["cells"] = cells;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json ktheory_coproduct(const Options& o) {
  need(o.m, "m");
  need(o.l, "l");
  long p = need_prime(o);
  auto rep = ktheory::coproduct_values(o.m, o.l, p);
  std::string yl = "y^" + std::to_string(o.l);
  Json j;
  j["m"] = o.m;
  j["l"] = o.l;
  j["prime"] = p;
  j["delta"] = completion::delta(p, o.m);
  j["nu_1"] = std::to_string(o.l + 1) + "*" + yl + "⊗" + yl;
  j["nu_1_mod_p"] = rep.nu_one == 0 ? std::string("0") : rep.nu_one.get_str() + "*" + yl + "⊗" + yl;
  j["nu_t"] = rep.nu_t_nonzero ? yl + "⊗" + yl : std::string("0");
  j["coefficient_condition"] = rep.sigma_mod_p_starts_at_l;
  j["l_is_delta"] = rep.l_is_delta;
  j["match"] = rep.sigma_mod_p_starts_at_l == rep.l_is_delta;
  return j;
}

Json ktheory_euler(const Options& o) {
  need(o.l, "l");
  auto rep = ktheory::euler_and_t(o.l);
  Json j;
  j["l"] = o.l;
  j["E"] = rep.euler_coeff.get_str() + "*y^" + std::to_string(o.l);
  j["E_squared_zero_match"] = rep.square_vanishes;
  j["T"] = rep.t_description;
  return j;
}

// ---- associated graded ----

Json gr_filtration(const Options& o) {
  need(o.r, "r");
  if (o.r < 2) throw UsageError("--r must be >= 2");
  auto rep = completion::gr_filtration(static_cast<int>(o.r));
  Json j;
  j["r"] = rep.r;
  j["n"] = rep.n;
  j["two_degree"] = rep.two_degree;
  j["two_expected_degree"] = 1 << (rep.r - 1);
  j["two_match"] = rep.two_degree == (1 << (rep.r - 1)) && rep.two_matches_gamma;
  j["generator_count"] = rep.generator_count;
  j["rank"] = rep.n + 1;
  bool dims = true, rel = true;
  Json rows = Json::array();
  for (std::size_t k = 0; k < rep.pieces.size(); ++k) {
    Json row;
    row["degree"] = rep.pieces[k].degree;
    row["structure"] = rep.pieces[k].structure.to_string();
    row["dim"] = rep.pieces[k].structure.summands();
    row["predicted"] = rep.predicted_dims[k];
    row["generators"] = rep.pieces[k].generators;
    dims = dims && static_cast<int>(rep.pieces[k].structure.summands()) == rep.predicted_dims[k];
    rows.push_back(row);
  }
  Json rels = Json::array();
  for (const auto& rc : rep.relations) {
    rels.push_back({{"relation", rc.name}, {"degree", rc.degree}, {"holds", rc.holds}});
    rel = rel && rc.holds;
  }
  j["relations"] = rels;
  j["dims_match"] = dims;
  j["relations_match"] = rel;
  j["rows"] = rows;
  return j;
}

// ---- verify ----

struct Check {
  std::string name, params;
  std::function<std::pair<std::string, std::string>()> run;  // status, detail
};

unsigned worker_count() {
  if (const char* env = std::getenv("VERLINDE_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return static_cast<unsigned>(w);
  }
  return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

// The correction rule, read verbatim, moves the wrong cell here (v_p(m) >= 3, c >= 1);
// the other reading of the rule breaks (4,1,2) and (12,1,2) instead.
bool known_path_table_failure(long m, long l, long p) {
  return p == 2 && ((m == 8 && l == 1) || (m == 16 && l == 1) || (m == 16 && l == 5));
}

std::pair<std::string, std::string> pass_fail(bool ok, std::string detail = {}) { return {ok ? "PASS" : "FAIL", detail}; }

Json verify_all(const Options& o) {
  long max_m = o.max_m, max_n = o.max_n;
  if (max_m < 3 || max_n < 1) throw UsageError("need --max-m >= 3, --max-n >= 1");
  std::vector<Check> checks;
  auto P = [](std::initializer_list<std::pair<const char*, long>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) s += (s.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
    return s;
  };

  for (long m = 3; m <= max_m; ++m)
    checks.push_back({"det_t_formula", P({{"m", m}}), [m] {
                        BigInt det = fusion::det_T(fusion::build_fusion_ring(static_cast<int>(m), 1));
                        BigInt f = fusion::det_T_formula_sp1(m);
                        std::string d = det.get_str() + " vs " + f.get_str();
                        if (det == f) return std::make_pair(std::string("PASS"), d);
                        // eigenvalues of T are sums of squares of real characters, so det > 0
                        if (det == abs(f)) return std::make_pair(std::string("FAIL-DOCUMENTED"), d + " (printed sign)");
                        return std::make_pair(std::string("FAIL"), d);
                      }});
  for (long n = 1; n <= max_n; ++n)
    for (long m = n + 2; m <= max_m; ++m) {
      checks.push_back({"fusion_ring", P({{"m", m}, {"n", n}}), [m, n] {
                          try {
                            auto r = fusion::build_fusion_ring(static_cast<int>(m), static_cast<int>(n));
                            bool ok = BigInt(static_cast<unsigned long>(r.size())) == binomial(m - 1, n) && r.check_associativity();
                            for (std::size_t a = 0; a < r.size(); ++a)
                              for (std::size_t b = 0; b < r.size(); ++b) ok = ok && r.coeff(a, b, 0) == (a == b ? 1 : 0);
                            return pass_fail(ok, std::to_string(r.size()) + " labels");
                          } catch (const fusion::NonIntegralFusion& e) {
                            return pass_fail(false, e.what());
                          } catch (const fusion::NegativeFusion& e) {
                            return pass_fail(false, e.what());
                          }
                        }});
      checks.push_back({"douglas_sums", P({{"m", m}, {"n", n}}), [m, n] {
                          BigInt d = fusion::braun_douglas(static_cast<int>(m), static_cast<int>(n));
                          BigInt s = fusion::braun_douglas_via_sums(m, n);
                          return pass_fail(d == s, d.get_str() + " vs " + s.get_str());
                        }});
      for (auto reading : {fusion::ClosedFormReading::kPrinted, fusion::ClosedFormReading::kNumeratorM})
        checks.push_back({reading == fusion::ClosedFormReading::kPrinted ? "douglas_closed_form" : "douglas_closed_form_m",
                          P({{"m", m}, {"n", n}}), [m, n, reading] {
                            BigInt d = fusion::braun_douglas(static_cast<int>(m), static_cast<int>(n));
                            BigInt c = fusion::braun_douglas_closed_form(m, n, reading);
                            return std::make_pair(std::string(d == c ? "INFO-MATCH" : "INFO-MISMATCH"), d.get_str() + " vs " + c.get_str());
                          }});
      std::vector<long> primes = prime_divisors(m);
      if (std::find(primes.begin(), primes.end(), 2) == primes.end()) primes.insert(primes.begin(), 2);
      for (long p : primes)
        checks.push_back({"completion_rank", P({{"m", m}, {"n", n}, {"p", p}}), [m, n, p] {
                            auto rep = completion::local_dimension_groebner(static_cast<int>(m), static_cast<int>(n), p);
                            BigInt f = completion::completion_rank_formula(m, n, p);
                            return pass_fail(BigInt(static_cast<unsigned long>(rep.dimension)) == f,
                                             std::to_string(rep.dimension) + " vs " + f.get_str());
                          }});
      if (n >= 2 && m > 3) {
        checks.push_back({"det_t_divisibility", P({{"m", m}, {"n", n}}), [m, n] {
                            auto r = fusion::build_fusion_ring(static_cast<int>(m), static_cast<int>(n));
                            BigInt det = fusion::det_T(r);
                            BigInt d = fusion::braun_douglas(static_cast<int>(m), static_cast<int>(n));
                            bool ok = true;
                            for (long p : prime_divisors(to_long(d))) ok = ok && det % p == 0;
                            return pass_fail(ok, "d=" + d.get_str());
                          }});
        checks.push_back({"det_t_conjecture", P({{"m", m}, {"n", n}}), [m, n] {
                            BigInt det = fusion::det_T(fusion::build_fusion_ring(static_cast<int>(m), static_cast<int>(n)));
                            BigInt c = fusion::det_T_conjecture(m, n);
                            return std::make_pair(std::string(abs(det) == c ? "INFO-MATCH" : "INFO-MISMATCH"),
                                                  det.get_str() + " vs " + c.get_str());
                          }});
        checks.push_back({"det_t_conjecture_shifted", P({{"m", m}, {"n", n}}), [m, n] {
                            BigInt det = fusion::det_T(fusion::build_fusion_ring(static_cast<int>(m), static_cast<int>(n)));
                            BigInt c = fusion::det_T_conjecture(m, n, fusion::ConjectureReading::kShifted);
                            return std::make_pair(std::string(abs(det) == c ? "INFO-MATCH" : "INFO-MISMATCH"),
                                                  det.get_str() + " vs " + c.get_str());
                          }});
      }
    }
  for (long m = 2; m <= max_m; ++m)
    for (long l = 1; l <= 6; ++l)
      for (long p : prime_divisors(m)) {
        checks.push_back({"y_group", P({{"m", m}, {"l", l}, {"p", p}}), [m, l, p] {
                            auto s = ktheory::y_group_structure(m, l)[p];
                            auto oracle = ktheory::y_group_oracle(m, l, p);
                            return pass_fail(s == oracle, s.to_string() + " vs " + oracle.to_string());
                          }});
        checks.push_back({"coproduct", P({{"m", m}, {"l", l}, {"p", p}}), [m, l, p] {
                            auto r = ktheory::coproduct_values(m, l, p);
                            return pass_fail(r.sigma_mod_p_starts_at_l == r.l_is_delta, r.l_is_delta ? "nu(t) != 0" : "nu(t) = 0");
                          }});
        if (l <= 3)
          checks.push_back({"path_table", P({{"m", m}, {"l", l}, {"p", p}, {"D", 3}}), [m, l, p] {
                              auto pt = ktheory::lhp_additive_path_table(m, l, p, 3);
                              auto oracle = ktheory::lhp_truncated_oracle(m, l, p, 3, precision_for(m, l, p));
                              bool ok = pt.disjoint && oracle.stable && contains_multiset(oracle.structure.exponents, pt.in_window_lengths());
                              std::string detail = std::string("full ") + yes(pt.lengths() == oracle.structure.exponents);
                              if (!ok && known_path_table_failure(m, l, p))
                                return std::make_pair(std::string("FAIL-DOCUMENTED"), detail + " (correction rule)");
                              return pass_fail(ok, detail);
                            }});
      }
  for (long l = 1; l <= 10; ++l)
    checks.push_back({"euler_square", P({{"l", l}}), [l] { return pass_fail(ktheory::euler_and_t(l).square_vanishes); }});
  for (long r = 2; r <= 3; ++r)
    checks.push_back({"gr_filtration", P({{"r", r}}), [r] {
                        auto rep = completion::gr_filtration(static_cast<int>(r));
                        bool ok = rep.two_matches_gamma && rep.two_degree == (1 << (r - 1));
                        for (std::size_t k = 0; k < rep.pieces.size(); ++k)
                          ok = ok && static_cast<int>(rep.pieces[k].structure.summands()) == rep.predicted_dims[k];
                        for (const auto& rc : rep.relations) ok = ok && rc.holds;
                        return pass_fail(ok);
                      }});

  std::vector<std::pair<std::string, std::string>> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < checks.size();) {
      try {
        results[i] = checks[i].run();
      } catch (const std::exception& e) {
        results[i] = {"FAIL", std::string("exception: ") + e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < worker_count(); ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::map<std::string, long> counts;
  Json rows = Json::array();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    counts[results[i].first]++;
    Json row;
    row["check"] = checks[i].name;
    row["params"] = checks[i].params;
    row["status"] = results[i].first;
    row["detail"] = results[i].second;
    rows.push_back(row);
  }
  Json j;
  j["max_m"] = max_m;
  j["max_n"] = max_n;
  j["checks"] = checks.size();
  for (const char* s : {"PASS", "FAIL", "FAIL-DOCUMENTED", "INFO-MATCH", "INFO-MISMATCH"}) j[std::string("count_") + s] = counts[s];
  j["all_pass"] = counts["FAIL"] == 0;
  j["rows"] = rows;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verlinde algebra and twisted K-theory computations", "verlinde"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--cache-dir", o.cache_dir, "cache directory");
  app.add_option("--seed", o.seed, "seed for randomized checks");

  std::function<Json()> action;
  std::string op;
  std::string params;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Json(const Options&)> fn,
                  std::vector<std::pair<std::string, long*>> opts) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    for (auto& [flag, ptr] : opts) sub->add_option("--" + flag, *ptr);
    sub->callback([&, sub, fn, opts, name, parent] {
      op = (parent == &app ? "" : parent->get_name() + " ") + name;
      params.clear();
      for (const auto& [flag, ptr] : opts) params += flag + "=" + std::to_string(*ptr) + ";";
      action = [&, fn] { return fn(o); };
    });
    return sub;
  };

  auto* fusion = app.add_subcommand("fusion", "fusion rings V(m, n)");
  fusion->require_subcommand(1);
  fusion->fallthrough();
  leaf(fusion, "table", "structure constants", fusion_table, {{"m", &o.m}, {"n", &o.n}});
  leaf(fusion, "det-t", "determinant of the handle operator", fusion_det_t, {{"m", &o.m}, {"n", &o.n}});
  leaf(fusion, "douglas", "gcd of dimensions at level m - n", fusion_douglas, {{"m", &o.m}, {"n", &o.n}});

  auto* completion = app.add_subcommand("completion", "completions at primes");
  completion->require_subcommand(1);
  completion->fallthrough();
  leaf(completion, "rank", "rank formula", completion_rank, {{"m", &o.m}, {"n", &o.n}, {"prime", &o.prime}});
  leaf(completion, "groebner", "local dimension by Groebner basis", completion_groebner,
       {{"m", &o.m}, {"n", &o.n}, {"prime", &o.prime}});
  leaf(completion, "tower", "truncation tower for Sp(1)", completion_tower,
       {{"m", &o.m}, {"n", &o.n}, {"prime", &o.prime}, {"l-max", &o.l_max}, {"precision", &o.precision}});

  auto* ktheory = app.add_subcommand("ktheory", "twisted K-theory of HP^l and its loop space");
  ktheory->require_subcommand(1);
  ktheory->fallthrough();
  leaf(ktheory, "y-group", "K^tau_0 Y(l, 1)", ktheory_y_group, {{"m", &o.m}, {"l", &o.l}, {"prime", &o.prime}});
  leaf(ktheory, "lhp-ring", "loop product ring", ktheory_lhp_ring,
       {{"m", &o.m}, {"l", &o.l}, {"prime", &o.prime}, {"t-cutoff", &o.t_cutoff}});
  leaf(ktheory, "path-table", "additive structure by path tables", ktheory_path_table,
       {{"m", &o.m}, {"l", &o.l}, {"prime", &o.prime}, {"t-cutoff", &o.t_cutoff}});
  leaf(ktheory, "coproduct", "string coproduct values", ktheory_coproduct, {{"m", &o.m}, {"l", &o.l}, {"prime", &o.prime}});
  leaf(ktheory, "euler", "Euler class and T", ktheory_euler, {{"l", &o.l}});

  leaf(&app, "gr-filtration", "associated graded of the gamma filtration", gr_filtration, {{"r", &o.r}});

  auto* verify = app.add_subcommand("verify", "formula vs oracle sweeps");
  verify->require_subcommand(1);
  verify->fallthrough();
  leaf(verify, "all", "run every check", verify_all, {{"max-m", &o.max_m}, {"max-n", &o.max_n}});

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!action) {
    err << "error: no operation\n";
    return kExitUsage;
  }
  try {
    Json j = op == "verify all" ? action() : with_cache(o, op, params, action);
    out << render(j, o.format);
    return is_mismatch(j) ? kExitMismatch : kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace verlinde::cli
