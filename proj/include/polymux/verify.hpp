#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polymux/constructions.hpp"
#include "polymux/face_lattice.hpp"
#include "polymux/formulas.hpp"
#include "polymux/graphs.hpp"
#include "polymux/matrix_rank.hpp"
#include "polymux/poset_iso.hpp"
#include "polymux/toric.hpp"

namespace polymux {

struct CheckResult {
  std::string check;
  std::string params;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string detail;  // machine-readable counterexample on failure
};

struct VerificationReport {
  std::vector<CheckResult> rows;
  int skipped_cells = 0;

  bool all_pass() const {
    for (const CheckResult& r : rows)
      if (!r.pass) return false;
    return true;
  }

  void add(const std::string& check, const std::string& params, const std::string& expected,
           const std::string& actual, const std::string& detail = "") {
    rows.push_back({check, params, expected, actual, expected == actual, detail});
  }
  void add_bool(const std::string& check, const std::string& params, bool ok,
                const std::string& detail = "") {
    rows.push_back({check, params, "pass", ok ? "pass" : "fail", ok, detail});
  }

  nlohmann::json to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const CheckResult& r : rows) {
      nlohmann::json row;
      row["check"] = r.check;
      row["params"] = r.params;
      row["expected"] = r.expected;
      row["actual"] = r.actual;
      row["pass"] = r.pass;
      if (!r.detail.empty()) row["counterexample"] = r.detail;
      rows_json.push_back(row);
    }
    return nlohmann::json{{"all_pass", all_pass()}, {"skipped_cells", skipped_cells}, {"checks", rows_json}};
  }

  void print(std::ostream& out) const {
    for (const CheckResult& r : rows) {
      out << (r.pass ? "[PASS] " : "[FAIL] ") << r.check << "  " << r.params;
      if (!r.pass) {
        out << "  expected=" << r.expected << " actual=" << r.actual;
        if (!r.detail.empty()) out << "  counterexample=" << r.detail;
      }
      out << "\n";
    }
  }
};

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "fvector",   "flag",     "toric",       "elementary",        "gale",
      "duality",   "quotients", "cliques",    "twofaces",          "coloring",
      "hamiltonian", "diameter", "weakly-neighborly", "dual-facet-bound", "flag-duality"};
  return names;
}

namespace detail {

template <typename T>
std::string seq_to_string(const std::vector<T>& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

struct CheckContext {
  PolytopeSpec spec;
  FaceLattice L;
  std::optional<PolytopeGraph> G;  // band graphs and polygons only

  // Band parameter: k for ordinary, d for multiplex/simplex, 2 for polygon.
  int band() const {
    switch (spec.kind) {
      case Kind::Ordinary: return spec.k;
      case Kind::Multiplex:
      case Kind::Simplex: return spec.d;
      case Kind::Polygon: return 2;
      case Kind::Pyramid: return 0;
    }
    return 0;
  }
  bool flag_matches_multiplex() const {
    return spec.kind == Kind::Multiplex || spec.kind == Kind::Simplex || spec.kind == Kind::Pyramid;
  }
};

inline CheckContext make_context(const PolytopeSpec& spec) {
  CheckContext ctx;
  ctx.spec = spec;
  ctx.L = build_polytope(spec);
  switch (spec.kind) {
    case Kind::Multiplex: ctx.G = multiplex_edges(spec.d, spec.n); break;
    case Kind::Simplex: ctx.G = multiplex_edges(spec.d, spec.d); break;
    case Kind::Ordinary: ctx.G = ordinary_edges(spec.k, spec.n); break;
    case Kind::Polygon: ctx.G = band_graph(2, spec.n); break;
    case Kind::Pyramid: break;
  }
  return ctx;
}

inline int multiplex_n_of(const PolytopeSpec& spec) {
  return spec.kind == Kind::Simplex ? spec.d : spec.n;
}

inline void check_fvector(const CheckContext& ctx, VerificationReport& rep) {
  const std::string p = ctx.spec.to_string();
  std::vector<long long> actual = ctx.L.f_vector();
  std::vector<long long> expected;
  switch (ctx.spec.kind) {
    case Kind::Multiplex:
    case Kind::Simplex:
    case Kind::Pyramid: {
      int n = multiplex_n_of(ctx.spec);
      for (int i = 0; i < ctx.spec.d; ++i)
        expected.push_back(static_cast<long long>(multiplex_f(ctx.spec.d, n, i)));
      break;
    }
    case Kind::Ordinary:
      for (int i = 0; i < ctx.spec.d; ++i)
        expected.push_back(static_cast<long long>(dinh_f(ctx.spec.d, ctx.spec.k, ctx.spec.n, i)));
      break;
    case Kind::Polygon:
      expected = {ctx.spec.n + 1, ctx.spec.n + 1};
      break;
  }
  rep.add("fvector", p, seq_to_string(expected), seq_to_string(actual));

  long long euler = 0;
  for (size_t i = 0; i < actual.size(); ++i) euler += (i % 2 == 0) ? actual[i] : -actual[i];
  long long target = 1 - (ctx.L.dim % 2 == 0 ? 1 : -1);
  rep.add("fvector/euler", p, std::to_string(target), std::to_string(euler));
}

inline void check_flag(const CheckContext& ctx, VerificationReport& rep) {
  const std::string p = ctx.spec.to_string();
  FlagVector fv = flag_vector(ctx.L);
  int d = ctx.L.dim;
  if (ctx.flag_matches_multiplex() || ctx.spec.kind == Kind::Polygon) {
    int n = ctx.spec.kind == Kind::Polygon ? ctx.spec.n : multiplex_n_of(ctx.spec);
    bool ok = true;
    std::string bad;
    for (unsigned mask = 0; mask < fv.counts.size(); ++mask) {
      std::vector<int> S;
      for (int r = 0; r < d; ++r)
        if (mask & (1u << r)) S.push_back(r);
      Int expect = multiplex_flag(d, n, S);
      if (Int(fv.counts[mask]) != expect) {
        ok = false;
        bad = "S=" + seq_to_string(S) + " formula=" + expect.str() + " lattice=" + std::to_string(fv.counts[mask]);
        break;
      }
    }
    rep.add_bool("flag", p, ok, bad);
  } else {
    bool ok = fv.counts[0] == 1;
    auto f = ctx.L.f_vector();
    for (int i = 0; i < d; ++i) ok = ok && fv.at(std::vector<int>{i}) == f[i];
    rep.add_bool("flag/singletons", p, ok);
    long long f02 = fv.at(std::vector<int>{0, 2});
    long long expect = 3 * f[2] + (ctx.spec.n - ctx.spec.k);
    rep.add("flag/f02", p, std::to_string(expect), std::to_string(f02));
  }
}

inline void check_toric(const CheckContext& ctx, VerificationReport& rep) {
  const std::string p = ctx.spec.to_string();
  rep.add_bool("toric/eulerian", p, is_eulerian(ctx.L));
  ToricHVector h = toric_h(ctx.L);
  bool palin = h.front() == 1;
  for (size_t i = 0; i < h.size(); ++i) palin = palin && h[i] == h[h.size() - 1 - i];
  rep.add_bool("toric/palindrome", p, palin, seq_to_string(h));

  if (ctx.flag_matches_multiplex() || ctx.spec.kind == Kind::Polygon) {
    int n = ctx.spec.kind == Kind::Polygon ? ctx.spec.n : multiplex_n_of(ctx.spec);
    int d = ctx.spec.kind == Kind::Polygon ? 2 : ctx.spec.d;
    rep.add("toric", p, seq_to_string(multiplex_h(d, n)), seq_to_string(h));
  } else if (ctx.spec.d == 5) {
    rep.add("toric", p, seq_to_string(toric_h5_ordinary(ctx.spec.k, ctx.spec.n)), seq_to_string(h));
  } else {
    Int h2 = h2_ordinary(ctx.spec.d, ctx.spec.k, ctx.spec.n);
    rep.add("toric/h2", p, h2.str(), std::to_string(h[2]));
  }
}

inline void check_elementary(const CheckContext& ctx, VerificationReport& rep) {
  if (ctx.L.dim < 3) return;
  const std::string p = ctx.spec.to_string();
  bool beta_zero = is_elementary(ctx.L);
  bool expected = ctx.spec.kind != Kind::Ordinary || ctx.spec.k == ctx.spec.d;
  rep.add("elementary", p, expected ? "true" : "false", beta_zero ? "true" : "false",
          "beta=" + lattice_beta(ctx.L).str());
  ToricHVector h = toric_h(ctx.L);
  rep.add_bool("elementary/h1h2", p, (h[1] == h[2]) == beta_zero,
               "beta route and toric route disagree");
}

inline void check_gale(const CheckContext& ctx, VerificationReport& rep) {
  const std::string p = ctx.spec.to_string();
  bool expected = true;
  if (ctx.spec.kind == Kind::Multiplex) expected = (ctx.spec.d % 2 == 1) || ctx.spec.n == ctx.spec.d;
  rep.add("gale", p, expected ? "true" : "false", is_gale_polytope(ctx.L) ? "true" : "false");
}

inline void check_duality(const CheckContext& ctx, VerificationReport& rep) {
  if (ctx.spec.kind != Kind::Multiplex && ctx.spec.kind != Kind::Simplex) return;
  const std::string p = ctx.spec.to_string();
  bool ok = true;
  std::string why;
  try {
    self_duality_witness(ctx.L);
  } catch (const NotAntiIso& e) {
    ok = false;
    why = e.what();
  }
  rep.add_bool("duality", p, ok, why);
}

inline void check_quotients(const CheckContext& ctx, VerificationReport& rep) {
  const std::string p = ctx.spec.to_string();
  if (ctx.spec.kind == Kind::Multiplex || ctx.spec.kind == Kind::Simplex ||
      ctx.spec.kind == Kind::Polygon) {
    for (int v = 0; v < ctx.L.n_vertices; ++v) {
      if (!quotient_is_multiplex(ctx.L, v)) {
        rep.add_bool("quotients", p, false, "vertex " + std::to_string(v));
        return;
      }
    }
    rep.add_bool("quotients", p, true);
  } else if (ctx.spec.kind == Kind::Ordinary) {
    int d = ctx.spec.d;
    for (int id : ctx.L.faces_of_dim(d - 1)) {
      int verts = ctx.L.faces[id].size();
      if (verts < d || verts > 2 * d - 2 || !face_is_multiplex(ctx.L, ctx.L.faces[id])) {
        rep.add_bool("quotients", p, false, "facet " + ctx.L.faces[id].to_digits());
        return;
      }
    }
    rep.add_bool("quotients", p, true);
  }
}

inline void check_cliques(const CheckContext& ctx, VerificationReport& rep) {
  if (!ctx.G) return;
  const std::string p = ctx.spec.to_string();
  CliqueFaceResult res = cliques_are_faces(ctx.L, *ctx.G);
  bool expect_all = !(ctx.spec.kind == Kind::Ordinary && ctx.spec.k > ctx.spec.d);
  rep.add("cliques", p, expect_all ? "true" : "false", res.all_faces ? "true" : "false",
          res.all_faces ? "" : "clique " + res.counterexample.to_digits());

  if (ctx.spec.kind == Kind::Multiplex || ctx.spec.kind == Kind::Simplex) {
    int d = ctx.spec.d;
    int n = multiplex_n_of(ctx.spec);
    std::vector<long long> by_size(n + 2, 0);
    for (const VertexSet& c : enumerate_cliques(*ctx.G, d + 2)) ++by_size[c.size()];
    bool ok = by_size[d + 2] == 0;
    std::string bad = ok ? "" : "clique of size d+2 present";
    for (int i = 0; i <= d - 1 && ok; ++i) {
      Int expect = (n > d) ? simplex_face_count(d, n, i) : binom(d + 1, i + 1);
      if (Int(by_size[i + 1]) != expect) {
        ok = false;
        bad = "size " + std::to_string(i + 1) + ": count=" + std::to_string(by_size[i + 1]) +
              " formula=" + expect.str();
      }
    }
    rep.add_bool("cliques/simplex-count", p, ok, bad);
  }
}

inline void check_twofaces(const CheckContext& ctx, VerificationReport& rep) {
  const std::string p = ctx.spec.to_string();
  std::vector<VertexSet> nontri = nontriangular_two_faces(ctx.L);
  if (ctx.spec.kind == Kind::Multiplex || ctx.spec.kind == Kind::Simplex ||
      ctx.spec.kind == Kind::Ordinary) {
    if (ctx.spec.kind != Kind::Ordinary && ctx.spec.d < 3) return;
    int k = ctx.band();
    int n = multiplex_n_of(ctx.spec);
    std::vector<VertexSet> expected;
    for (int i = 0; i + k + 1 <= n && i <= n - k - 1; ++i)
      expected.push_back(VertexSet{i, i + 1, i + k, i + k + 1});
    std::sort(expected.begin(), expected.end(), size_lex_less);
    bool ok = nontri.size() == expected.size();
    for (size_t i = 0; ok && i < nontri.size(); ++i) ok = nontri[i] == expected[i];
    for (const VertexSet& q : nontri) ok = ok && q.size() == 4;
    rep.add_bool("twofaces", p, ok, "expected the " + std::to_string(n - k) + " quadrilaterals");
    if (ctx.G) {
      bool diag_ok = true;
      for (int i = 0; i <= n - k - 1; ++i) {
        if (ctx.G->has_edge(i, i + k + 1) || ctx.G->has_edge(i + 1, i + k)) diag_ok = false;
      }
      rep.add_bool("twofaces/diagonals", p, diag_ok);
    }
  } else if (ctx.spec.kind == Kind::Pyramid) {
    int base = ctx.spec.n - ctx.spec.d + 3;
    size_t expected = (ctx.spec.d >= 3 && base >= 4) ? 1 : 0;
    bool ok = nontri.size() == expected;
    if (expected == 1) ok = ok && nontri[0] == VertexSet::range(0, base - 1);
    rep.add_bool("twofaces", p, ok, "pyramid base polygon");
  }
}

inline void check_coloring(const CheckContext& ctx, VerificationReport& rep) {
  if (!ctx.G) return;
  const std::string p = ctx.spec.to_string();
  ChromaticCertificate cert = chromatic_number(*ctx.G, ctx.spec);
  int expected;
  int band = ctx.band();
  int n = multiplex_n_of(ctx.spec);
  if (band == 2) {
    expected = (ctx.G->n_vertices % 2 == 0) ? 2 : 3;  // cycle parity
  } else {
    expected = (n == band) ? band + 1 : band;
  }
  rep.add("coloring", p, std::to_string(expected), std::to_string(cert.chi));
  if (ctx.G->n_vertices <= 13) {
    rep.add("coloring/exhaustive", p, std::to_string(cert.chi),
            std::to_string(exact_chromatic_number(*ctx.G)));
  }
}

inline void check_hamiltonian(const CheckContext& ctx, VerificationReport& rep) {
  if (!ctx.G) return;
  const std::string p = ctx.spec.to_string();
  bool ok = true;
  std::string why;
  try {
    std::vector<int> cycle = hamiltonian_cycle(*ctx.G);
    std::vector<char> seen(ctx.G->n_vertices, 0);
    ok = static_cast<int>(cycle.size()) == ctx.G->n_vertices;
    for (size_t i = 0; ok && i < cycle.size(); ++i) {
      if (seen[cycle[i]]++) ok = false;
      if (!ctx.G->has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) ok = false;
    }
  } catch (const NotEdge& e) {
    ok = false;
    why = e.what();
  }
  rep.add_bool("hamiltonian", p, ok, why);
}

inline void check_diameter(const CheckContext& ctx, VerificationReport& rep) {
  if (!ctx.G) return;
  const std::string p = ctx.spec.to_string();
  int band = ctx.band();
  int n = multiplex_n_of(ctx.spec);
  int expected = (n + band - 1) / band;
  rep.add("diameter", p, std::to_string(expected), std::to_string(diameter(*ctx.G)));
}

inline void check_weakly_neighborly(const CheckContext& ctx, VerificationReport& rep) {
  const std::string p = ctx.spec.to_string();
  NeighborlinessResult res = is_weakly_neighborly(ctx.L);
  bool expected = true;
  switch (ctx.spec.kind) {
    case Kind::Simplex:
    case Kind::Polygon:
    case Kind::Pyramid: expected = true; break;
    case Kind::Multiplex: expected = ctx.spec.n <= ctx.spec.d + 1; break;
    case Kind::Ordinary:
      expected = ctx.spec.n == ctx.spec.k ||
                 (ctx.spec.k == ctx.spec.d && ctx.spec.n == ctx.spec.d + 1);
      break;
  }
  rep.add("weakly-neighborly", p, expected ? "true" : "false",
          res.weakly_neighborly ? "true" : "false",
          res.weakly_neighborly ? "" : "witness " + res.witness.to_digits() + " min face dim " +
                                            std::to_string(res.witness_face_dim));

  // For n >= k+2 the ends never share a two-face, so {0, n} must witness.
  int band = ctx.band();
  int n = multiplex_n_of(ctx.spec);
  if ((ctx.spec.kind == Kind::Multiplex || ctx.spec.kind == Kind::Ordinary) && n >= band + 2) {
    VertexSet ends{0, n};
    int dim = subset_min_face_dim(ctx.L, ends);
    rep.add_bool("weakly-neighborly/ends", p, dim > 2,
                 "min face over {0,n} has dim " + std::to_string(dim));
  }
}

inline void check_dual_facet_bound(const CheckContext& ctx, VerificationReport& rep) {
  int d = ctx.spec.d;
  if (ctx.spec.kind != Kind::Ordinary && !(ctx.spec.kind == Kind::Multiplex && d % 2 == 1)) return;
  const std::string p = ctx.spec.to_string();
  int k = ctx.spec.kind == Kind::Ordinary ? ctx.spec.k : d;
  int m = (d - 1) / 2;
  Int bound = 3 * binom(k - m - 3, m - 1);
  long long count = 0;
  for (int id : ctx.L.faces_of_dim(ctx.L.dim - 1)) {
    if (ctx.L.faces[id].contains(1)) ++count;
  }
  rep.add_bool("dual-facet-bound", p, Int(count) >= bound,
               "facets at x1: " + std::to_string(count) + ", bound " + bound.str());
}

inline void check_flag_duality(const CheckContext& ctx, VerificationReport& rep) {
  const std::string p = ctx.spec.to_string();
  FlagVector fv = flag_vector(ctx.L);
  int d = ctx.L.dim;
  bool ok = true;
  std::string bad;
  for (unsigned mask = 1; mask < fv.counts.size(); ++mask) {
    std::vector<int> S;
    for (int r = 0; r < d; ++r)
      if (mask & (1u << r)) S.push_back(r);
    int sr = S.back();
    unsigned reflected = 1u << sr;
    for (size_t j = 0; j + 1 < S.size(); ++j) reflected |= 1u << (sr - 1 - S[j]);
    if (fv.counts[mask] != fv.counts[reflected]) {
      ok = false;
      bad = "S=" + seq_to_string(S) + ": " + std::to_string(fv.counts[mask]) + " vs " +
            std::to_string(fv.counts[reflected]);
      break;
    }
  }
  rep.add_bool("flag-duality", p, ok, bad);
}

}  // namespace detail

inline long long default_face_budget() {
  if (const char* env = std::getenv("POLYMUX_FACE_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 5000;
}

// Run the selected checks against one constructed polytope.
inline VerificationReport run_checks(const PolytopeSpec& spec,
                                     const std::vector<std::string>& checks) {
  std::set<std::string> wanted(checks.begin(), checks.end());
  bool all = wanted.empty() || wanted.count("all");
  for (const std::string& c : checks) {
    if (c != "all" && !std::count(all_check_names().begin(), all_check_names().end(), c))
      throw BadParams("unknown check: " + c);
  }
  auto on = [&](const char* name) { return all || wanted.count(name); };

  detail::CheckContext ctx = detail::make_context(spec);
  VerificationReport rep;
  if (on("fvector")) detail::check_fvector(ctx, rep);
  if (on("flag")) detail::check_flag(ctx, rep);
  if (on("toric")) detail::check_toric(ctx, rep);
  if (on("elementary")) detail::check_elementary(ctx, rep);
  if (on("gale")) detail::check_gale(ctx, rep);
  if (on("duality")) detail::check_duality(ctx, rep);
  if (on("quotients")) detail::check_quotients(ctx, rep);
  if (on("cliques")) detail::check_cliques(ctx, rep);
  if (on("twofaces")) detail::check_twofaces(ctx, rep);
  if (on("coloring")) detail::check_coloring(ctx, rep);
  if (on("hamiltonian")) detail::check_hamiltonian(ctx, rep);
  if (on("diameter")) detail::check_diameter(ctx, rep);
  if (on("weakly-neighborly")) detail::check_weakly_neighborly(ctx, rep);
  if (on("dual-facet-bound")) detail::check_dual_facet_bound(ctx, rep);
  if (on("flag-duality")) detail::check_flag_duality(ctx, rep);
  return rep;
}

// The default verification grids: multiplexes with d in [2,6], n in
// [d, d+5], and ordinary polytopes with d in {5,7}, k in [d, d+3],
// n in [k, k+3].  Cells whose predicted size exceeds the budget are
// skipped and counted.
inline VerificationReport run_default_grids(const std::vector<std::string>& checks,
                                            long long face_budget) {
  VerificationReport rep;
  auto run_cell = [&](const PolytopeSpec& spec) {
    if (predicted_face_total(spec) > face_budget) {
      ++rep.skipped_cells;
      return;
    }
    VerificationReport cell = run_checks(spec, checks);
    rep.rows.insert(rep.rows.end(), cell.rows.begin(), cell.rows.end());
  };
  for (int d = 2; d <= 6; ++d)
    for (int n = d; n <= d + 5; ++n) run_cell({Kind::Multiplex, d, 0, n});
  for (int d = 5; d <= 7; d += 2)
    for (int k = d; k <= d + 3; ++k)
      for (int n = k; n <= k + 3; ++n) run_cell({Kind::Ordinary, d, k, n});
  return rep;
}

// Spanning-slice report: the f-vectors of P^{d, d+floor(i/2), d+i} for
// i = 1..d must satisfy the Euler relation and span, i.e. have full rank d
// (the Euler hyperplane misses the origin, so affine spanning is plain
// linear rank here).
struct ConjectureReport {
  int d = 0;
  std::vector<PolytopeSpec> specs;
  std::vector<std::vector<Int>> f_vectors;
  bool euler_ok = true;
  int rank = 0;

  bool pass() const { return euler_ok && rank == d; }
};

inline ConjectureReport conjecture_report(int d) {
  if (d < 5 || d % 2 == 0 || d > 9) throw BadParams("conjecture slice needs odd d with 5 <= d <= 9");
  ConjectureReport rep;
  rep.d = d;
  for (int i = 1; i <= d; ++i) {
    PolytopeSpec s{Kind::Ordinary, d, d + i / 2, d + i};
    rep.specs.push_back(s);
    std::vector<Int> f;
    for (int j = 0; j < d; ++j) f.push_back(dinh_f(s.d, s.k, s.n, j));
    Int euler = 0;
    for (int j = 0; j < d; ++j) euler += (j % 2 == 0) ? f[j] : -f[j];
    if (euler != 2) rep.euler_ok = false;  // 1 - (-1)^d with d odd
    rep.f_vectors.push_back(std::move(f));
  }
  rep.rank = matrix_rank(rep.f_vectors);
  return rep;
}

}  // namespace polymux
