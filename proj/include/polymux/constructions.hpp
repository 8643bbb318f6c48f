#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "polymux/face_lattice.hpp"
#include "polymux/formulas.hpp"

namespace polymux {

enum class Kind { Multiplex, Ordinary, Polygon, Pyramid, Simplex };

inline std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Multiplex: return "multiplex";
    case Kind::Ordinary: return "ordinary";
    case Kind::Polygon: return "polygon";
    case Kind::Pyramid: return "pyramid";
    case Kind::Simplex: return "simplex";
  }
  return "?";
}

inline Kind parse_kind(const std::string& s) {
  if (s == "multiplex") return Kind::Multiplex;
  if (s == "ordinary") return Kind::Ordinary;
  if (s == "polygon") return Kind::Polygon;
  if (s == "pyramid") return Kind::Pyramid;
  if (s == "simplex") return Kind::Simplex;
  throw BadParams("unknown kind: " + s);
}

// Names one member of the combinatorial families handled here.
//   multiplex M^{d,n}: n >= d >= 2
//   ordinary  P^{d,k,n}: n >= k >= d = 2m+1 >= 5
//   polygon:   (n+1)-gon in boundary order, d = 2
//   pyramid   Q^{d,n-d}: (d-2)-fold pyramid over the (n-d+3)-gon
//   simplex   T^d = M^{d,d}
struct PolytopeSpec {
  Kind kind = Kind::Multiplex;
  int d = 0;
  int k = 0;  // ordinary only
  int n = 0;

  std::string to_string() const {
    std::string s = kind_name(kind) + " d=" + std::to_string(d);
    if (kind == Kind::Ordinary) s += " k=" + std::to_string(k);
    s += " n=" + std::to_string(n);
    return s;
  }
};

// Facet window i of M^{d,n}: vertices i-d+1..i-1 and i+1..i+d-1, indices
// clamped into [0, n] so out-of-range entries collapse onto the ends.
inline VertexSet multiplex_facet(int d, int n, int i) {
  VertexSet f;
  auto clamp_add = [&](int j) { f.add(std::min(std::max(j, 0), n)); };
  for (int j = i - d + 1; j <= i - 1; ++j) clamp_add(j);
  for (int j = i + 1; j <= i + d - 1; ++j) clamp_add(j);
  return f;
}

// All n+1 facets of M^{d,n}, in window order F_0..F_n.
inline std::vector<VertexSet> multiplex_facets(int d, int n) {
  require_multiplex_params(d, n);
  if (n + 1 > VertexSet::kMaxVertices) throw BadParams("too many vertices");
  std::vector<VertexSet> facets;
  facets.reserve(n + 1);
  for (int i = 0; i <= n; ++i) facets.push_back(multiplex_facet(d, n, i));
  for (size_t a = 0; a < facets.size(); ++a)
    for (size_t b = a + 1; b < facets.size(); ++b)
      if (facets[a] == facets[b]) throw Error("multiplex facet windows collided");
  return facets;
}

// Subsets of {lo..hi} of the given even size that split into disjoint
// pairs of consecutive integers; lexicographic order.
inline std::vector<VertexSet> paired_subsets(int lo, int hi, int size) {
  if (size < 0 || size % 2 != 0) throw OddSize("paired subsets have even size");
  std::vector<VertexSet> out;
  VertexSet cur;
  auto rec = [&](auto&& self, int start, int pairs_left) -> void {
    if (pairs_left == 0) {
      out.push_back(cur);
      return;
    }
    for (int j = start; j + 1 <= hi; ++j) {
      cur.add(j);
      cur.add(j + 1);
      self(self, j + 2, pairs_left - 1);
      cur.remove(j);
      cur.remove(j + 1);
    }
  };
  if (lo < 0) throw BadParams("paired subset range must be non-negative");
  rec(rec, lo, size / 2);
  return out;
}

namespace detail {

// Same enumeration but over an arbitrary integer window, for generator
// internals where the window can start below zero before clamping.
inline void paired_index_lists(int lo, int hi, int size,
                               std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int j = start; j + 1 <= hi; ++j) {
      cur.push_back(j);
      cur.push_back(j + 1);
      self(self, j + 2);
      cur.pop_back();
      cur.pop_back();
    }
  };
  if (size % 2 != 0) throw OddSize("paired subsets have even size");
  rec(rec, lo);
}

}  // namespace detail

// Facets of the ordinary polytope P^{d,k,n} per Dinh's description: for
// each window position i, each r in [1, m] and each paired (d-2r-1)-subset
// Y of {i+2r+1, ..., i+k-2},
//
//   X = {i..i+2r-1} u Y u {i+k..i+k+2r-1},
//
// indices clamped into [0, n], kept when |X| >= d.  Clamping makes distinct
// (i, r, Y) collide and occasionally produces non-maximal sets, so the
// result is deduplicated and pruned to maximal members, then validated
// against the closed-form facet count.  Output is sorted lexicographically.
inline std::vector<VertexSet> ordinary_facets(int d, int k, int n) {
  require_ordinary_params(d, k, n);
  if (n + 1 > VertexSet::kMaxVertices) throw BadParams("too many vertices");
  int m = (d - 1) / 2;
  auto clamp = [&](int j) { return std::min(std::max(j, 0), n); };

  std::vector<VertexSet> candidates;
  std::unordered_map<std::uint64_t, bool> seen;
  for (int i = -(k + 2 * m); i <= n; ++i) {
    for (int r = 1; r <= m; ++r) {
      std::vector<std::vector<int>> ys;
      detail::paired_index_lists(i + 2 * r + 1, i + k - 2, d - 2 * r - 1, ys);
      for (const std::vector<int>& y : ys) {
        VertexSet x;
        for (int j = i; j <= i + 2 * r - 1; ++j) x.add(clamp(j));
        for (int j : y) x.add(clamp(j));
        for (int j = i + k; j <= i + k + 2 * r - 1; ++j) x.add(clamp(j));
        if (x.size() < d) continue;
        if (seen.emplace(x.raw(), true).second) candidates.push_back(x);
      }
    }
  }

  // Drop candidates strictly contained in another candidate.
  std::sort(candidates.begin(), candidates.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  std::vector<VertexSet> facets;
  for (const VertexSet& c : candidates) {
    bool dominated = false;
    for (const VertexSet& f : facets) {
      if (c.proper_subset_of(f)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) facets.push_back(c);
  }

  Int expected = dinh_f(d, k, n, d - 1);
  if (Int(static_cast<long long>(facets.size())) != expected) {
    throw FacetCountMismatch("generated " + std::to_string(facets.size()) + " facets, formula says " +
                             expected.str());
  }
  std::sort(facets.begin(), facets.end(), lex_less);
  return facets;
}

// Edges of the v-gon in boundary order.
inline std::vector<VertexSet> polygon_lattice_facets(int v) {
  if (v < 3) throw BadParams("polygon needs at least 3 vertices");
  if (v > VertexSet::kMaxVertices) throw BadParams("too many vertices");
  std::vector<VertexSet> edges;
  for (int i = 0; i < v; ++i) edges.push_back(VertexSet{i, (i + 1) % v});
  return edges;
}

// Pyramid over a lattice: the new facet list is the old top plus every old
// facet extended by the apex, and the intersection closure does the rest.
inline FaceLattice pyramid(const FaceLattice& L) {
  int apex = L.n_vertices;
  std::vector<VertexSet> facets;
  facets.push_back(L.faces[L.top()]);
  for (int id : L.faces_of_dim(L.dim - 1)) {
    VertexSet f = L.faces[id];
    f.add(apex);
    facets.push_back(f);
  }
  return build_face_lattice(facets, L.n_vertices + 1);
}

// Gale condition for Y inside the ordered ground set V: every maximal run
// of Y-elements lying strictly between two members of V \ Y has even
// length.  Runs hanging off either end are unconstrained.
inline bool is_gale_subset(const VertexSet& Y, const VertexSet& V) {
  if (!Y.subset_of(V)) throw NotSubset("Y must be a subset of V");
  bool seen_outside = false;
  int run = 0;
  for (int v : V) {
    if (Y.contains(v)) {
      ++run;
    } else {
      if (seen_outside && run % 2 == 1) return false;
      seen_outside = true;
      run = 0;
    }
  }
  return true;
}

// A lattice is a Gale polytope when every facet vertex set is Gale in the
// ambient vertex order.
inline bool is_gale_polytope(const FaceLattice& L) {
  VertexSet all = VertexSet::full(L.n_vertices);
  for (int id : L.faces_of_dim(L.dim - 1)) {
    if (!is_gale_subset(L.faces[id], all)) return false;
  }
  return true;
}

inline void validate_spec(const PolytopeSpec& s) {
  switch (s.kind) {
    case Kind::Multiplex: require_multiplex_params(s.d, s.n); break;
    case Kind::Ordinary: require_ordinary_params(s.d, s.k, s.n); break;
    case Kind::Polygon:
      if (s.n < 2) throw BadParams("polygon needs n >= 2");
      break;
    case Kind::Pyramid:
      if (s.d < 2 || s.n < s.d) throw BadParams("pyramid needs n >= d >= 2");
      break;
    case Kind::Simplex:
      if (s.d < 2) throw BadParams("simplex needs d >= 2");
      break;
  }
}

inline FaceLattice build_polytope(const PolytopeSpec& s) {
  validate_spec(s);
  switch (s.kind) {
    case Kind::Multiplex:
      return build_face_lattice(multiplex_facets(s.d, s.n), s.n + 1);
    case Kind::Ordinary:
      return build_face_lattice(ordinary_facets(s.d, s.k, s.n), s.n + 1);
    case Kind::Polygon:
      return build_face_lattice(polygon_lattice_facets(s.n + 1), s.n + 1);
    case Kind::Simplex:
      return build_face_lattice(multiplex_facets(s.d, s.d), s.d + 1);
    case Kind::Pyramid: {
      int v = s.n - s.d + 3;
      FaceLattice L = build_face_lattice(polygon_lattice_facets(v), v);
      for (int step = 0; step < s.d - 2; ++step) L = pyramid(L);
      return L;
    }
  }
  throw BadParams("unreachable");
}

// Formula-based estimate of the total face count (proper faces plus top
// and bottom), used to budget enumeration grids without building anything.
inline Int predicted_face_total(const PolytopeSpec& s) {
  validate_spec(s);
  Int total = 2;
  switch (s.kind) {
    case Kind::Multiplex:
      for (int i = 0; i < s.d; ++i) total += multiplex_f(s.d, s.n, i);
      break;
    case Kind::Simplex:
      for (int i = 0; i < s.d; ++i) total += multiplex_f(s.d, s.d, i);
      break;
    case Kind::Ordinary:
      for (int i = 0; i < s.d; ++i) total += dinh_f(s.d, s.k, s.n, i);
      break;
    case Kind::Polygon:
      total += 2 * (s.n + 1);
      break;
    case Kind::Pyramid:
      for (int i = 0; i < s.d; ++i) total += multiplex_f(s.d, s.n, i);
      break;
  }
  return total;
}

}  // namespace polymux
