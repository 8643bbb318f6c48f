#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "polymux/constructions.hpp"
#include "polymux/face_lattice.hpp"

namespace polymux {

// Vertices 0..n with a symmetric, irreflexive adjacency stored as one
// neighbour mask per vertex.
struct PolytopeGraph {
  int n_vertices = 0;
  std::vector<VertexSet> adj;

  explicit PolytopeGraph(int count = 0) : n_vertices(count), adj(count) {}

  void add_edge(int i, int j) {
    if (i == j) throw BadParams("loops are not allowed");
    adj[i].add(j);
    adj[j].add(i);
  }
  bool has_edge(int i, int j) const { return adj[i].contains(j); }

  long long edge_count() const {
    long long total = 0;
    for (const VertexSet& a : adj) total += a.size();
    return total / 2;
  }

  // Edges as ordered pairs (i < j), sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_vertices; ++i)
      for (int j : adj[i])
        if (j > i) out.emplace_back(i, j);
    return out;
  }
};

// Shared edge pattern of the multiplex (k = d) and ordinary (k) graphs:
//   {i, j} for j - i <= k-2;  {i, i+k};  {0, k-1};  {n-k+1, n}.
inline PolytopeGraph band_graph(int k, int n) {
  PolytopeGraph g(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n && j - i <= k - 2; ++j) g.add_edge(i, j);
  for (int i = 0; i + k <= n; ++i) g.add_edge(i, i + k);
  if (k - 1 <= n && k >= 2) g.add_edge(0, k - 1);
  if (n - k + 1 >= 0) g.add_edge(n - k + 1, n);
  return g;
}

inline PolytopeGraph multiplex_edges(int d, int n) {
  require_multiplex_params(d, n);
  return band_graph(d, n);
}

inline PolytopeGraph ordinary_edges(int k, int n) {
  if (!(n >= k && k >= 5)) throw BadParams("ordinary graph requires n >= k >= 5");
  return band_graph(k, n);
}

// The k-colouring lambda(x_0) = lambda(x_n) = k-1, lambda(x_i) = i mod (k-1).
// Valid on band graphs with k >= 3 and n > k; the cyclic case n = k is a
// complete graph and needs k+1 colours.
inline std::vector<int> proper_coloring(int k, int n) {
  if (n == k) throw CyclicCase("n = k is the cyclic case; k+1 colours are required");
  if (k < 3 || n < k) throw BadParams("colouring pattern requires n > k >= 3");
  std::vector<int> colour(n + 1);
  colour[0] = colour[n] = k - 1;
  for (int i = 1; i <= n - 1; ++i) colour[i] = i % (k - 1);
  return colour;
}

inline bool coloring_is_proper(const PolytopeGraph& g, const std::vector<int>& colour) {
  for (int i = 0; i < g.n_vertices; ++i)
    for (int j : g.adj[i])
      if (colour[i] == colour[j]) return false;
  return true;
}

// Exhaustive chromatic number by backtracking; intended for the small
// cross-check graphs only.
inline int exact_chromatic_number(const PolytopeGraph& g) {
  int v = g.n_vertices;
  if (v == 0) return 0;
  std::vector<int> colour(v, -1);
  auto colourable = [&](int limit) {
    auto rec = [&](auto&& self, int at) -> bool {
      if (at == v) return true;
      int used_cap = 0;
      for (int i = 0; i < at; ++i) used_cap = std::max(used_cap, colour[i] + 1);
      for (int c = 0; c < std::min(limit, used_cap + 1); ++c) {
        bool ok = true;
        for (int j : g.adj[at]) {
          if (j < at && colour[j] == c) {
            ok = false;
            break;
          }
        }
        if (ok) {
          colour[at] = c;
          if (self(self, at + 1)) return true;
          colour[at] = -1;
        }
      }
      return false;
    };
    return rec(rec, 0);
  };
  for (int c = 1; c <= v; ++c) {
    if (colourable(c)) return c;
  }
  return v;
}

struct ChromaticCertificate {
  int chi = 0;
  std::vector<int> coloring;
  VertexSet clique;  // lower-bound witness
};

namespace detail {

// Hamiltonian cycle by subset dynamic programming; exact at this scale.
inline std::optional<std::vector<int>> hamiltonian_search(const PolytopeGraph& g) {
  int v = g.n_vertices;
  if (v > 20) throw BadParams("hamiltonian search capped at 20 vertices");
  if (v < 3) return std::nullopt;
  std::vector<std::vector<int>> parent(1u << v, std::vector<int>(v, -1));
  std::vector<std::vector<char>> reach(1u << v, std::vector<char>(v, 0));
  reach[1][0] = 1;
  for (unsigned mask = 1; mask < (1u << v); ++mask) {
    if (!(mask & 1)) continue;
    for (int last = 0; last < v; ++last) {
      if (!reach[mask][last]) continue;
      for (int next : g.adj[last]) {
        if (mask & (1u << next)) continue;
        unsigned nm = mask | (1u << next);
        if (!reach[nm][next]) {
          reach[nm][next] = 1;
          parent[nm][next] = last;
        }
      }
    }
  }
  unsigned full = (1u << v) - 1;
  for (int last : g.adj[0]) {
    if (!reach[full][last]) continue;
    std::vector<int> cycle(v);
    unsigned mask = full;
    int at = last;
    for (int pos = v - 1; pos >= 0; --pos) {
      cycle[pos] = at;
      int prev = parent[mask][at];
      mask &= ~(1u << at);
      at = prev;
    }
    return cycle;
  }
  return std::nullopt;
}

}  // namespace detail

// The zig-zag Hamiltonian cycle 0,2,4,...  (odd n: ...,n-1,n,n-2,...,3,1;
// even n: ...,n-2,n,n-1,n-3,...,3,1).  Steps have gap 1 or 2, which the
// band graphs provide for k >= 4 and for the polygon; the d = 3 multiplex
// lacks gap-2 edges, so an exact search takes over there.
inline std::vector<int> hamiltonian_cycle(const PolytopeGraph& g) {
  int n = g.n_vertices - 1;
  std::vector<int> seq;
  for (int i = 0; i <= n; i += 2) seq.push_back(i);
  if (n % 2 == 1) {
    for (int i = n; i >= 1; i -= 2) seq.push_back(i);
  } else {
    for (int i = n - 1; i >= 1; i -= 2) seq.push_back(i);
  }
  auto valid = [&](const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != g.n_vertices) return false;
    for (size_t i = 0; i < s.size(); ++i) {
      if (!g.has_edge(s[i], s[(i + 1) % s.size()])) return false;
    }
    return true;
  };
  if (valid(seq)) return seq;
  std::optional<std::vector<int>> found = detail::hamiltonian_search(g);
  if (found && valid(*found)) return *found;
  throw NotEdge("no hamiltonian cycle found");
}

// Exact diameter via breadth-first search from every vertex.
inline int diameter(const PolytopeGraph& g) {
  int best = 0;
  for (int s = 0; s < g.n_vertices; ++s) {
    std::vector<int> dist(g.n_vertices, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    for (int t = 0; t < g.n_vertices; ++t) {
      if (dist[t] < 0) throw Disconnected("graph is disconnected");
      best = std::max(best, dist[t]);
    }
  }
  return best;
}

// Every complete subgraph with 1..max_size vertices, in depth-first
// lexicographic order.
inline std::vector<VertexSet> enumerate_cliques(const PolytopeGraph& g, int max_size) {
  std::vector<VertexSet> out;
  VertexSet cur;
  auto rec = [&](auto&& self, int from, VertexSet cand) -> void {
    if (cur.size() >= max_size) return;
    for (int v = from; v < g.n_vertices; ++v) {
      if (!cand.contains(v)) continue;
      cur.add(v);
      out.push_back(cur);
      self(self, v + 1, cand & g.adj[v]);
      cur.remove(v);
    }
  };
  rec(rec, 0, VertexSet::full(g.n_vertices));
  return out;
}

struct CliqueFaceResult {
  bool all_faces = true;
  VertexSet counterexample;
};

// Does every clique's vertex set appear as the vertex set of a face?
// Cliques of every size are examined (the candidate list shrinks fast),
// so a true answer is unconditional.
inline CliqueFaceResult cliques_are_faces(const FaceLattice& L, const PolytopeGraph& g) {
  CliqueFaceResult res;
  VertexSet cur;
  auto rec = [&](auto&& self, int from, VertexSet cand) -> bool {
    for (int v = from; v < g.n_vertices; ++v) {
      if (!cand.contains(v)) continue;
      cur.add(v);
      if (!L.contains_face(cur)) {
        res.all_faces = false;
        res.counterexample = cur;
        cur.remove(v);
        return false;
      }
      if (!self(self, v + 1, cand & g.adj[v])) {
        cur.remove(v);
        return false;
      }
      cur.remove(v);
    }
    return true;
  };
  rec(rec, 0, VertexSet::full(g.n_vertices));
  return res;
}

// Rank-2 faces with four or more vertices, in (size, lex) order.
inline std::vector<VertexSet> nontriangular_two_faces(const FaceLattice& L) {
  std::vector<VertexSet> out;
  if (L.dim < 2) return out;
  for (int id : L.faces_of_dim(2)) {
    if (L.faces[id].size() >= 4) out.push_back(L.faces[id]);
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

// Dimension of the smallest face containing X: the intersection of the
// facets containing X, or the whole polytope when no facet does.
inline int subset_min_face_dim(const FaceLattice& L, const VertexSet& X) {
  VertexSet acc = VertexSet::full(L.n_vertices);
  bool hit = false;
  for (int id : L.faces_of_dim(L.dim - 1)) {
    if (X.subset_of(L.faces[id])) {
      acc = acc & L.faces[id];
      hit = true;
    }
  }
  if (!hit) return L.dim;
  int fid = L.id(acc);
  if (fid < 0) throw Error("facet intersection is not a face");
  return L.face_dim[fid];
}

struct NeighborlinessResult {
  bool weakly_neighborly = true;
  VertexSet witness;       // first offending vertex set, (size, lex) order
  int witness_face_dim = -1;
};

// Weak neighborliness: every set of kappa+1 vertices lies in a face of
// dimension at most 2*kappa.  Subsets with 2*kappa >= d sit inside the
// whole polytope and cannot fail, so only sizes up to (d+1)/2 are scanned;
// within that bound the scan is exhaustive.
inline NeighborlinessResult is_weakly_neighborly(const FaceLattice& L) {
  NeighborlinessResult res;
  int v = L.n_vertices;
  for (int size = 2; 2 * (size - 1) < L.dim; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      VertexSet X = VertexSet::from_indices(pick);
      int dim = subset_min_face_dim(L, X);
      if (dim > 2 * (size - 1)) {
        res.weakly_neighborly = false;
        res.witness = X;
        res.witness_face_dim = dim;
        return res;
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == v - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return res;
}

// One line per edge, stable order.
inline std::string to_dot(const PolytopeGraph& g, const std::string& name = "g") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (auto [i, j] : g.edges()) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

// Chromatic number with certificates for the families handled here.  Band
// graphs (multiplex d >= 3, ordinary k) use the modular colouring plus the
// clique {0..k-1}; the cyclic case n = k is complete; polygons are cycles,
// two- or three-colourable by parity.
inline ChromaticCertificate chromatic_number(const PolytopeGraph& g, const PolytopeSpec& spec) {
  ChromaticCertificate cert;
  int n = g.n_vertices - 1;
  int band = 0;
  switch (spec.kind) {
    case Kind::Multiplex: band = spec.d; break;
    case Kind::Ordinary: band = spec.k; break;
    case Kind::Simplex: band = spec.d; break;
    case Kind::Polygon: band = 2; break;
    case Kind::Pyramid: throw BadParams("no chromatic certificate for pyramids");
  }

  if (band == 2) {
    // Cycle: walk the boundary and alternate; odd cycles need a third colour.
    std::vector<int> cycle = hamiltonian_cycle(g);
    cert.coloring.assign(n + 1, 0);
    for (size_t pos = 0; pos < cycle.size(); ++pos) cert.coloring[cycle[pos]] = static_cast<int>(pos % 2);
    if (cycle.size() % 2 == 1) {
      cert.chi = 3;
      cert.coloring[cycle.back()] = 2;
      cert.clique = VertexSet{cycle[0], cycle[1]};
    } else {
      cert.chi = 2;
      cert.clique = VertexSet{cycle[0], cycle[1]};
    }
    if (g.n_vertices == 3) {
      cert.chi = 3;
      cert.clique = VertexSet{0, 1, 2};
    }
  } else if (n == band) {
    cert.chi = band + 1;
    cert.coloring.resize(n + 1);
    for (int i = 0; i <= n; ++i) cert.coloring[i] = i;
    cert.clique = VertexSet::full(n + 1);
  } else {
    cert.chi = band;
    cert.coloring = proper_coloring(band, n);
    cert.clique = VertexSet::range(0, band - 1);
  }

  if (!coloring_is_proper(g, cert.coloring)) throw Error("certificate colouring is not proper");
  for (int a : cert.clique)
    for (int b : cert.clique)
      if (a < b && !g.has_edge(a, b)) throw Error("certificate clique is not complete");
  if (static_cast<int>(cert.clique.size()) > cert.chi) throw Error("certificate is inconsistent");
  return cert;
}

}  // namespace polymux
