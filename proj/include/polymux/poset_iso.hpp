#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "polymux/constructions.hpp"
#include "polymux/face_lattice.hpp"

namespace polymux {

namespace detail {

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Iterated neighbourhood refinement on the Hasse diagram.  The signature of
// an element folds in its rank and the sorted signatures of its upper and
// lower covers; stable after at most |P| rounds, far fewer in practice.
inline std::vector<std::uint64_t> refine_signatures(const FaceLattice& L) {
  std::vector<std::uint64_t> sig(L.size()), next(L.size());
  for (int i = 0; i < L.size(); ++i) sig[i] = static_cast<std::uint64_t>(L.face_dim[i] + 2);
  int rounds = std::min(L.size(), 24);
  for (int round = 0; round < rounds; ++round) {
    for (int i = 0; i < L.size(); ++i) {
      std::uint64_t h = hash_mix(0x51ed27f3, sig[i]);
      std::vector<std::uint64_t> ns;
      ns.reserve(L.covers_down[i].size());
      for (int j : L.covers_down[i]) ns.push_back(sig[j]);
      std::sort(ns.begin(), ns.end());
      for (std::uint64_t v : ns) h = hash_mix(h, v);
      h = hash_mix(h, 0xabcd);
      ns.clear();
      for (int j : L.covers_up[i]) ns.push_back(sig[j]);
      std::sort(ns.begin(), ns.end());
      for (std::uint64_t v : ns) h = hash_mix(h, v);
      next[i] = h;
    }
    if (next == sig) break;
    sig = next;
  }
  return sig;
}

}  // namespace detail

// Rank-preserving order isomorphism between two graded posets, or nullopt.
// Exact: candidates are filtered by refined signatures and lower-cover
// consistency, and backtracking explores every surviving branch, so a
// negative answer is a proof of non-isomorphism.
inline std::optional<std::vector<int>> poset_isomorphic(const FaceLattice& A, const FaceLattice& B) {
  if (A.size() != B.size() || A.dim != B.dim) return std::nullopt;
  for (int r = -1; r <= A.dim; ++r) {
    if (A.faces_of_dim(r).size() != B.faces_of_dim(r).size()) return std::nullopt;
  }
  std::vector<std::uint64_t> sa = detail::refine_signatures(A);
  std::vector<std::uint64_t> sb = detail::refine_signatures(B);
  {
    std::vector<std::uint64_t> ma = sa, mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return std::nullopt;
  }

  // Match rank by rank upward; each element's lower covers are already
  // mapped, which pins the candidates down hard.
  std::vector<int> order;
  for (int r = -1; r <= A.dim; ++r)
    for (int id : A.faces_of_dim(r)) order.push_back(id);
  std::vector<int> map_ab(A.size(), -1), map_ba(B.size(), -1);

  auto rec = [&](auto&& self, size_t pos) -> bool {
    if (pos == order.size()) return true;
    int a = order[pos];
    std::vector<int> mapped_down;
    for (int j : A.covers_down[a]) mapped_down.push_back(map_ab[j]);
    std::sort(mapped_down.begin(), mapped_down.end());
    for (int b : B.faces_of_dim(A.face_dim[a])) {
      if (map_ba[b] != -1 || sb[b] != sa[a]) continue;
      std::vector<int> down = B.covers_down[b];
      std::sort(down.begin(), down.end());
      if (down != mapped_down) continue;
      map_ab[a] = b;
      map_ba[b] = a;
      if (self(self, pos + 1)) return true;
      map_ab[a] = -1;
      map_ba[b] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  // Final audit: cover relations transported exactly.
  for (int a = 0; a < A.size(); ++a) {
    std::vector<int> img;
    for (int j : A.covers_down[a]) img.push_back(map_ab[j]);
    std::sort(img.begin(), img.end());
    std::vector<int> down = B.covers_down[map_ab[a]];
    std::sort(down.begin(), down.end());
    if (img != down) return std::nullopt;
  }
  return map_ab;
}

// Canonical self-duality of the multiplex: face G maps to the intersection
// of the facet windows F_v over the vertices v of G (empty intersection
// reads as the top).  Verifies the map is an inclusion-reversing bijection
// and returns it as a permutation of face ids.
inline std::vector<int> self_duality_witness(const FaceLattice& L) {
  int d = L.dim;
  int n = L.n_vertices - 1;
  VertexSet all = VertexSet::full(L.n_vertices);
  std::vector<VertexSet> window(L.n_vertices);
  for (int v = 0; v <= n; ++v) {
    window[v] = multiplex_facet(d, n, v);
    if (L.id(window[v]) < 0)
      throw NotAntiIso("facet window " + window[v].to_digits() + " is not a face");
  }

  std::vector<int> phi(L.size(), -1);
  std::vector<int> hit(L.size(), 0);
  for (int i = 0; i < L.size(); ++i) {
    VertexSet image = all;
    for (int v : L.faces[i]) image = image & window[v];
    int j = L.id(image);
    if (j < 0) throw NotAntiIso("image " + image.to_digits() + " is not a face");
    if (L.face_dim[j] != d - 1 - L.face_dim[i])
      throw NotAntiIso("image rank mismatch at face " + L.faces[i].to_digits());
    phi[i] = j;
    ++hit[j];
  }
  for (int j = 0; j < L.size(); ++j) {
    if (hit[j] != 1) throw NotAntiIso("candidate map is not a bijection");
  }
  for (int i = 0; i < L.size(); ++i) {
    for (int j : L.lower[i]) {
      if (!L.faces[phi[i]].proper_subset_of(L.faces[phi[j]]))
        throw NotAntiIso("candidate map does not reverse inclusion");
    }
  }
  return phi;
}

// Vertex figure check: the interval [v, top] of a d-multiplex must be the
// lattice of some (d-1)-multiplex.  The candidate parameter n' is read off
// the atom count of the quotient; d = 2 quotients are segments.
inline bool quotient_is_multiplex(const FaceLattice& L, int vertex) {
  VertexSet v;
  v.add(vertex);
  FaceLattice Q = interval(L, v, L.faces[L.top()]);
  if (Q.dim != L.dim - 1) return false;
  int atoms = static_cast<int>(Q.faces_of_dim(0).size());
  if (L.dim - 1 == 1) return atoms == 2 && Q.size() == 4;
  int np = atoms - 1;
  if (np < L.dim - 1) return false;
  FaceLattice M = build_face_lattice(multiplex_facets(L.dim - 1, np), np + 1);
  return poset_isomorphic(Q, M).has_value();
}

// Facet check for ordinary polytopes: the sublattice under a facet must be
// exactly the multiplex lattice on the facet's vertices in induced order.
inline bool face_is_multiplex(const FaceLattice& L, const VertexSet& face) {
  int fid = L.id(face);
  if (fid < 0 || L.face_dim[fid] < 2) return false;
  std::vector<int> verts = face.to_vector();
  int np = static_cast<int>(verts.size()) - 1;
  int fd = L.face_dim[fid];
  if (np < fd) return false;
  std::vector<int> relabel(L.n_vertices, -1);
  for (size_t i = 0; i < verts.size(); ++i) relabel[verts[i]] = static_cast<int>(i);

  std::vector<std::uint64_t> sub;
  sub.push_back(VertexSet::full(np + 1).raw());
  sub.push_back(0);
  for (int j : L.lower[fid]) {
    if (L.face_dim[j] < 0) continue;
    VertexSet relabeled;
    for (int v : L.faces[j]) relabeled.add(relabel[v]);
    sub.push_back(relabeled.raw());
  }
  std::sort(sub.begin(), sub.end());

  FaceLattice M = build_face_lattice(multiplex_facets(fd, np), np + 1);
  std::vector<std::uint64_t> expect;
  for (const VertexSet& f : M.faces) expect.push_back(f.raw());
  std::sort(expect.begin(), expect.end());
  return sub == expect;
}

}  // namespace polymux
