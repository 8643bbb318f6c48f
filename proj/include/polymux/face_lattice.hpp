#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "polymux/errors.hpp"
#include "polymux/vertex_set.hpp"

namespace polymux {

// Graded face poset of a polytope, faces identified by their vertex sets.
//
// Face ids are assigned in (cardinality, lexicographic) order, so id 0 is
// the bottom, the last id is the top, and every strict subface of a face
// has a smaller id.  `face_dim` maps the bottom to -1 and the top to `dim`.
// `lower[i]` holds *all* strict subfaces of face i (not just covers); the
// Hasse diagram is the restriction to dimension difference one.
struct FaceLattice {
  int n_vertices = 0;
  int dim = 0;
  std::vector<VertexSet> faces;
  std::vector<int> face_dim;
  std::vector<std::vector<int>> lower;
  std::vector<std::vector<int>> covers_down;
  std::vector<std::vector<int>> covers_up;

  int size() const { return static_cast<int>(faces.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  // Face id for a vertex set, or -1 when the set is not a face.
  int id(const VertexSet& f) const {
    auto it = id_of_.find(f.raw());
    return it == id_of_.end() ? -1 : it->second;
  }
  bool contains_face(const VertexSet& f) const { return id(f) >= 0; }

  // Ids of the faces of dimension r, for r in [-1, dim].
  const std::vector<int>& faces_of_dim(int r) const { return by_dim_.at(r + 1); }

  // (f_0, ..., f_{d-1})
  std::vector<long long> f_vector() const {
    std::vector<long long> f(dim);
    for (int i = 0; i < dim; ++i) f[i] = static_cast<long long>(faces_of_dim(i).size());
    return f;
  }

  // Populated by assemble_poset.
  std::unordered_map<std::uint64_t, int> id_of_;
  std::vector<std::vector<int>> by_dim_;
};

// Build the graded poset on an inclusion-closed family of vertex sets whose
// minimum is contained in every member and whose maximum contains every
// member.  Ranks come from longest chains; gradedness (every maximal chain
// of equal length) is then checked and violations raise NotGraded.
inline FaceLattice assemble_poset(std::vector<VertexSet> members, int n_vertices) {
  if (members.empty()) throw BadParams("empty poset");
  std::sort(members.begin(), members.end(), size_lex_less);

  FaceLattice L;
  L.n_vertices = n_vertices;
  L.faces = std::move(members);
  int count = L.size();
  for (int i = 0; i < count; ++i) {
    if (!L.id_of_.emplace(L.faces[i].raw(), i).second)
      throw BadParams("duplicate member in poset input");
  }

  // Strict subface lists.  Ids ascend with cardinality, so scanning j < i
  // finds every candidate; equal-cardinality pairs can never nest.
  L.lower.resize(count);
  for (int i = 1; i < count; ++i) {
    for (int j = 0; j < i; ++j) {
      if (L.faces[j].size() < L.faces[i].size() && L.faces[j].subset_of(L.faces[i]))
        L.lower[i].push_back(j);
    }
  }
  const VertexSet& bottom = L.faces.front();
  for (int i = 1; i < count; ++i) {
    if (!bottom.subset_of(L.faces[i])) throw NotGraded("poset has no unique minimum");
  }
  if (static_cast<int>(L.lower[count - 1].size()) != count - 1)
    throw NotGraded("poset has no unique maximum");

  // Longest-chain rank, normalised so the bottom sits at dimension -1.
  L.face_dim.assign(count, -1);
  for (int i = 1; i < count; ++i) {
    int best = -1;
    for (int j : L.lower[i]) best = std::max(best, L.face_dim[j]);
    L.face_dim[i] = best + 1;
  }
  L.dim = L.face_dim[count - 1];

  // Graded iff no inclusion pair jumps two ranks without an intermediate.
  for (int i = 1; i < count; ++i) {
    for (int j : L.lower[i]) {
      if (L.face_dim[i] - L.face_dim[j] < 2) continue;
      bool intermediate = false;
      for (int h : L.lower[i]) {
        if (L.face_dim[h] > L.face_dim[j] && L.faces[j].proper_subset_of(L.faces[h])) {
          intermediate = true;
          break;
        }
      }
      if (!intermediate) throw NotGraded("maximal chains of unequal length");
    }
  }

  L.by_dim_.assign(L.dim + 2, {});
  for (int i = 0; i < count; ++i) L.by_dim_[L.face_dim[i] + 1].push_back(i);

  // In a graded poset, covers are exactly the inclusion pairs one rank apart.
  L.covers_down.resize(count);
  L.covers_up.resize(count);
  for (int i = 1; i < count; ++i) {
    for (int j : L.lower[i]) {
      if (L.face_dim[i] - L.face_dim[j] == 1) {
        L.covers_down[i].push_back(j);
        L.covers_up[j].push_back(i);
      }
    }
  }
  return L;
}

// Closure of a facet list under pairwise intersection, plus top and bottom.
// Every face of a polytope is the intersection of the facets containing it,
// so this recovers the full face lattice from the facet vertex sets.
inline FaceLattice build_face_lattice(const std::vector<VertexSet>& facets, int n_vertices) {
  if (facets.empty()) throw BadParams("facet list is empty");
  VertexSet all = VertexSet::full(n_vertices);
  for (size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].empty()) throw BadParams("empty facet");
    if (!facets[i].proper_subset_of(all)) throw BadParams("facet must be a proper subset of the vertex set");
    for (size_t j = i + 1; j < facets.size(); ++j) {
      if (facets[i] == facets[j]) throw DuplicateFacet("facet listed twice: " + facets[i].to_digits());
      if (facets[i].subset_of(facets[j]) || facets[j].subset_of(facets[i]))
        throw BadParams("one facet contains another");
    }
  }

  std::unordered_map<std::uint64_t, bool> seen;
  std::vector<VertexSet> members;
  std::vector<VertexSet> work;
  auto push = [&](VertexSet f) {
    if (seen.emplace(f.raw(), true).second) {
      members.push_back(f);
      work.push_back(f);
    }
  };
  for (const VertexSet& f : facets) push(f);
  while (!work.empty()) {
    VertexSet f = work.back();
    work.pop_back();
    for (const VertexSet& g : facets) push(f & g);
  }
  if (!seen.count(all.raw())) members.push_back(all);
  if (!seen.count(0)) members.push_back(VertexSet());

  FaceLattice L = assemble_poset(std::move(members), n_vertices);

  // A polytope lattice has every vertex as an atom and nothing else there.
  for (int id : L.faces_of_dim(0)) {
    if (L.faces[id].size() != 1) throw NotGraded("non-singleton atom " + L.faces[id].to_digits());
  }
  for (int v = 0; v < n_vertices; ++v) {
    VertexSet single;
    single.add(v);
    int id = L.id(single);
    if (id < 0 || L.face_dim[id] != 0)
      throw NotGraded("vertex " + std::to_string(v) + " is not an atom");
  }
  // And the input facets are exactly its coatoms.
  for (const VertexSet& f : facets) {
    if (L.face_dim[L.id(f)] != L.dim - 1) throw NotGraded("facet " + f.to_digits() + " is not a coatom");
  }
  if (L.faces_of_dim(L.dim - 1).size() != facets.size())
    throw NotGraded("coatoms do not match the facet list");
  return L;
}

// Flag vector: counts[S] is the number of chains of proper faces whose
// dimension set is exactly S (S encoded as a bitmask over {0..d-1}).
struct FlagVector {
  int d = 0;
  std::vector<long long> counts;

  long long at(unsigned mask) const { return counts.at(mask); }
  long long at(const std::vector<int>& S) const {
    unsigned mask = 0;
    for (int s : S) mask |= 1u << s;
    return counts.at(mask);
  }
};

inline FlagVector flag_vector(const FaceLattice& L) {
  FlagVector fv;
  fv.d = L.dim;
  fv.counts.assign(1u << L.dim, 0);
  fv.counts[0] = 1;  // the empty chain
  std::vector<long long> cur(L.size()), next(L.size());
  for (unsigned mask = 1; mask < fv.counts.size(); ++mask) {
    std::vector<int> ranks;
    for (int r = 0; r < L.dim; ++r)
      if (mask & (1u << r)) ranks.push_back(r);
    for (int id : L.faces_of_dim(ranks[0])) cur[id] = 1;
    for (size_t step = 1; step < ranks.size(); ++step) {
      for (int id : L.faces_of_dim(ranks[step])) {
        long long total = 0;
        for (int j : L.lower[id])
          if (L.face_dim[j] == ranks[step - 1]) total += cur[j];
        next[id] = total;
      }
      for (int id : L.faces_of_dim(ranks[step])) cur[id] = next[id];
    }
    long long total = 0;
    for (int id : L.faces_of_dim(ranks.back())) total += cur[id];
    fv.counts[mask] = total;
  }
  return fv;
}

// Closed interval [bottom, top] as a graded poset of its own, with ranks
// shifted so the interval's bottom sits at -1.
inline FaceLattice interval(const FaceLattice& L, const VertexSet& bottom, const VertexSet& top) {
  int bot_id = L.id(bottom);
  int top_id = L.id(top);
  if (bot_id < 0 || top_id < 0) throw BadParams("interval endpoints must be faces");
  if (!bottom.subset_of(top)) throw NotComparable("interval endpoints are incomparable");
  std::vector<VertexSet> members;
  members.push_back(top);
  for (int j : L.lower[top_id]) {
    if (bottom.subset_of(L.faces[j])) members.push_back(L.faces[j]);
  }
  return assemble_poset(std::move(members), L.n_vertices);
}

// Eulerian test: every closed interval [F, G] with F < G carries equally
// many elements of even and odd rank.  Exhaustive over all pairs.
inline bool is_eulerian(const FaceLattice& L) {
  for (int i = 1; i < L.size(); ++i) {
    for (int j : L.lower[i]) {
      int balance = (L.face_dim[i] % 2 == 0) ? 1 : -1;
      const VertexSet& low = L.faces[j];
      for (int h : L.lower[i]) {
        if (low.subset_of(L.faces[h])) balance += (L.face_dim[h] % 2 == 0) ? 1 : -1;
      }
      if (balance != 0) return false;
    }
  }
  return true;
}

}  // namespace polymux
