#pragma once

#include <vector>

#include "polymux/face_lattice.hpp"
#include "polymux/formulas.hpp"

namespace polymux {

namespace detail {

// (x-1)^e as ascending coefficients.
inline std::vector<long long> pow_x_minus_1(int e) {
  std::vector<long long> c(e + 1);
  for (int j = 0; j <= e; ++j) {
    c[j] = static_cast<long long>(binom(e, j));
    if ((e - j) % 2 == 1) c[j] = -c[j];
  }
  return c;
}

}  // namespace detail

// Stanley's g/h recursion on an Eulerian lattice:
//
//   h([0,G], x) = sum over proper faces H < G of g([0,H], x) (x-1)^{dim G - 1 - dim H}
//
// where g keeps the truncated differences of h: g_0 = h_0 and
// g_t = h_t - h_{t-1} for 1 <= t <= floor(deg/2), with g = 1 on the
// one-element poset.  h polynomials are stored with ascending powers of x
// and read out with h_t as the coefficient of x^{deg-t}; that orientation
// sends every simplex to the all-ones vector.
inline ToricHVector toric_h(const FaceLattice& L) {
  if (!is_eulerian(L)) throw NotEulerian("toric h-vector requires an Eulerian lattice");

  std::vector<std::vector<long long>> g(L.size());
  std::vector<long long> h_top;
  std::vector<std::vector<long long>> xm1(L.dim + 1);
  for (int e = 0; e <= L.dim; ++e) xm1[e] = detail::pow_x_minus_1(e);

  // Ids ascend with cardinality, so every strict subface is already done.
  for (int i = 0; i < L.size(); ++i) {
    if (L.face_dim[i] == -1) {
      g[i] = {1};
      continue;
    }
    int deg = L.face_dim[i];
    std::vector<long long> h(deg + 1, 0);
    auto accumulate = [&](const std::vector<long long>& gpoly, int e) {
      const std::vector<long long>& p = xm1[e];
      for (size_t a = 0; a < gpoly.size(); ++a)
        for (size_t b = 0; b < p.size(); ++b) h[a + b] += gpoly[a] * p[b];
    };
    accumulate(g[L.bottom()], deg);  // the empty face
    for (int j : L.lower[i]) {
      if (L.face_dim[j] >= 0) accumulate(g[j], deg - 1 - L.face_dim[j]);
    }
    std::vector<long long> gi(deg / 2 + 1);
    gi[0] = h[deg];
    for (int t = 1; t <= deg / 2; ++t) gi[t] = h[deg - t] - h[deg - t + 1];
    g[i] = std::move(gi);
    if (i == L.top()) h_top = std::move(h);
  }

  ToricHVector out(L.dim + 1);
  for (int t = 0; t <= L.dim; ++t) out[t] = h_top[L.dim - t];
  return out;
}

// Count of chains with dimension set {0, i} without building the whole
// flag vector: each i-face contributes its vertex count.
inline long long flag_0i(const FaceLattice& L, int i) {
  long long total = 0;
  for (int id : L.faces_of_dim(i)) total += L.faces[id].size();
  return total;
}

// beta = f_02 - 3 f_2 + f_1 - d f_0 + C(d+1,2) evaluated on the lattice.
inline Int lattice_beta(const FaceLattice& L) {
  if (L.dim < 3) throw BadParams("beta requires d >= 3");
  auto f = L.f_vector();
  return elementary_beta(L.dim, f[0], f[1], f[2], flag_0i(L, 2));
}

// A polytope is elementary iff beta vanishes; equivalently the toric
// h-vector has h_1 = h_2.  The beta route is the primary computation; the
// test suites cross-check it against the recursion.
inline bool is_elementary(const FaceLattice& L) { return lattice_beta(L) == 0; }

}  // namespace polymux
