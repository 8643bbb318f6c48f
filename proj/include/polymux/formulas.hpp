#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <vector>

#include "polymux/errors.hpp"

namespace polymux {

using Int = boost::multiprecision::cpp_int;

// Entries (h_0, ..., h_d) of a toric h-vector.
using ToricHVector = std::vector<long long>;

namespace detail {

// Shared Pascal triangle, grown on demand.  Rebuilding the table is
// idempotent, so concurrent first use is only a wasted allocation race,
// still guarded to keep the vector itself safe.
class BinomialTable {
 public:
  static const Int& get(int a, int b) {
    static BinomialTable table;
    return table.at(a, b);
  }

 private:
  const Int& at(int a, int b) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(rows_.size()) <= a) {
      int r = static_cast<int>(rows_.size());
      std::vector<Int> row(r + 1, 1);
      for (int j = 1; j < r; ++j) row[j] = rows_[r - 1][j - 1] + rows_[r - 1][j];
      rows_.push_back(std::move(row));
    }
    return rows_[a][b];
  }

  std::mutex mu_;
  std::vector<std::vector<Int>> rows_;
};

}  // namespace detail

// C(a, b) with the zero convention: any b outside [0, a] gives 0.  The
// face-count expressions below lean on this when an index underflows,
// e.g. C(d-3, i-3) at i < 3, or the C(-1, 0) term inside dinh_N.
inline Int binom(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  return detail::BinomialTable::get(static_cast<int>(a), static_cast<int>(b));
}

// total! / (parts_1! * parts_2! * ...); parts must sum to total.
inline Int multinomial(long long total, const std::vector<long long>& parts) {
  Int result = 1;
  long long remaining = total;
  for (long long p : parts) {
    if (p < 0 || p > remaining) throw BadParams("multinomial part out of range");
    result *= binom(remaining, p);
    remaining -= p;
  }
  if (remaining != 0) throw BadParams("multinomial parts do not sum to total");
  return result;
}

// ---------------------------------------------------------------------------
// Multiplex M^{d,n}
// ---------------------------------------------------------------------------

inline void require_multiplex_params(int d, int n) {
  if (!(n >= d && d >= 2)) throw BadParams("multiplex requires n >= d >= 2");
}

// f_i(M^{d,n}) = C(d+1, i+1) + (n-d) C(d-1, i)
inline Int multiplex_f(int d, int n, int i) {
  require_multiplex_params(d, n);
  if (i < 0 || i > d - 1) throw BadParams("face dimension out of range");
  return binom(d + 1, i + 1) + Int(n - d) * binom(d - 1, i);
}

// Flag number f_S(M^{d,n}) for S = {s_1 < ... < s_r} subset of {0..d-1}:
//
//   multinomial(d+1; s_1+1, s_2-s_1, ..., d-s_r)
//     * [ 1 + (n-d)/((d+1)d(d-1)) * sum_j (s_j+1)(s_{j+1}-s_j)(s_{j+1}-1) ]
//
// with s_{r+1} = d.  The bracket has the fixed denominator (d+1)d(d-1), so
// the whole product is evaluated over that denominator and must divide out.
inline Int multiplex_flag(int d, int n, const std::vector<int>& S) {
  require_multiplex_params(d, n);
  for (size_t j = 0; j < S.size(); ++j) {
    if (S[j] < 0 || S[j] > d - 1) throw BadParams("rank set entry out of range");
    if (j > 0 && S[j] <= S[j - 1]) throw BadParams("rank set must be strictly increasing");
  }
  std::vector<long long> parts;
  if (S.empty()) {
    parts.push_back(d + 1);
  } else {
    parts.push_back(S.front() + 1);
    for (size_t j = 1; j < S.size(); ++j) parts.push_back(S[j] - S[j - 1]);
    parts.push_back(d - S.back());
  }
  Int multi = multinomial(d + 1, parts);

  Int weighted = 0;
  for (size_t j = 0; j < S.size(); ++j) {
    long long sj = S[j];
    long long sj1 = (j + 1 < S.size()) ? S[j + 1] : d;
    weighted += Int(sj + 1) * Int(sj1 - sj) * Int(sj1 - 1);
  }
  Int denom = Int(d + 1) * d * (d - 1);
  Int numer = multi * (denom + Int(n - d) * weighted);
  if (numer % denom != 0) throw NonIntegerResult("flag formula did not clear its denominator");
  return numer / denom;
}

// f_{0,i}(M^{d,n}) = (n+1) C(d,i) + (d-2)(n-d) C(d-2, i-1)
inline Int multiplex_f0i(int d, int n, int i) {
  require_multiplex_params(d, n);
  if (i < 1 || i > d - 1) throw BadParams("face dimension out of range");
  return Int(n + 1) * binom(d, i) + Int(d - 2) * Int(n - d) * binom(d - 2, i - 1);
}

// h(M^{d,n}) = (1,1,...,1) + (n-d)(0,1,...,1,0)
inline ToricHVector multiplex_h(int d, int n) {
  require_multiplex_params(d, n);
  ToricHVector h(d + 1, 1);
  for (int i = 1; i < d; ++i) h[i] += n - d;
  return h;
}

// ---------------------------------------------------------------------------
// Ordinary polytope P^{d,k,n}
// ---------------------------------------------------------------------------

inline void require_ordinary_params(int d, int k, int n) {
  if (d < 5 || d % 2 == 0) throw BadParams("ordinary polytope requires odd d >= 5");
  if (!(n >= k && k >= d)) throw BadParams("ordinary polytope requires n >= k >= d");
}

// h(P^{5,k,n}) = (1, n-4, C(n-3,2)-C(n-k+1,2), C(n-3,2)-C(n-k+1,2), n-4, 1)
inline ToricHVector toric_h5_ordinary(int k, int n) {
  if (!(n >= k && k >= 5)) throw BadParams("requires n >= k >= 5");
  long long mid = static_cast<long long>(binom(n - 3, 2) - binom(n - k + 1, 2));
  return {1, n - 4, mid, mid, n - 4, 1};
}

// h_2(P^{d,k,n}) = C(n-d+2, 2) - C(n-k+1, 2)
inline Int h2_ordinary(int d, int k, int n) {
  require_ordinary_params(d, k, n);
  return binom(n - d + 2, 2) - binom(n - k + 1, 2);
}

// N(s,t,u) = C(u-t,t) C(s-u+t,u-t) + C(u-1-t,t) C(s-u+t,u-1-t);
// out-of-range binomials (including negative upper index) count as zero.
inline Int dinh_N(long long s, long long t, long long u) {
  return binom(u - t, t) * binom(s - u + t, u - t) +
         binom(u - 1 - t, t) * binom(s - u + t, u - 1 - t);
}

// phi_i(d,k): number of i-faces of the cyclic d-polytope with k+1 vertices.
inline Int dinh_phi(int d, int k, int i) {
  if (d < 5 || d % 2 == 0 || k < d) throw BadParams("dinh_phi requires odd d >= 5 and k >= d");
  if (i < 0 || i > d - 1) throw BadParams("face dimension out of range");
  int m = (d - 1) / 2;
  if (i <= m - 1) return binom(k + 1, i + 1);
  Int total = 0;
  for (int j = 0; j <= m; ++j)
    total += (binom(j, d - 1 - i) + binom(d - j, d - 1 - i)) * binom(k - d + j, j);
  return total;
}

// c_i(d,k): the per-vertex increment f_i(P^{d,k,n+1}) - f_i(P^{d,k,n}).
// The i = 0 case is forced to 1 by f_0 = n+1.
inline Int dinh_c(int d, int k, int i) {
  if (d < 5 || d % 2 == 0 || k < d) throw BadParams("dinh_c requires odd d >= 5 and k >= d");
  if (i < 0 || i > d - 1) throw BadParams("face dimension out of range");
  int m = (d - 1) / 2;
  if (i == 0) return 1;
  if (i < m) return binom(k - 1, i);
  if (i == m) return binom(k - 1, m) - binom(k - 2 - m, m);
  if (i == d - 1) return binom(k - 2 - m, m - 1);
  // m < i < 2m
  Int total = 0;
  for (long long j = i - m; j <= i / 2; ++j) total += 2 * dinh_N(k - 1, j, i) - dinh_N(k - 2, j, i);
  for (long long j = i - m; j <= (i - 1) / 2; ++j) total -= dinh_N(k - 3, j, i - 1);
  for (long long j = i - m - 1; j <= (i - 2) / 2; ++j) total -= dinh_N(k - 3, j, i - 2);
  for (long long r = 0; r <= i - m; ++r) total -= dinh_N(k - 3 - 2 * r, i - m - r, i - 2 * r);
  return total;
}

// f_i(P^{d,k,n}) = phi_i(d,k) + (n-k) c_i(d,k)
inline Int dinh_f(int d, int k, int n, int i) {
  require_ordinary_params(d, k, n);
  return dinh_phi(d, k, i) + Int(n - k) * dinh_c(d, k, i);
}

// ---------------------------------------------------------------------------
// Simplex faces and elementariness
// ---------------------------------------------------------------------------

// Number of i-faces of M^{d,n} (n > d) that are simplices:
//   C(d+1,i+1) - C(d-3,i-3) + (n-d) [C(d-1,i) - C(d-3,i-2)]
inline Int simplex_face_count(int d, int n, int i) {
  if (!(n > d && d >= 2)) throw BadParams("simplex face count requires n > d >= 2");
  if (i < 0 || i > d - 1) throw BadParams("face dimension out of range");
  return binom(d + 1, i + 1) - binom(d - 3, i - 3) +
         Int(n - d) * (binom(d - 1, i) - binom(d - 3, i - 2));
}

// Complementary count: C(d-3,i-3) + (n-d) C(d-3,i-2)
inline Int nonsimplex_face_count(int d, int n, int i) {
  if (!(n > d && d >= 2)) throw BadParams("nonsimplex face count requires n > d >= 2");
  if (i < 0 || i > d - 1) throw BadParams("face dimension out of range");
  return binom(d - 3, i - 3) + Int(n - d) * binom(d - 3, i - 2);
}

// beta = f_02 - 3 f_2 + f_1 - d f_0 + C(d+1, 2); zero exactly on
// elementary polytopes.
inline Int elementary_beta(int d, const Int& f0, const Int& f1, const Int& f2, const Int& f02) {
  if (d < 3) throw BadParams("beta requires d >= 3");
  return f02 - 3 * f2 + f1 - Int(d) * f0 + binom(d + 1, 2);
}

}  // namespace polymux
