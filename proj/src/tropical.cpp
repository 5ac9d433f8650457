#include "pbbs/tropical.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pbbs/errors.hpp"

namespace pbbs {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

// Minimum sum of exactly `m` pairwise non-adjacent entries of a[lo..hi]
// (linear segment).  Forbidden entries hold kInf and are never picked.
int64_t linear_min(const std::vector<int64_t>& a, int64_t lo, int64_t hi, int64_t m) {
  if (m == 0) return 0;
  int64_t len = hi - lo + 1;
  if (len <= 0) return kInf;
  // dp[c] over the prefix; prev/prev2 keep the adjacency constraint.
  std::vector<int64_t> take(m + 1, kInf), skip(m + 1, kInf);
  take[0] = kInf;
  skip[0] = 0;
  for (int64_t i = 0; i < len; ++i) {
    std::vector<int64_t> ntake(m + 1, kInf), nskip(m + 1, kInf);
    nskip[0] = 0;
    for (int64_t c = 0; c <= m; ++c) {
      int64_t best_prev = std::min(take[c], skip[c]);
      nskip[c] = best_prev;
      if (c > 0 && a[lo + i] < kInf && skip[c - 1] < kInf)
        ntake[c] = skip[c - 1] + a[lo + i];
    }
    take = std::move(ntake);
    skip = std::move(nskip);
  }
  return std::min(take[m], skip[m]);
}

// Minimum sum of exactly `m` cyclically non-adjacent entries of a[0..n-1].
int64_t cyclic_min(std::vector<int64_t> a, int64_t m) {
  const int64_t n = a.size();
  if (m == 0) return 0;
  if (n == 1) return m == 1 ? a[0] : kInf;
  if (n == 2) return m == 1 ? std::min(a[0], a[1]) : kInf;
  // Either entry 0 is picked (entries 1 and n-1 excluded) or it is not.
  int64_t with0 = a[0] < kInf ? a[0] + linear_min(a, 2, n - 2, m - 1) : kInf;
  if (with0 > kInf) with0 = kInf;
  int64_t without0 = linear_min(a, 1, n - 1, m);
  return std::min(with0, without0);
}

std::vector<int64_t> interleave(const BlockState& b) {
  std::vector<int64_t> a;
  a.reserve(2 * b.N());
  for (int64_t i = 0; i < b.N(); ++i) {
    a.push_back(b.Q[i]);
    a.push_back(b.W[i]);
  }
  return a;
}

void brute_rec(const std::vector<int64_t>& a, int64_t i, int64_t m, bool took0, int64_t sum,
               int64_t& best) {
  const int64_t n = a.size();
  if (m == 0) {
    best = std::min(best, sum);
    return;
  }
  if (i >= n) return;
  // skip
  brute_rec(a, i + 1, m, took0, sum, best);
  // take (respect adjacency with previous and the 0..n-1 wrap)
  if (a[i] < kInf) {
    bool wrap_bad = (i == n - 1) && took0;
    if (!wrap_bad) {
      brute_rec(a, i + 2, m - 1, took0 || i == 0, sum + a[i], best);
    }
  }
}

}  // namespace

int64_t U_min(const BlockState& b, int64_t k) {
  const int64_t N = b.N();
  if (k < 0 || k > N - 1) throw inconsistency_error("U_min: k out of range");
  return cyclic_min(interleave(b), N - k);
}

int64_t P_min(const BlockState& b, int64_t k) {
  const int64_t N = b.N();
  if (k < 0 || k > N - 2) throw inconsistency_error("P_min: k out of range");
  auto a = interleave(b);
  a[1] = kInf;  // W_1
  a[2] = kInf;  // Q_2
  return cyclic_min(std::move(a), N - 1 - k);
}

int64_t U_min_brute(const BlockState& b, int64_t k) {
  const int64_t N = b.N();
  if (k < 0 || k > N - 1) throw inconsistency_error("U_min_brute: k out of range");
  auto a = interleave(b);
  int64_t best = kInf;
  brute_rec(a, 0, N - k, false, 0, best);
  return best;
}

int64_t P_min_brute(const BlockState& b, int64_t k) {
  const int64_t N = b.N();
  if (k < 0 || k > N - 2) throw inconsistency_error("P_min_brute: k out of range");
  auto a = interleave(b);
  a[1] = kInf;
  a[2] = kInf;
  int64_t best = kInf;
  brute_rec(a, 0, N - 1 - k, false, 0, best);
  return best;
}

std::vector<int64_t> U_from_young(const YoungDiagram& d) {
  auto r = d.rows();
  std::vector<int64_t> U(r.size());
  int64_t below = d.total();
  for (size_t k = 0; k < r.size(); ++k) {
    U[k] = below;  // boxes below row k (the k longest rows removed)
    below -= r[k];
  }
  return U;
}

std::vector<int64_t> P_from_young_limit(const BlockState& b, int64_t large) {
  const int64_t N = b.N();
  if (N == 1) return {};
  if (large == 0) large = b.size() + 1;
  std::vector<int64_t> Q = b.Q, W = b.W;
  Q[1] = large;  // Q_2
  W[0] = large;  // W_1
  auto rows = young_from_blocks(Q, W).rows();
  std::vector<int64_t> P(N - 1);
  for (int64_t j = 0; j + 1 < N; ++j) {
    int64_t s = 0;
    for (size_t l = j + 1; l < rows.size(); ++l) s += rows[l];
    P[j] = s;
  }
  return P;
}

UltraInvariants invariants(const BlockState& b) {
  UltraInvariants u;
  u.L = b.size();
  const int64_t N = b.N();
  u.U.resize(N);
  for (int64_t k = 0; k < N; ++k) u.U[k] = U_min(b, k);
  u.P.resize(N - 1);
  for (int64_t k = 0; k + 1 < N; ++k) u.P[k] = P_min(b, k);
  return u;
}

std::vector<double> tropical_poly_roots(const std::vector<double>& K) {
  if (K.empty()) return {};
  const size_t n = K.size() - 1;
  std::vector<double> v(n + 1);
  for (size_t j = 0; j < n; ++j) v[j] = K[j] - K[j + 1];
  v[n] = K[n];
  return v;
}

}  // namespace pbbs
