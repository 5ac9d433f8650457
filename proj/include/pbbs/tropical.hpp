#ifndef PBBS_TROPICAL_HPP
#define PBBS_TROPICAL_HPP

#include <cstdint>
#include <vector>

#include "pbbs/elimination.hpp"
#include "pbbs/state.hpp"

namespace pbbs {

// Min-plus conserved data of a state: U_0..U_g and P_0..P_{g-1} with
// g = N-1, plus M = -L/2 (kept as -L over 2 exactly; L is stored).
struct UltraInvariants {
  std::vector<int64_t> U;
  std::vector<int64_t> P;
  int64_t L = 0;

  int64_t g() const { return static_cast<int64_t>(U.size()) - 1; }
  bool operator==(const UltraInvariants&) const = default;
};

// U_k and P_k as cyclic non-adjacent minimum selections over
// (Q_1, W_1, ..., Q_N, W_N): U_k picks N-k entries, P_k picks N-1-k entries
// with Q_2 and W_1 excluded.  Dynamic program, O(N^2).
int64_t U_min(const BlockState& b, int64_t k);
int64_t P_min(const BlockState& b, int64_t k);

// Exponential enumerations of the same minima (test oracles).
int64_t U_min_brute(const BlockState& b, int64_t k);
int64_t P_min_brute(const BlockState& b, int64_t k);

// U_k = boxes below the k-th row of the Young diagram.
std::vector<int64_t> U_from_young(const YoungDiagram& d);

// P via the modified state with Q_2 and W_1 sent large: P_j equals the box
// count below row j+1 of the modified diagram.  `large` defaults to L+1.
std::vector<int64_t> P_from_young_limit(const BlockState& b, int64_t large = 0);

// Full invariant set (DP route).
UltraInvariants invariants(const BlockState& b);

// Valuations of the roots of a positive-coefficient polynomial whose
// coefficient valuations are K_0..K_n (in the eps*log convention):
// returns (K_0-K_1, K_1-K_2, ..., K_{n-1}-K_n, K_n) in ascending root order.
std::vector<double> tropical_poly_roots(const std::vector<double>& K);

}  // namespace pbbs

#endif
