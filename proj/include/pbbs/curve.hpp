#ifndef PBBS_CURVE_HPP
#define PBBS_CURVE_HPP

#include <cstdint>
#include <vector>

#include "pbbs/bigfloat.hpp"
#include "pbbs/poly.hpp"
#include "pbbs/state.hpp"

namespace pbbs {

// The hyperelliptic curve mu^2 = Delta(lambda)^2 - 4 m^2 attached to Toda
// initial data I_j = e^{-Q_j/eps}, V_j = e^{-W_j/eps}, plus the polynomial
// y_{N+1} whose roots are the auxiliary spectrum mu_1..mu_{N-1}.
struct SpectralCurve {
  double eps = 0;
  unsigned prec = 0;  // working precision, bits
  int64_t N = 0;
  Poly delta;  // monic, degree N
  Poly yN1;    // degree N-1, leading coefficient -I_1 V_1
  BigFloat m2;
  BigFloat m;  // positive square root

  // Coefficients u_k (all positive): Delta = sum (-1)^(N-k) u_k lambda^k,
  // u_N = 1.
  BigFloat u(int64_t k) const;
  // y_{N+1} = -I_1 V_1 (lambda^g - v_{g-1} lambda^{g-1} + ... +- v_0):
  // v_k, all positive.
  BigFloat v(int64_t k) const;
};

// Three-term recurrence in coefficient space.  When `validate` is set the
// constant and subleading coefficients are cross-checked against their
// product/sum closed forms; failure raises precision_error with a doubled
// precision suggestion.
SpectralCurve build_curve_recurrence(const BlockState& b, double eps, unsigned prec,
                                     bool validate = true);

// Same curve assembled from the cyclic domino expansion; refuses N above
// `bound` (the number of terms grows like the Lucas numbers).
SpectralCurve build_curve_combinatorial(const BlockState& b, double eps, unsigned prec,
                                        int64_t bound = 16);

// All ways to place disjoint dominoes {a-1, a} on the cycle Z/N, each
// matching encoded by its set of right endpoints (1-based, sorted).
// Includes the empty matching.
std::vector<std::vector<int64_t>> enumerate_A(int64_t N);

// Matchings avoiding vertex 1 entirely (right endpoints in 3..N, linear).
std::vector<std::vector<int64_t>> enumerate_A_prime(int64_t N);

}  // namespace pbbs

#endif
