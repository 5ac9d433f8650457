#ifndef PBBS_PERIODS_HPP
#define PBBS_PERIODS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pbbs/elimination.hpp"
#include "pbbs/rational.hpp"
#include "pbbs/state.hpp"
#include "pbbs/tropical.hpp"

namespace pbbs {

struct PeriodReport {
  std::vector<int64_t> l;   // l_0..l_s
  std::vector<int64_t> Nj;  // N_0..N_s
  int64_t f_formula = 0;    // 0 when refused (internal symmetry)
  int64_t r_formula = 0;
  int64_t f_brute = 0;
  int64_t r_brute = 0;
  bool internal_symmetry = false;
};

// Step and row data of the closed-form cycle formulas: l_0 = L - 2*balls,
// l_j = L_j - L_{j+1} over the distinct row lengths, N_j = l_0 +
// sum_{l<=j} 2 n_l (L_l - L_{j+1}).
void cycle_data(const YoungDiagram& d, int64_t L, std::vector<int64_t>& l,
                std::vector<int64_t>& Nj);

// f(x) = lcm(N_s N_{s-1} / (l_s l_0), ..., N_1 N_0 / (l_1 l_0), 1).
Int fundamental_cycle_formula(const YoungDiagram& d, int64_t L);

// Same lcm without the j = s factor (first column of the diagram removed).
Int relative_period(const YoungDiagram& d, int64_t L);

// r via the exact sigma data of the degenerate period matrix.  Collapses
// the lcm to the telescoped values sigma_1 + sum sigma_j and
// sigma_k - sigma_{k+1}; zero entries (repeated row lengths) drop out.
Int relative_period_sigma(const UltraInvariants& u);

// Direct iteration: r = first q with T^q(x) a rotation of x, f = first p
// with T^p(x) = x.  Throws bounded_search_error beyond `cap` steps.
std::pair<int64_t, int64_t> brute_force_periods(const BoxString& x, int64_t cap);

// True iff some stage of the elimination chain carries >= 2 zero-soliton
// markers and a nontrivial rotation maps the marked state to itself.
bool detect_internal_symmetry(const BoxString& x);

PeriodReport cycle_report(const BoxString& x, int64_t cap);

}  // namespace pbbs

#endif
