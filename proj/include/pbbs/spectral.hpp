#ifndef PBBS_SPECTRAL_HPP
#define PBBS_SPECTRAL_HPP

#include <cstdint>
#include <vector>

#include "pbbs/rational.hpp"
#include "pbbs/roots.hpp"
#include "pbbs/tropical.hpp"

namespace pbbs {

// Leading 1/eps coefficients of the period data of the degenerating curve,
// all exact rationals in the U_k and M = -L/2.
struct PeriodAsymptotics {
  std::vector<std::vector<Rat>> Bhat;  // g x g, symmetric; (pi i eps) B -> Bhat
  std::vector<Rat> nuhat;              // (2 pi i eps) nu -> 2*nuhat (see nuhat def)
  std::vector<Rat> rhat;
  std::vector<Rat> sigma;  // sigma_1..sigma_g with B^-1 nu = sigma/2
  std::vector<Rat> bk, ck;  // b_k, c_k, k = 1..g
};

PeriodAsymptotics period_asymptotics(const UltraInvariants& u);

// Numerical verification of the row-length/valuation correspondence on a
// descending eps ladder: valuations of the band edges extrapolate to the
// Young rows, valuations of u_k and v_k to U_k and P_k, and m to L/2.
struct RenkonReport {
  struct PerEps {
    double eps;
    std::vector<double> val_minus, val_plus, val_lam;  // -eps log root
    std::vector<double> val_u, val_v;
    double max_rel_err;  // band-edge valuations vs rows at this eps
  };
  std::vector<int64_t> rows;  // expected limits, rows[j] for lam_j^{+-}
  std::vector<PerEps> per_eps;
  std::vector<double> extrap_minus, extrap_plus;  // linear-in-eps intercepts
  std::vector<double> extrap_u, extrap_v;
  double max_extrap_rel_err = 0;
  bool edges_ok = false;  // positive, simple, interlaced at every eps
};

RenkonReport verify_renkon(const BlockState& b, const std::vector<double>& eps_list,
                           unsigned prec);

// Valuation of prod_i (mu_i - lambda_j): per-eps values eps*log|.| and the
// linear-in-eps intercept.  Requires g >= 1.
struct XiEstimate {
  std::vector<double> per_eps;
  double value = 0;      // extrapolated
  double residual = 0;   // max deviation of the linear fit
  bool converged = false;
};

XiEstimate xi_estimate(const BlockState& b, int64_t j, const std::vector<double>& eps_list,
                       unsigned prec);

// Least-squares intercept of y = a + b*eps.
double extrapolate_to_zero(const std::vector<double>& eps, const std::vector<double>& y);

}  // namespace pbbs

#endif
