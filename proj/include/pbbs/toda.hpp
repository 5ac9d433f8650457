#ifndef PBBS_TODA_HPP
#define PBBS_TODA_HPP

#include <cstdint>
#include <vector>

#include "pbbs/state.hpp"

namespace pbbs {

// Periodic discrete Toda variables kept as natural logs: logI[j] = log I_j^t,
// logV[j] = log V_j^t.  All sums that arise in the update have positive
// terms, so the whole evolution stays in the log domain.
struct TodaState {
  std::vector<double> logI, logV;
  double eps = 0;
  int64_t t = 0;

  int64_t N() const { return static_cast<int64_t>(logI.size()); }
  void check() const;  // finite entries, sum logV < sum logI
};

// logI_j = -Q_j/eps, logV_j = -W_j/eps; optional additive perturbations.
TodaState toda_init(const BlockState& b, double eps,
                    const std::vector<double>* deltaI = nullptr,
                    const std::vector<double>* deltaV = nullptr);

TodaState toda_step(const TodaState& s);

// Conserved quantity sum_j (logI_j + logV_j) = log m^2.
double log_m2(const TodaState& s);

// Comparison of the Toda flow against the exact block evolution.
struct BridgeReport {
  struct Row {
    double eps;
    double max_err_Q;  // max over t,j of |-eps logI_j^t - Q_j^t|
    double max_err_W;
    int64_t steps;
  };
  std::vector<Row> rows;
  bool monotone = false;  // errors non-increasing along the eps ladder
};

BridgeReport bridge_check(const BlockState& b, const std::vector<double>& eps_list,
                          int64_t T_steps,
                          const std::vector<double>* deltaI = nullptr,
                          const std::vector<double>* deltaV = nullptr);

}  // namespace pbbs

#endif
