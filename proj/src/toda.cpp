#include "pbbs/toda.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pbbs/errors.hpp"

namespace pbbs {

namespace {

// log(sum exp(x_i)) over a small list, stable.
double log_sum_exp(const std::vector<double>& xs) {
  double m = *std::max_element(xs.begin(), xs.end());
  if (!std::isfinite(m)) return m;
  double s = 0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace

void TodaState::check() const {
  if (logI.empty() || logI.size() != logV.size())
    throw inconsistency_error("Toda state needs N >= 1 with matching I/V");
  double si = 0, sv = 0;
  for (double x : logI) {
    if (!std::isfinite(x)) throw invariant_error("non-finite log I");
    si += x;
  }
  for (double x : logV) {
    if (!std::isfinite(x)) throw invariant_error("non-finite log V");
    sv += x;
  }
  if (!(sv < si)) throw invariant_error("requires prod V < prod I");
}

TodaState toda_init(const BlockState& b, double eps, const std::vector<double>* deltaI,
                    const std::vector<double>* deltaV) {
  if (eps <= 0) throw inconsistency_error("eps must be positive");
  TodaState s;
  s.eps = eps;
  const int64_t N = b.N();
  s.logI.resize(N);
  s.logV.resize(N);
  for (int64_t j = 0; j < N; ++j) {
    s.logI[j] = -static_cast<double>(b.Q[j]) / eps + (deltaI ? (*deltaI)[j] : 0.0);
    s.logV[j] = -static_cast<double>(b.W[j]) / eps + (deltaV ? (*deltaV)[j] : 0.0);
  }
  s.check();
  return s;
}

TodaState toda_step(const TodaState& s) {
  s.check();
  const int64_t N = s.N();
  TodaState out;
  out.eps = s.eps;
  out.t = s.t + 1;
  out.logI.resize(N);
  out.logV.resize(N);

  // log(1 - prod V / prod I), a fixed negative exponential.
  double si = std::accumulate(s.logI.begin(), s.logI.end(), 0.0);
  double sv = std::accumulate(s.logV.begin(), s.logV.end(), 0.0);
  double log_one_minus_ratio = std::log1p(-std::exp(sv - si));

  for (int64_t i = 0; i < N; ++i) {
    // denominator 1 + sum_{k=1..N-1} prod_{l=1..k} V_{i-l}/I_{i-l}
    std::vector<double> terms{0.0};
    double acc = 0;
    for (int64_t k = 1; k < N; ++k) {
      int64_t j = ((i - k) % N + N) % N;
      acc += s.logV[j] - s.logI[j];
      terms.push_back(acc);
    }
    double log_den = log_sum_exp(terms);
    // I_i' = V_i + I_i (1 - prodV/prodI) / den
    double a = s.logV[i];
    double bterm = s.logI[i] + log_one_minus_ratio - log_den;
    out.logI[i] = log_sum_exp({a, bterm});
  }
  for (int64_t i = 0; i < N; ++i)
    out.logV[i] = s.logI[(i + 1) % N] + s.logV[i] - out.logI[i];
  return out;
}

double log_m2(const TodaState& s) {
  return std::accumulate(s.logI.begin(), s.logI.end(), 0.0) +
         std::accumulate(s.logV.begin(), s.logV.end(), 0.0);
}

BridgeReport bridge_check(const BlockState& b, const std::vector<double>& eps_list,
                          int64_t T_steps, const std::vector<double>* deltaI,
                          const std::vector<double>* deltaV) {
  for (size_t i = 0; i + 1 < eps_list.size(); ++i)
    if (!(eps_list[i] > eps_list[i + 1]))
      throw inconsistency_error("eps ladder must be strictly decreasing");
  for (double e : eps_list)
    if (e <= 0) throw inconsistency_error("eps must be positive");

  BridgeReport rep;
  for (double eps : eps_list) {
    TodaState s = toda_init(b, eps, deltaI, deltaV);
    BlockState blocks = b;
    double errQ = 0, errW = 0;
    for (int64_t t = 0; t < T_steps; ++t) {
      s = toda_step(s);
      blocks = evolve_blocks(blocks);
      for (int64_t j = 0; j < b.N(); ++j) {
        errQ = std::max(errQ, std::abs(-eps * s.logI[j] - static_cast<double>(blocks.Q[j])));
        errW = std::max(errW, std::abs(-eps * s.logV[j] - static_cast<double>(blocks.W[j])));
      }
    }
    rep.rows.push_back({eps, errQ, errW, T_steps});
  }
  rep.monotone = true;
  for (size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    if (rep.rows[i + 1].max_err_Q > rep.rows[i].max_err_Q + 1e-12) rep.monotone = false;
    if (rep.rows[i + 1].max_err_W > rep.rows[i].max_err_W + 1e-12) rep.monotone = false;
  }
  return rep;
}

}  // namespace pbbs
