#include "pbbs/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "pbbs/curve.hpp"
#include "pbbs/errors.hpp"

namespace pbbs {

PeriodAsymptotics period_asymptotics(const UltraInvariants& u) {
  const int64_t g = u.g();
  if (g < 1) throw inconsistency_error("period asymptotics need genus >= 1");
  const Rat M(-u.L, 2);
  auto U = [&](int64_t k) -> Rat { return k <= g ? Rat(u.U[k]) : Rat(0); };

  PeriodAsymptotics out;
  out.Bhat.assign(g, std::vector<Rat>(g));
  for (int64_t i = 1; i <= g; ++i) {
    for (int64_t j = 1; j <= g; ++j) {
      if (i == j)
        out.Bhat[i - 1][j - 1] = 2 * M - (j + 1) * U(j + 1) + (j + 2) * U(j) + U(1);
      else {
        int64_t k = std::min(i, j);
        out.Bhat[i - 1][j - 1] = M - U(k + 1) + U(k) + U(1);
      }
    }
  }
  out.nuhat.resize(g);
  out.rhat.resize(g);
  for (int64_t j = 1; j <= g; ++j) {
    out.nuhat[j - 1] = Rat(1, 2) * (U(j + 1) - U(j) - (U(1) - U(0)));
    out.rhat[j - 1] = -(M - U(j + 1) + U(j) + U(1));
  }
  out.bk.resize(g);
  out.ck.resize(g);
  for (int64_t k = 1; k <= g; ++k) {
    out.bk[k - 1] = U(0) - (k + 1) * U(k) + k * U(k + 1);
    out.ck[k - 1] = -M - (k + 1) * U(k) + k * U(k + 1);
    if (out.ck[k - 1] == 0)
      throw invariant_error("degenerate c_k = 0 (requires -M > U_0)");
  }
  out.sigma.resize(g);
  for (int64_t k = g; k >= 1; --k) {
    Rat s = -Rat(1, k + 1) * out.bk[k - 1] / out.ck[k - 1];
    for (int64_t l = k + 1; l <= g; ++l)
      s += Rat(1, l * (l + 1)) * out.bk[l - 1] / out.ck[l - 1];
    out.sigma[k - 1] = s;
  }
  return out;
}

double extrapolate_to_zero(const std::vector<double>& eps, const std::vector<double>& y) {
  const size_t n = eps.size();
  if (n == 1) return y[0];
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += eps[i];
    sy += y[i];
    sxx += eps[i] * eps[i];
    sxy += eps[i] * y[i];
  }
  double denom = n * sxx - sx * sx;
  double slope = (n * sxy - sx * sy) / denom;
  return (sy - slope * sx) / n;
}

RenkonReport verify_renkon(const BlockState& b, const std::vector<double>& eps_list,
                           unsigned prec) {
  for (size_t i = 0; i + 1 < eps_list.size(); ++i)
    if (!(eps_list[i] > eps_list[i + 1]))
      throw inconsistency_error("eps ladder must be strictly decreasing");
  b.check();

  UltraInvariants inv = invariants(b);
  const int64_t N = b.N(), g = N - 1;

  RenkonReport rep;
  rep.rows.resize(N);
  for (int64_t j = 0; j < N; ++j)
    rep.rows[j] = inv.U[j] - (j + 1 < N ? inv.U[j + 1] : 0);
  rep.edges_ok = true;

  for (double eps : eps_list) {
    PrecisionGuard guard(prec);
    SpectralCurve c = build_curve_recurrence(b, eps, prec);
    RootSet rs = find_roots(c, inv);  // asserts positive/simple/interlaced

    RenkonReport::PerEps pe;
    pe.eps = eps;
    // m carries valuation L/2 by construction: -eps log m = L/2 exactly.
    double neg_log_m = static_cast<double>(-eps * log(c.m));
    if (std::abs(neg_log_m - static_cast<double>(b.size()) / 2) > 1e-6 * b.size())
      throw invariant_error("m lost its valuation L/2");

    pe.max_rel_err = 0;
    for (int64_t j = 0; j < N; ++j) {
      pe.val_minus.push_back(static_cast<double>(-eps * log(rs.lam_minus[j])));
      pe.val_plus.push_back(static_cast<double>(-eps * log(rs.lam_plus[j])));
      pe.val_lam.push_back(static_cast<double>(-eps * log(rs.lam[j])));
      double row = static_cast<double>(rep.rows[j]);
      pe.max_rel_err = std::max(pe.max_rel_err, std::abs(pe.val_minus[j] - row) / row);
      pe.max_rel_err = std::max(pe.max_rel_err, std::abs(pe.val_plus[j] - row) / row);
    }
    for (int64_t k = 0; k < N; ++k)
      pe.val_u.push_back(static_cast<double>(-eps * log(c.u(k))));
    for (int64_t k = 0; k < g; ++k)
      pe.val_v.push_back(static_cast<double>(-eps * log(c.v(k))));
    rep.per_eps.push_back(std::move(pe));
  }

  std::vector<double> epss(eps_list.begin(), eps_list.end());
  for (int64_t j = 0; j < N; ++j) {
    std::vector<double> ym, yp;
    for (auto& pe : rep.per_eps) {
      ym.push_back(pe.val_minus[j]);
      yp.push_back(pe.val_plus[j]);
    }
    rep.extrap_minus.push_back(extrapolate_to_zero(epss, ym));
    rep.extrap_plus.push_back(extrapolate_to_zero(epss, yp));
    double row = static_cast<double>(rep.rows[j]);
    rep.max_extrap_rel_err = std::max(rep.max_extrap_rel_err,
                                      std::abs(rep.extrap_minus[j] - row) / row);
    rep.max_extrap_rel_err = std::max(rep.max_extrap_rel_err,
                                      std::abs(rep.extrap_plus[j] - row) / row);
  }
  for (int64_t k = 0; k < N; ++k) {
    std::vector<double> yu;
    for (auto& pe : rep.per_eps) yu.push_back(pe.val_u[k]);
    rep.extrap_u.push_back(extrapolate_to_zero(epss, yu));
  }
  for (int64_t k = 0; k < g; ++k) {
    std::vector<double> yv;
    for (auto& pe : rep.per_eps) yv.push_back(pe.val_v[k]);
    rep.extrap_v.push_back(extrapolate_to_zero(epss, yv));
  }
  return rep;
}

XiEstimate xi_estimate(const BlockState& b, int64_t j, const std::vector<double>& eps_list,
                       unsigned prec) {
  b.check();
  const int64_t N = b.N(), g = N - 1;
  if (g < 1) throw inconsistency_error("xi needs genus >= 1 (empty product otherwise)");
  if (j < 0 || j > g) throw inconsistency_error("lambda index out of range");
  for (size_t i = 0; i + 1 < eps_list.size(); ++i)
    if (!(eps_list[i] > eps_list[i + 1]))
      throw inconsistency_error("eps ladder must be strictly decreasing");

  UltraInvariants inv = invariants(b);
  XiEstimate est;
  for (double eps : eps_list) {
    PrecisionGuard guard(prec);
    SpectralCurve c = build_curve_recurrence(b, eps, prec);
    RootSet rs = find_roots(c, inv);
    BigFloat prod(1);
    for (int64_t i = 0; i < g; ++i) prod *= abs(rs.mu[i] - rs.lam[j]);
    est.per_eps.push_back(static_cast<double>(eps * log(prod)));
  }
  std::vector<double> epss(eps_list.begin(), eps_list.end());
  est.value = extrapolate_to_zero(epss, est.per_eps);
  // Residual of the linear fit.
  if (epss.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(epss.size());
    for (size_t i = 0; i < epss.size(); ++i) {
      sx += epss[i];
      sy += est.per_eps[i];
      sxx += epss[i] * epss[i];
      sxy += epss[i] * est.per_eps[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double icept = (sy - slope * sx) / n;
    for (size_t i = 0; i < epss.size(); ++i)
      est.residual = std::max(est.residual,
                              std::abs(icept + slope * epss[i] - est.per_eps[i]));
    est.converged = est.residual < 0.25;
  } else {
    est.converged = true;
  }
  return est;
}

}  // namespace pbbs
