#include "pbbs/roots.hpp"

#include <algorithm>
#include <cmath>

#include "pbbs/errors.hpp"

namespace pbbs {

namespace {

int sign_of(const BigFloat& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

// Work in t = log(lambda); brackets are arithmetic in t, geometric in lambda.
struct Bracket {
  double ta, tb;  // coarse bracket endpoints in t
  int sa, sb;
};

// Rigorous outer bounds (Cauchy) for the positive roots of p, in t = log.
std::pair<double, double> root_bounds_log(const Poly& p) {
  const int64_t n = p.degree();
  BigFloat lead = abs(p.coeffs[n]);
  BigFloat c0 = abs(p.coeffs[0]);
  BigFloat mx(0), mx_rev(0);
  for (int64_t i = 0; i < n; ++i) mx = std::max(mx, abs(p.coeffs[i]) / lead);
  for (int64_t i = 1; i <= n; ++i) mx_rev = std::max(mx_rev, abs(p.coeffs[i]) / c0);
  BigFloat ub = 1 + mx;
  BigFloat lb = 1 / (1 + mx_rev);
  return {static_cast<double>(log(lb)), static_cast<double>(log(ub))};
}

BigFloat eval_at_t(const Poly& p, double t) { return p.eval(exp(BigFloat(t))); }

// Refine a sign-change bracket to relative tolerance 2^-(prec/2).
BigFloat refine_root(const Poly& p, const Poly& dp, double ta, double tb, int sa,
                     unsigned prec) {
  // Phase 1: bisect in t until the bracket is narrow.
  while (tb - ta > 1.0 / 64) {
    double tm = (ta + tb) / 2;
    int sm = sign_of(eval_at_t(p, tm));
    if (sm == 0) return exp(BigFloat(tm));
    if (sm == sa)
      ta = tm;
    else
      tb = tm;
  }
  // Phase 2: safeguarded Newton in lambda.  Stops when the bracket is
  // relatively tight or two consecutive Newton steps are below tolerance.
  BigFloat la = exp(BigFloat(ta)), lb = exp(BigFloat(tb));
  BigFloat x = sqrt(la * lb);
  const BigFloat rel_tol = pow(BigFloat(2), -static_cast<int64_t>(prec) / 2);
  const unsigned max_iter = prec;
  int small_steps = 0;
  for (unsigned it = 0; it < max_iter; ++it) {
    BigFloat fx = p.eval(x);
    int sx = sign_of(fx);
    if (sx == 0) return x;
    if (sx == sa)
      la = x;
    else
      lb = x;
    if ((lb - la) <= rel_tol * la) break;
    BigFloat dfx = dp.eval(x);
    bool newton_ok = dfx != 0;
    BigFloat nx = 0;
    if (newton_ok) {
      nx = x - fx / dfx;
      newton_ok = nx > la && nx < lb;
    }
    if (newton_ok) {
      if (abs(nx - x) <= rel_tol * x) {
        if (++small_steps >= 2) {
          x = nx;
          break;
        }
      } else {
        small_steps = 0;
      }
      x = nx;
    } else {
      x = sqrt(la * lb);
      small_steps = 0;
    }
  }
  return x;
}

}  // namespace

std::vector<BigFloat> isolate_positive_roots(const Poly& p, const std::vector<double>& vals,
                                             double eps, unsigned prec) {
  PrecisionGuard guard(prec);
  const int64_t n = p.degree();
  if (static_cast<int64_t>(vals.size()) != n)
    throw inconsistency_error("valuation hint count must match the degree");
  if (n == 0) return {};
  Poly dp = derivative(p);

  auto [t_lo, t_hi] = root_bounds_log(p);
  t_lo -= 1e-9;
  t_hi += 1e-9;

  // Cluster equal predicted valuations; roots ascend as valuations descend.
  struct Cluster {
    double t_pred;
    int64_t count;
  };
  std::vector<Cluster> clusters;
  for (int64_t j = n - 1; j >= 0; --j) {  // ascending root order
    double t = -vals[j] / eps;
    if (!clusters.empty() && std::abs(clusters.back().t_pred - t) < 1e-9)
      ++clusters.back().count;
    else
      clusters.push_back({t, 1});
  }

  // Window boundaries: midpoints between adjacent clusters, outer bounds at
  // the Cauchy limits.
  std::vector<double> walls{t_lo};
  for (size_t c = 0; c + 1 < clusters.size(); ++c)
    walls.push_back((clusters[c].t_pred + clusters[c + 1].t_pred) / 2);
  walls.push_back(t_hi);
  for (size_t c = 0; c < clusters.size(); ++c) {
    walls[c] = std::min(walls[c], clusters[c].t_pred);  // keep windows nonempty
    walls[c + 1] = std::max(walls[c + 1], clusters[c].t_pred);
  }

  std::vector<Bracket> brackets;
  auto scan_window = [&](double wa, double wb, int64_t want, std::vector<Bracket>& out) {
    int64_t subdiv = std::max<int64_t>(4 * want, 8);
    for (int round = 0; round < 10; ++round, subdiv *= 2) {
      std::vector<Bracket> found;
      double prev_t = wa;
      int prev_s = sign_of(eval_at_t(p, wa));
      for (int64_t i = 1; i <= subdiv; ++i) {
        double t = wa + (wb - wa) * static_cast<double>(i) / static_cast<double>(subdiv);
        int s = sign_of(eval_at_t(p, t));
        if (s != 0 && prev_s != 0 && s != prev_s) found.push_back({prev_t, t, prev_s, s});
        if (s != 0) {
          prev_t = t;
          prev_s = s;
        }
      }
      if (static_cast<int64_t>(found.size()) == want) {
        out.insert(out.end(), found.begin(), found.end());
        return true;
      }
      if (static_cast<int64_t>(found.size()) > want) break;  // fall through to global scan
    }
    return false;
  };

  bool ok = true;
  for (size_t c = 0; c < clusters.size() && ok; ++c)
    ok = scan_window(walls[c], walls[c + 1], clusters[c].count, brackets);

  if (!ok) {
    // Fallback: one dense scan across the whole root range.
    brackets.clear();
    if (!scan_window(t_lo, t_hi, n, brackets))
      throw precision_error("could not isolate all roots; raise precision", 2 * prec);
  }

  std::vector<BigFloat> roots;
  roots.reserve(n);
  for (auto& br : brackets)
    roots.push_back(refine_root(p, dp, br.ta, br.tb, br.sa, prec));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<BigFloat> RootSet::lam_pm() const {
  std::vector<BigFloat> out;
  out.reserve(lam_minus.size() * 2);
  for (size_t j = 0; j < lam_minus.size(); ++j) {
    out.push_back(lam_minus[j]);
    out.push_back(lam_plus[j]);
  }
  return out;
}

RootSet find_roots(const SpectralCurve& c, const UltraInvariants& hint) {
  PrecisionGuard guard(c.prec);
  const int64_t N = c.N, g = N - 1;
  if (static_cast<int64_t>(hint.U.size()) != N)
    throw inconsistency_error("hint does not match the curve size");

  // Predicted valuations of the lambda roots are the Young row lengths
  // U_j - U_{j+1} (descending); the band edges share them.
  std::vector<double> lam_vals(N);
  for (int64_t j = 0; j < N; ++j) {
    int64_t next = j + 1 < N ? hint.U[j + 1] : 0;
    lam_vals[j] = static_cast<double>(hint.U[j] - next);
  }

  Poly plus = add_constant(c.delta, 2 * c.m);
  Poly minus = add_constant(c.delta, -2 * c.m);
  auto roots_plus = isolate_positive_roots(plus, lam_vals, c.eps, c.prec);
  auto roots_minus = isolate_positive_roots(minus, lam_vals, c.eps, c.prec);

  // Merge with provenance tags; +1 = root of Delta+2m.
  std::vector<std::pair<BigFloat, int>> pm;
  for (auto& r : roots_plus) pm.push_back({r, +1});
  for (auto& r : roots_minus) pm.push_back({r, -1});
  std::sort(pm.begin(), pm.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  RootSet rs;
  for (int64_t j = 0; j < N; ++j) {
    const auto& lo = pm[2 * j];
    const auto& hi = pm[2 * j + 1];
    if (!(lo.first > 0) || !(lo.first < hi.first))
      throw invariant_error("band edges not positive and simple");
    // Delta(lambda_j^-) and Delta(lambda_j^+) are -+2m in the order fixed by
    // the alternating sign pattern: the sigma(j)=+ member solves Delta+2m.
    bool sigma_plus = ((g - j) % 2) == 1;  // j = g-1, g-3, ...
    int want_hi = sigma_plus ? +1 : -1;
    if (hi.second != want_hi || lo.second != -want_hi)
      throw invariant_error("band-edge pattern contradicts the sign decomposition");
    rs.lam_minus.push_back(lo.first);
    rs.lam_plus.push_back(hi.first);
  }

  // lambda_j is bracketed by its band edges, where Delta = -+2m.
  Poly ddelta = derivative(c.delta);
  for (int64_t j = 0; j < N; ++j) {
    double ta = static_cast<double>(log(rs.lam_minus[j]));
    double tb = static_cast<double>(log(rs.lam_plus[j]));
    int sa = sign_of(c.delta.eval(rs.lam_minus[j]));
    if (sa == 0) throw invariant_error("band edge coincides with a lambda root");
    rs.lam.push_back(refine_root(c.delta, ddelta, ta, tb, sa, c.prec));
    if (!(rs.lam_minus[j] < rs.lam[j]) || !(rs.lam[j] < rs.lam_plus[j]))
      throw invariant_error("interlacing violated");
  }

  if (g > 0) {
    std::vector<double> mu_vals(g);
    for (int64_t i = 0; i < g; ++i) {
      int64_t next = i + 1 < g ? hint.P[i + 1] : 0;
      mu_vals[i] = static_cast<double>(hint.P[i] - next);
    }
    rs.mu = isolate_positive_roots(c.yN1, mu_vals, c.eps, c.prec);
    for (auto& m : rs.mu)
      if (!(m > 0)) throw invariant_error("auxiliary spectrum not positive");
  }
  return rs;
}

}  // namespace pbbs
