#include "pbbs/curve.hpp"

#include <algorithm>

#include "pbbs/errors.hpp"

namespace pbbs {

namespace {

struct ToadaData {
  std::vector<BigFloat> I, V;  // 0-based arrays for blocks 1..N
};

ToadaData exp_data(const BlockState& b, double eps) {
  if (eps <= 0) throw inconsistency_error("eps must be positive");
  const int64_t N = b.N();
  ToadaData d;
  d.I.reserve(N);
  d.V.reserve(N);
  for (int64_t j = 0; j < N; ++j) {
    d.I.push_back(exp(-BigFloat(b.Q[j]) / eps));
    d.V.push_back(exp(-BigFloat(b.W[j]) / eps));
  }
  return d;
}

void fill_m(SpectralCurve& c, const ToadaData& d) {
  BigFloat m2(1);
  for (size_t j = 0; j < d.I.size(); ++j) m2 *= d.I[j] * d.V[j];
  c.m2 = m2;
  c.m = sqrt(m2);
}

void validate_curve(const SpectralCurve& c, const ToadaData& d, unsigned prec) {
  const int64_t N = c.N;
  // Signs must alternate: coefficient of lambda^k carries sign (-1)^(N-k).
  for (int64_t k = 0; k <= N; ++k) {
    BigFloat ck = c.delta.coeffs[k];
    bool want_neg = (N - k) % 2 == 1;
    if ((want_neg && ck >= 0) || (!want_neg && ck <= 0))
      throw precision_error("curve coefficient lost its sign; raise precision", 2 * prec);
  }
  // u_0 = prod I + prod V and u_{N-1} = sum I + sum V hold exactly.
  BigFloat pi(1), pv(1), si(0), sv(0);
  for (int64_t j = 0; j < N; ++j) {
    pi *= d.I[j];
    pv *= d.V[j];
    si += d.I[j];
    sv += d.V[j];
  }
  BigFloat tol = pow(BigFloat(2), -static_cast<int64_t>(prec) / 2);
  BigFloat u0 = c.u(0), ug = c.u(N - 1);
  if (abs(u0 - (pi + pv)) > tol * (pi + pv) || abs(ug - (si + sv)) > tol * (si + sv))
    throw precision_error("curve coefficients drifted from closed forms; raise precision",
                          2 * prec);
}

}  // namespace

BigFloat SpectralCurve::u(int64_t k) const {
  BigFloat c = delta.coeffs[k];
  return (N - k) % 2 == 1 ? -c : c;
}

BigFloat SpectralCurve::v(int64_t k) const {
  const int64_t g = N - 1;
  // yN1 = lead * (lambda^g - v_{g-1} lambda^{g-1} + ...), lead = -I_1 V_1.
  BigFloat lead = yN1.coeffs[g];
  BigFloat c = yN1.coeffs[k] / lead;
  return (g - k) % 2 == 1 ? -c : c;
}

SpectralCurve build_curve_recurrence(const BlockState& b, double eps, unsigned prec,
                                     bool validate) {
  b.check();
  PrecisionGuard guard(prec);
  const int64_t N = b.N();
  ToadaData d = exp_data(b, eps);

  Poly x_prev = Poly::constant(BigFloat(0));  // x_0
  Poly x_cur = Poly::constant(BigFloat(1));   // x_1
  Poly y_prev = Poly::constant(BigFloat(1));  // y_0
  Poly y_cur = Poly::constant(BigFloat(0));   // y_1
  Poly yN;  // y_N, needed for Delta

  for (int64_t n = 1; n <= N; ++n) {
    BigFloat a = d.I[n % N] + d.V[n - 1];  // I_{n+1} + V_n
    BigFloat bb = d.I[n - 1] * d.V[n - 1];  // I_n V_n
    Poly x_next = sub(shift_mul(x_cur, a), scale(x_prev, bb));
    Poly y_next = sub(shift_mul(y_cur, a), scale(y_prev, bb));
    x_prev = std::move(x_cur);
    x_cur = std::move(x_next);
    if (n == N - 1) yN = y_next;  // this is y_{n+1} = y_N
    y_prev = std::move(y_cur);
    y_cur = std::move(y_next);
  }
  if (N == 1) yN = y_prev;  // y_1 has degree < 0 terms; y_N = y_1 = 0

  SpectralCurve c;
  c.eps = eps;
  c.prec = prec;
  c.N = N;
  c.delta = add(x_cur, yN);  // x_{N+1} + y_N
  c.yN1 = y_cur;             // y_{N+1}
  c.delta.coeffs.resize(N + 1, BigFloat(0));
  c.yN1.coeffs.resize(std::max<int64_t>(N, 1), BigFloat(0));
  fill_m(c, d);
  if (validate) validate_curve(c, d, prec);
  return c;
}

std::vector<std::vector<int64_t>> enumerate_A(int64_t N) {
  std::vector<std::vector<int64_t>> out;
  if (N < 2) {
    out.push_back({});
    return out;
  }
  if (N == 2) {
    // The 2-cycle has a double edge: both dominoes cover {1,2}.
    out.push_back({});
    out.push_back({1});
    out.push_back({2});
    return out;
  }
  // Independent sets of right endpoints on the cycle 1..N.
  std::vector<int64_t> cur;
  auto rec = [&](auto&& self, int64_t i, bool used1) -> void {
    if (i > N) {
      out.push_back(cur);
      return;
    }
    self(self, i + 1, used1);
    bool blocked = (!cur.empty() && cur.back() == i - 1) || (i == N && used1);
    if (!blocked) {
      cur.push_back(i);
      self(self, i + 1, used1 || i == 1);
      cur.pop_back();
    }
  };
  rec(rec, 1, false);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int64_t>> enumerate_A_prime(int64_t N) {
  // Dominoes inside the path 2..N: right endpoints 3..N, linearly
  // non-adjacent.
  std::vector<std::vector<int64_t>> out;
  std::vector<int64_t> cur;
  auto rec = [&](auto&& self, int64_t i) -> void {
    if (i > N) {
      out.push_back(cur);
      return;
    }
    self(self, i + 1);
    if (cur.empty() || cur.back() < i - 1) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 3);
  std::sort(out.begin(), out.end());
  return out;
}

SpectralCurve build_curve_combinatorial(const BlockState& b, double eps, unsigned prec,
                                        int64_t bound) {
  b.check();
  const int64_t N = b.N();
  if (N > bound)
    throw inconsistency_error("combinatorial expansion refused: N exceeds enumeration bound");
  PrecisionGuard guard(prec);
  ToadaData d = exp_data(b, eps);

  auto X_const = [&](int64_t i) {  // X_i = lambda - (I_{i+1} + V_i), 1-based i
    return d.I[i % N] + d.V[i - 1];
  };
  auto Y_val = [&](int64_t j) {  // Y_j = -I_j V_j, 1-based j
    return -d.I[j - 1] * d.V[j - 1];
  };

  auto assemble = [&](const std::vector<std::vector<int64_t>>& matchings,
                      const std::vector<int64_t>& vertices) {
    Poly total = Poly::constant(BigFloat(0));
    for (const auto& mset : matchings) {
      // covered vertices: {a-1 mod N (as 1..N), a} for each right endpoint a
      std::vector<uint8_t> covered(N + 1, 0);
      BigFloat coef(1);
      for (int64_t a : mset) {
        coef *= Y_val(a);
        covered[a] = 1;
        covered[a == 1 ? N : a - 1] = 1;
      }
      Poly term = Poly::constant(coef);
      for (int64_t i : vertices)
        if (!covered[i]) term = shift_mul(term, X_const(i));
      total = add(total, term);
    }
    return total;
  };

  std::vector<int64_t> all(N), tail;
  for (int64_t i = 0; i < N; ++i) all[i] = i + 1;
  for (int64_t i = 2; i <= N; ++i) tail.push_back(i);

  SpectralCurve c;
  c.eps = eps;
  c.prec = prec;
  c.N = N;
  c.delta = assemble(enumerate_A(N), all);
  c.yN1 = scale(assemble(enumerate_A_prime(N), tail), Y_val(1));
  c.delta.coeffs.resize(N + 1, BigFloat(0));
  c.yN1.coeffs.resize(std::max<int64_t>(N, 1), BigFloat(0));
  fill_m(c, d);
  return c;
}

}  // namespace pbbs
