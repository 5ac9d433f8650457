#include "pbbs/periods.hpp"

#include <algorithm>
#include <unordered_set>

#include "pbbs/errors.hpp"
#include "pbbs/spectral.hpp"

namespace pbbs {

void cycle_data(const YoungDiagram& d, int64_t L, std::vector<int64_t>& l,
                std::vector<int64_t>& Nj) {
  auto rc = d.row_classes();
  const int64_t s = rc.length.size();
  l.assign(s + 1, 0);
  Nj.assign(s + 1, 0);
  l[0] = L - 2 * d.total();
  if (l[0] <= 0) throw invariant_error("cycle formulas require ball count < L/2");
  auto len = [&](int64_t j) -> int64_t { return j <= s ? (j == s ? 0 : rc.length[j]) : 0; };
  // len(j) above is L_{j+1} with 0-based rc arrays; write it out directly:
  for (int64_t j = 1; j <= s; ++j) {
    int64_t Lj = rc.length[j - 1];
    int64_t Lj1 = j < s ? rc.length[j] : 0;
    l[j] = Lj - Lj1;
    int64_t acc = l[0];
    for (int64_t m = 1; m <= j; ++m) {
      int64_t Lm = rc.length[m - 1];
      acc += 2 * rc.mult[m - 1] * (Lm - Lj1);
    }
    Nj[j] = acc;
  }
  Nj[0] = l[0];
  (void)len;
}

Int fundamental_cycle_formula(const YoungDiagram& d, int64_t L) {
  std::vector<int64_t> l, Nj;
  cycle_data(d, L, l, Nj);
  const int64_t s = static_cast<int64_t>(l.size()) - 1;
  std::vector<Rat> ratios;
  for (int64_t j = 1; j <= s; ++j)
    ratios.emplace_back(Int(Nj[j]) * Nj[j - 1], Int(l[j]) * l[0]);
  return lcm_of_rationals(ratios);
}

Int relative_period(const YoungDiagram& d, int64_t L) {
  std::vector<int64_t> l, Nj;
  cycle_data(d, L, l, Nj);
  const int64_t s = static_cast<int64_t>(l.size()) - 1;
  std::vector<Rat> ratios;
  for (int64_t j = 1; j <= s - 1; ++j)
    ratios.emplace_back(Int(Nj[j]) * Nj[j - 1], Int(l[j]) * l[0]);
  return lcm_of_rationals(ratios);
}

Int relative_period_sigma(const UltraInvariants& u) {
  const int64_t g = u.g();
  if (g == 0) return 1;
  PeriodAsymptotics pa = period_asymptotics(u);
  // lcm(2/sigma_1, ..., 2/sigma_g, 1) recast through pairwise differences;
  // the recast form stays valid when row lengths repeat (equal sigmas and
  // the vanishing leading combination drop out).
  std::vector<Rat> values;
  Rat head = pa.sigma[0];
  for (int64_t k = 0; k < g; ++k) head += pa.sigma[k];
  if (head != 0) values.push_back(abs(Rat(2) / head));
  for (int64_t k = 0; k + 1 < g; ++k) {
    Rat diff = pa.sigma[k] - pa.sigma[k + 1];
    if (diff != 0) values.push_back(abs(Rat(2) / diff));
  }
  return lcm_of_rationals(values);
}

namespace {

uint64_t to_mask(const BoxString& x) {
  uint64_t m = 0;
  for (int64_t i = 0; i < x.size(); ++i)
    if (x.bits[i]) m |= uint64_t{1} << i;
  return m;
}

uint64_t rotate_mask(uint64_t m, int64_t r, int64_t L) {
  // left rotation by r (box i+r -> i), matching rotate()
  r %= L;
  return ((m >> r) | (m << (L - r))) & ((L == 64 ? ~uint64_t{0} : (uint64_t{1} << L) - 1));
}

uint64_t evolve_mask(uint64_t m, int64_t L) {
  // carrier pass from a minimal-balance point
  int64_t bal = 0, best = 0, start = 0;
  for (int64_t i = 0; i < L; ++i) {
    bal += (m >> i) & 1 ? 1 : -1;
    if (bal < best) {
      best = bal;
      start = i + 1;
    }
  }
  uint64_t out = 0;
  int64_t carry = 0;
  for (int64_t k = 0; k < L; ++k) {
    int64_t i = (start + k) % L;
    if ((m >> i) & 1) {
      ++carry;
    } else if (carry > 0) {
      --carry;
      out |= uint64_t{1} << i;
    }
  }
  return out;
}

}  // namespace

std::pair<int64_t, int64_t> brute_force_periods(const BoxString& x, int64_t cap) {
  const int64_t L = x.size();
  if (2 * x.balls() >= L) throw invariant_error("periods require ball count < L/2");
  if (L > 64) {
    // generic path
    std::vector<BoxString> rots;
    for (int64_t r = 0; r < L; ++r) rots.push_back(rotate(x, r));
    BoxString cur = x;
    int64_t r_found = 0;
    for (int64_t t = 1; t <= cap; ++t) {
      cur = evolve_balls(cur);
      if (!r_found && std::find(rots.begin(), rots.end(), cur) != rots.end()) r_found = t;
      if (cur == x) return {t, r_found};
    }
    throw bounded_search_error("period search exceeded cap");
  }
  uint64_t m0 = to_mask(x);
  std::unordered_set<uint64_t> rots;
  for (int64_t r = 0; r < L; ++r) rots.insert(rotate_mask(m0, r, L));
  uint64_t cur = m0;
  int64_t r_found = 0;
  for (int64_t t = 1; t <= cap; ++t) {
    cur = evolve_mask(cur, L);
    if (!r_found && rots.count(cur)) r_found = t;
    if (cur == m0) return {t, r_found};
  }
  throw bounded_search_error("period search exceeded cap");
}

bool detect_internal_symmetry(const BoxString& x) {
  MarkedState ms{x, {}};
  for (;;) {
    int64_t pairs = 0;
    ms = ten_eliminate(ms, &pairs);
    if (pairs == 0) break;
    const int64_t Lp = ms.state.size();
    if (Lp == 0) break;
    if (ms.zero_solitons.size() >= 2) {
      for (int64_t m = 1; m < Lp; ++m) {
        if (!(rotate(ms.state, m) == ms.state)) continue;
        std::vector<int64_t> shifted;
        shifted.reserve(ms.zero_solitons.size());
        for (int64_t p : ms.zero_solitons) shifted.push_back((p + m) % Lp);
        std::sort(shifted.begin(), shifted.end());
        if (shifted == ms.zero_solitons) return true;
      }
    }
    if (ms.state.balls() == 0) break;
  }
  return false;
}

PeriodReport cycle_report(const BoxString& x, int64_t cap) {
  PeriodReport rep;
  const int64_t L = x.size();
  YoungDiagram d = young_diagram(x);
  cycle_data(d, L, rep.l, rep.Nj);
  rep.internal_symmetry = detect_internal_symmetry(x);
  if (!rep.internal_symmetry) {
    rep.f_formula = static_cast<int64_t>(fundamental_cycle_formula(d, L));
    rep.r_formula = static_cast<int64_t>(relative_period(d, L));
  }
  auto [f, r] = brute_force_periods(x, cap);
  rep.f_brute = f;
  rep.r_brute = r;
  return rep;
}

}  // namespace pbbs
