#include "pbbs/elimination.hpp"

#include <algorithm>
#include <numeric>

#include "pbbs/errors.hpp"

namespace pbbs {

int64_t YoungDiagram::total() const {
  return std::accumulate(columns.begin(), columns.end(), int64_t{0});
}

std::vector<int64_t> YoungDiagram::rows() const {
  if (columns.empty()) return {};
  std::vector<int64_t> r(columns[0], 0);
  for (int64_t p : columns)
    for (int64_t i = 0; i < p; ++i) ++r[i];
  return r;
}

YoungDiagram::RowClasses YoungDiagram::row_classes() const {
  RowClasses rc;
  for (int64_t len : rows()) {
    if (!rc.length.empty() && rc.length.back() == len)
      ++rc.mult.back();
    else {
      rc.length.push_back(len);
      rc.mult.push_back(1);
    }
  }
  return rc;
}

MarkedState ten_eliminate(const MarkedState& m, int64_t* pairs_removed) {
  const BoxString& x = m.state;
  const int64_t L = x.size();
  if (x.balls() == 0) {
    if (pairs_removed) *pairs_removed = 0;
    return m;
  }
  if (x.balls() == L)
    throw degenerate_state_error("cannot eliminate from a state with no empty box");

  BlockState b = to_blocks(x);
  const int64_t N = b.N();

  // Cells removed: for each soliton its rightmost box and the first box of
  // the following gap.  Record block geometry along the way.
  std::vector<uint8_t> removed(L, 0);
  std::vector<int64_t> block_first(2 * N);  // ring order Q0,W0,Q1,W1,...
  std::vector<int64_t> block_len(2 * N);
  std::vector<uint8_t> dead(2 * N);
  int64_t pos = b.offset;
  for (int64_t i = 0; i < N; ++i) {
    block_first[2 * i] = pos;
    block_len[2 * i] = b.Q[i];
    dead[2 * i] = b.Q[i] == 1;
    removed[(pos + b.Q[i] - 1) % L] = 1;  // rightmost 1
    pos = (pos + b.Q[i]) % L;
    block_first[2 * i + 1] = pos;
    block_len[2 * i + 1] = b.W[i];
    dead[2 * i + 1] = b.W[i] == 1;
    removed[pos] = 1;  // leftmost 0
    pos = (pos + b.W[i]) % L;
  }

  // survivors_before[c] = number of surviving cells with index < c.
  std::vector<int64_t> survivors_before(L + 1, 0);
  for (int64_t c = 0; c < L; ++c)
    survivors_before[c + 1] = survivors_before[c] + (removed[c] ? 0 : 1);
  const int64_t Lp = survivors_before[L];

  MarkedState out;
  out.state.bits.reserve(Lp);
  for (int64_t c = 0; c < L; ++c)
    if (!removed[c]) out.state.bits.push_back(x.bits[c]);

  for (int64_t p : m.zero_solitons) {
    int64_t np = survivors_before[std::min<int64_t>(p, L)];
    out.zero_solitons.push_back(Lp ? np % Lp : 0);
  }

  // New markers: one per death event.  Maximal runs of adjacent dead blocks
  // are paired left to right; each pair (or leftover single) is one event.
  int64_t n_dead = std::accumulate(dead.begin(), dead.end(), int64_t{0});
  auto add_marker = [&](int64_t ring_idx) {
    int64_t anchor = block_first[ring_idx];
    int64_t np = survivors_before[anchor];
    out.zero_solitons.push_back(Lp ? np % Lp : 0);
  };
  if (n_dead == 2 * N) {
    for (int64_t i = 0; i < 2 * N; i += 2) add_marker(i);
  } else if (n_dead > 0) {
    // Walk runs starting after an alive block.
    int64_t s = 0;
    while (dead[s]) ++s;
    int64_t i = s;
    for (int64_t seen = 0; seen < 2 * N;) {
      if (!dead[i]) {
        i = (i + 1) % (2 * N);
        ++seen;
        continue;
      }
      int64_t run = 0;
      while (dead[(i + run) % (2 * N)]) ++run;
      for (int64_t k = 0; k < run; k += 2) add_marker((i + k) % (2 * N));
      i = (i + run) % (2 * N);
      seen += run;
    }
  }
  std::sort(out.zero_solitons.begin(), out.zero_solitons.end());

  if (pairs_removed) *pairs_removed = N;
  return out;
}

YoungDiagram young_from_blocks(std::vector<int64_t> Q, std::vector<int64_t> W) {
  // Ring of (length, is_ball_block) pairs.
  std::vector<std::pair<int64_t, uint8_t>> ring;
  ring.reserve(Q.size() * 2);
  for (size_t i = 0; i < Q.size(); ++i) {
    ring.emplace_back(Q[i], 1);
    ring.emplace_back(W[i], 0);
  }
  YoungDiagram d;
  for (;;) {
    int64_t solitons = 0;
    bool have_zero_block = false;
    for (auto& [len, ball] : ring) {
      if (ball)
        ++solitons;
      else
        have_zero_block = true;
    }
    if (solitons == 0 || !have_zero_block) break;
    d.columns.push_back(solitons);
    std::vector<std::pair<int64_t, uint8_t>> next;
    for (auto& [len, ball] : ring) {
      int64_t nl = len - 1;
      if (nl == 0) continue;
      if (!next.empty() && next.back().second == ball)
        next.back().first += nl;
      else
        next.emplace_back(nl, ball);
    }
    // cyclic coalescing across the seam
    if (next.size() >= 2 && next.front().second == next.back().second) {
      next.front().first += next.back().first;
      next.pop_back();
    }
    ring = std::move(next);
  }
  return d;
}

YoungDiagram young_diagram(const BoxString& x) {
  if (x.balls() == 0 || x.balls() == x.size())
    throw degenerate_state_error("young diagram needs a nontrivial state");
  BlockState b = to_blocks(x);
  return young_from_blocks(b.Q, b.W);
}

std::vector<int64_t> arc_pair_counts(const BoxString& x) {
  const int64_t L = x.size();
  std::vector<int64_t> active;  // unmatched cell indices, cyclic order
  for (int64_t i = 0; i < L; ++i) active.push_back(i);
  std::vector<int64_t> counts;
  for (;;) {
    int64_t ones = 0;
    for (int64_t c : active) ones += x.bits[c];
    if (ones == 0) break;
    // Match every active 1 followed (cyclically, among active cells) by 0.
    const int64_t n = active.size();
    std::vector<uint8_t> matched(n, 0);
    int64_t pairs = 0;
    for (int64_t j = 0; j < n; ++j) {
      int64_t k = (j + 1) % n;
      if (x.bits[active[j]] == 1 && x.bits[active[k]] == 0 && !matched[j] && !matched[k]) {
        matched[j] = matched[k] = 1;
        ++pairs;
      }
    }
    if (pairs == 0) break;  // no empty boxes left to pair with
    counts.push_back(pairs);
    std::vector<int64_t> next;
    for (int64_t j = 0; j < n; ++j)
      if (!matched[j]) next.push_back(active[j]);
    active = std::move(next);
  }
  return counts;
}

}  // namespace pbbs
