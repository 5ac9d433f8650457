#include "pbbs/graph.hpp"

#include <algorithm>

#include "pbbs/errors.hpp"

namespace pbbs {

namespace {

// Does the cyclic interval (lo1, len1) contain (lo2, len2)?  Coordinates are
// column indices mod `mod`.
bool cyclic_contains(int64_t lo1, int64_t len1, int64_t lo2, int64_t len2, int64_t mod) {
  if (len1 >= mod) return true;
  if (len2 > len1) return false;
  int64_t shift = ((lo2 - lo1) % mod + mod) % mod;
  return shift + len2 <= len1;
}

struct LiveBlock {
  int64_t value;
  int64_t lo, len;  // cyclic column interval absorbed so far
  GraphTree acc;    // accumulating tree data
};

void finalize(GraphTree t, int64_t level, std::vector<GraphTree>& out) {
  t.height = level;
  std::sort(t.feet.begin(), t.feet.end());
  t.white = true;
  t.black = true;
  for (int64_t f : t.feet) {
    if (f % 2 == 0)
      t.black = false;
    else
      t.white = false;
  }
  out.push_back(std::move(t));
}

}  // namespace

AssociatedGraph build_graph(const BlockState& b) {
  if (b.Q.empty() || b.Q.size() != b.W.size())
    throw inconsistency_error("block state needs N >= 1 with matching Q/W");
  const int64_t N = b.N();
  const int64_t C = 2 * N;

  std::vector<LiveBlock> live;
  live.reserve(C);
  for (int64_t i = 0; i < N; ++i) {
    LiveBlock q{b.Q[i], 2 * i, 1, {}};
    q.acc.feet = {2 * i};
    live.push_back(std::move(q));
    LiveBlock w{b.W[i], 2 * i + 1, 1, {}};
    w.acc.feet = {2 * i + 1};
    live.push_back(std::move(w));
  }

  AssociatedGraph g;
  g.columns = C;

  // One star per dying pair, left to right within each dead run.
  auto finalize_run = [&](const std::vector<int64_t>& run, int64_t level) {
    for (size_t r = 0; r < run.size(); r += 2) {
      GraphTree t = std::move(live[run[r]].acc);
      ++t.links;  // chain node into the star
      int64_t lo = live[run[r]].lo, len = live[run[r]].len;
      if (r + 1 < run.size()) {
        GraphTree& u = live[run[r + 1]].acc;
        t.feet.insert(t.feet.end(), u.feet.begin(), u.feet.end());
        t.links += u.links + 1;
        t.arc_gaps.insert(t.arc_gaps.end(), u.arc_gaps.begin(), u.arc_gaps.end());
        len += live[run[r + 1]].len;
      }
      t.span_lo = lo;
      t.span_len = len;
      finalize(std::move(t), level, g.trees);
    }
  };

  for (int64_t level = 1; !live.empty(); ++level) {
    const int64_t n = live.size();
    for (auto& blk : live) --blk.value;

    std::vector<uint8_t> dead(n);
    int64_t n_dead = 0;
    for (int64_t i = 0; i < n; ++i) {
      dead[i] = live[i].value == 0;
      n_dead += dead[i];
    }

    if (n_dead == 0) {
      for (auto& blk : live) ++blk.acc.links;
      continue;
    }

    if (n_dead == n) {
      std::vector<int64_t> run(n);
      for (int64_t i = 0; i < n; ++i) run[i] = i;
      finalize_run(run, level);
      live.clear();
      break;
    }

    // Alive blocks in ring order and the dead run following each of them.
    std::vector<int64_t> alive;
    for (int64_t i = 0; i < n; ++i)
      if (!dead[i]) alive.push_back(i);
    const int64_t m = alive.size();
    std::vector<std::vector<int64_t>> run_after(m);
    for (int64_t j = 0; j < m; ++j) {
      int64_t i = (alive[j] + 1) % n;
      while (dead[i]) {
        run_after[j].push_back(i);
        i = (i + 1) % n;
      }
      finalize_run(run_after[j], level);
    }

    // Alive blocks j and j+1 merge iff the dead run between them is odd.
    std::vector<uint8_t> joins(m);
    bool all_join = true;
    for (int64_t j = 0; j < m; ++j) {
      joins[j] = run_after[j].size() % 2 == 1;
      all_join = all_join && joins[j];
    }

    std::vector<LiveBlock> next;
    auto emit_group = [&](const std::vector<int64_t>& members, bool full_cycle) {
      LiveBlock merged = std::move(live[members[0]]);
      ++merged.acc.links;
      for (size_t j = 1; j < members.size(); ++j) {
        LiveBlock& p = live[members[j]];
        merged.value += p.value;
        merged.acc.links += p.acc.links + 1;
        merged.acc.feet.insert(merged.acc.feet.end(), p.acc.feet.begin(), p.acc.feet.end());
        merged.acc.arc_gaps.insert(merged.acc.arc_gaps.end(), p.acc.arc_gaps.begin(),
                                   p.acc.arc_gaps.end());
        int64_t gap_lo = (merged.lo + merged.len) % C;
        int64_t gap_len = ((p.lo - gap_lo) % C + C) % C;
        if (gap_len > 0) merged.acc.arc_gaps.emplace_back(gap_lo, gap_len);
        merged.len = ((p.lo + p.len - merged.lo) % C + C) % C;
        if (merged.len == 0) merged.len = C;
      }
      if (full_cycle) {
        // The ring closes on itself; the final gap is an arc as well.
        if (members.size() > 1) {
          int64_t gap_lo = (merged.lo + merged.len) % C;
          int64_t gap_len = ((merged.lo - gap_lo) % C + C) % C;
          if (gap_len > 0) merged.acc.arc_gaps.emplace_back(gap_lo, gap_len);
        }
        merged.len = C;
      }
      next.push_back(std::move(merged));
    };

    if (all_join) {
      // Single group wrapping the whole ring (for m == 1: the lone block
      // absorbs the dead region; no merge node, plain chain step).
      if (m == 1) {
        LiveBlock solo = std::move(live[alive[0]]);
        ++solo.acc.links;
        solo.len = C;
        next.push_back(std::move(solo));
      } else {
        std::vector<int64_t> members;
        for (int64_t j = 0; j < m; ++j) members.push_back(alive[j]);
        emit_group(members, true);
      }
    } else {
      // Start each group after a non-joining seam.
      int64_t s = 0;
      while (joins[(s + m - 1) % m]) ++s;
      std::vector<int64_t> members;
      for (int64_t k = 0; k < m; ++k) {
        int64_t j = (s + k) % m;
        members.push_back(alive[j]);
        if (!joins[j]) {
          emit_group(members, false);
          members.clear();
        }
      }
    }

    live = std::move(next);
  }

  std::sort(g.trees.begin(), g.trees.end(),
            [](const GraphTree& a, const GraphTree& b) { return a.height < b.height; });
  return g;
}

bool AssociatedGraph::straddles(size_t t, size_t u) const {
  if (t == u) return false;
  for (auto& [lo, len] : trees[t].arc_gaps)
    if (cyclic_contains(lo, len, trees[u].span_lo, trees[u].span_len, columns)) return true;
  return false;
}

std::vector<size_t> AssociatedGraph::under(size_t t) const {
  std::vector<size_t> out{t};
  for (size_t u = 0; u < trees.size(); ++u)
    if (u != t && straddles(t, u)) out.push_back(u);
  return out;
}

std::vector<int64_t> AssociatedGraph::heights() const {
  std::vector<int64_t> h;
  h.reserve(trees.size());
  for (auto& t : trees) h.push_back(t.height);
  return h;  // sorted by construction
}

std::vector<int64_t> heights(const AssociatedGraph& g) { return g.heights(); }

}  // namespace pbbs
