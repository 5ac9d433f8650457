#ifndef PBBS_GRAPH_HPP
#define PBBS_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pbbs/state.hpp"

namespace pbbs {

// A tree of the graph associated with the elimination chain of a state.
// Columns are the 2N original blocks (even = 1-block, odd = 0-block).
// Every tree contains exactly one star, at level `height`; adjacent blocks
// that vanish simultaneously share a star and form one (mixed) tree.
struct GraphTree {
  int64_t height = 0;
  int64_t links = 0;
  std::vector<int64_t> feet;  // original column indices, ascending
  bool white = false;         // all feet are 1-blocks
  bool black = false;         // all feet are 0-blocks
  // Cyclic column interval [lo, lo+len) spanned by the tree at its death.
  int64_t span_lo = 0, span_len = 0;
  // Dead regions covered by merge arcs, as cyclic intervals (lo, len).
  std::vector<std::pair<int64_t, int64_t>> arc_gaps;
};

struct AssociatedGraph {
  int64_t columns = 0;  // 2N
  std::vector<GraphTree> trees;

  // t straddles u: some merge arc of t covers u's span entirely.
  bool straddles(size_t t, size_t u) const;
  // Downward closure {u : u <= t} under the straddle order, including t.
  std::vector<size_t> under(size_t t) const;
  std::vector<int64_t> heights() const;  // ascending
};

AssociatedGraph build_graph(const BlockState& b);

// H_1 <= H_2 <= ... (tree heights sorted ascending).
std::vector<int64_t> heights(const AssociatedGraph& g);

}  // namespace pbbs

#endif
