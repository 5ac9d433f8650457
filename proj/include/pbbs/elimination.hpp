#ifndef PBBS_ELIMINATION_HPP
#define PBBS_ELIMINATION_HPP

#include <cstdint>
#include <vector>

#include "pbbs/state.hpp"

namespace pbbs {

// Conserved column counts p_1 >= p_2 >= ... (p_j = pairs removed by the
// j-th 10-elimination) and the derived row data.
struct YoungDiagram {
  std::vector<int64_t> columns;

  int64_t total() const;                // number of boxes = ball count
  std::vector<int64_t> rows() const;    // conjugate partition, descending
  // Distinct row lengths L_1 > ... > L_s with multiplicities n_1..n_s.
  struct RowClasses {
    std::vector<int64_t> length, mult;
  };
  RowClasses row_classes() const;
  bool operator==(const YoungDiagram&) const = default;
};

// A state together with 0-soliton markers.  A marker at position p sits on
// the boundary before box p; markers never move under time evolution and
// several markers may share a position.
struct MarkedState {
  BoxString state;
  std::vector<int64_t> zero_solitons;  // sorted, duplicates allowed

  bool operator==(const MarkedState&) const = default;
};

// One 10-elimination: every 1-block loses its rightmost box and every
// 0-block its leftmost box.  Blocks that vanish leave 0-soliton markers;
// a run of adjacent simultaneously vanishing blocks leaves one marker per
// pair (left to right), matching the convention that adjacent deaths are
// written as a single star.  Existing markers are kept and re-indexed.
// A state with no balls is returned unchanged with *pairs_removed == 0.
MarkedState ten_eliminate(const MarkedState& m, int64_t* pairs_removed = nullptr);

// Iterates 10-elimination to exhaustion and records p_1, p_2, ...
YoungDiagram young_diagram(const BoxString& x);

// Same, but directly on block lengths (no marker bookkeeping).
YoungDiagram young_from_blocks(std::vector<int64_t> Q, std::vector<int64_t> W);

// Slow oracle: the literal arc construction.  Pass j connects every `10`
// pair that is adjacent once previously matched boxes are skipped; the
// returned vector holds the per-pass pair counts, which equal the columns
// of the Young diagram.
std::vector<int64_t> arc_pair_counts(const BoxString& x);

}  // namespace pbbs

#endif
