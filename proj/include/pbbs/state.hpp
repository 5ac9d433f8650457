#ifndef PBBS_STATE_HPP
#define PBBS_STATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pbbs {

// Cyclic arrangement of L boxes, each empty (0) or holding one ball (1).
struct BoxString {
  std::vector<uint8_t> bits;

  BoxString() = default;
  explicit BoxString(std::string_view s);

  int64_t size() const { return static_cast<int64_t>(bits.size()); }
  int64_t balls() const;
  bool operator==(const BoxString&) const = default;
  std::string str() const;
};

// Cyclic block lengths: Q[i] consecutive 1s followed by W[i] consecutive 0s,
// read left to right starting at absolute box index `offset` (left end of
// the block Q[0]).  Indices are cyclic mod N.
struct BlockState {
  std::vector<int64_t> Q, W;
  int64_t offset = 0;

  int64_t N() const { return static_cast<int64_t>(Q.size()); }
  int64_t size() const;   // total boxes
  int64_t balls() const;  // sum of Q
  bool operator==(const BlockState&) const = default;

  void check() const;  // N >= 1, entries >= 1, sum Q < sum W
  std::string str() const;
};

BlockState to_blocks(const BoxString& x);
BoxString from_blocks(const BlockState& b);

// Rotate the block indices so that block 0 is the 1-block with the smallest
// absolute start index (the convention used by to_blocks).
BlockState canonicalize(const BlockState& b);

// One time step of the ball-moving rule (carrier algorithm, O(L)).
BoxString evolve_balls(const BoxString& x);

// Literal copy-and-move simulation of the update rule; `left_to_right`
// selects the processing order of the copies.  The result must not depend
// on that order.
BoxString evolve_balls_naive(const BoxString& x, bool left_to_right);

// One time step in block coordinates.  Block indices are preserved (block i
// maps to block i), which keeps the alignment with the Toda variables; the
// offset follows the block that grows out of the first box of gap W[0].
BlockState evolve_blocks(const BlockState& b);

// S^m where S sends the first box to the back (left rotation).
BoxString rotate(const BoxString& x, int64_t m);

// Smallest m >= 0 with S^m(x) == y, or nullopt if y is not a rotation of x.
std::optional<int64_t> rotation_offset(const BoxString& x, const BoxString& y);

// Accepts a raw 0/1 string or "Q=5,1,6;W=3,2,12[;offset=0]".
// Rejects degenerate states and enforces balls < L/2.
BoxString parse_state(const std::string& text);

}  // namespace pbbs

#endif
