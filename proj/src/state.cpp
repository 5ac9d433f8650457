#include "pbbs/state.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pbbs/errors.hpp"

namespace pbbs {

BoxString::BoxString(std::string_view s) {
  bits.reserve(s.size());
  for (char c : s) {
    if (c == '0')
      bits.push_back(0);
    else if (c == '1')
      bits.push_back(1);
    else
      throw inconsistency_error("state string must contain only 0 and 1");
  }
}

int64_t BoxString::balls() const {
  return std::accumulate(bits.begin(), bits.end(), int64_t{0});
}

std::string BoxString::str() const {
  std::string s(bits.size(), '0');
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) s[i] = '1';
  return s;
}

int64_t BlockState::size() const {
  return std::accumulate(Q.begin(), Q.end(), int64_t{0}) +
         std::accumulate(W.begin(), W.end(), int64_t{0});
}

int64_t BlockState::balls() const {
  return std::accumulate(Q.begin(), Q.end(), int64_t{0});
}

void BlockState::check() const {
  if (Q.empty() || Q.size() != W.size())
    throw inconsistency_error("block state needs N >= 1 with matching Q/W");
  for (int64_t q : Q)
    if (q < 1) throw inconsistency_error("Q entries must be positive");
  for (int64_t w : W)
    if (w < 1) throw inconsistency_error("W entries must be positive");
  int64_t sq = balls(), sw = size() - balls();
  if (sq >= sw) throw invariant_error("sum Q must be < sum W (ball count < L/2)");
  if (offset < 0 || offset >= size())
    throw inconsistency_error("offset out of range");
}

std::string BlockState::str() const {
  std::ostringstream os;
  os << "Q=";
  for (size_t i = 0; i < Q.size(); ++i) os << (i ? "," : "") << Q[i];
  os << ";W=";
  for (size_t i = 0; i < W.size(); ++i) os << (i ? "," : "") << W[i];
  os << ";offset=" << offset;
  return os.str();
}

BlockState to_blocks(const BoxString& x) {
  const int64_t L = x.size();
  int64_t ones = x.balls();
  if (L < 2 || ones == 0 || ones == L)
    throw degenerate_state_error("state needs at least one ball and one empty box");

  // First 1 whose cyclic left neighbour is 0.
  int64_t start = -1;
  for (int64_t i = 0; i < L; ++i) {
    if (x.bits[i] == 1 && x.bits[(i + L - 1) % L] == 0) {
      start = i;
      break;
    }
  }

  BlockState b;
  b.offset = start;
  int64_t i = start, read = 0;
  while (read < L) {
    int64_t q = 0, w = 0;
    while (x.bits[i] == 1) {
      ++q;
      i = (i + 1) % L;
    }
    while (w + read + q < L && x.bits[i] == 0) {
      ++w;
      i = (i + 1) % L;
    }
    b.Q.push_back(q);
    b.W.push_back(w);
    read += q + w;
  }
  return b;
}

BoxString from_blocks(const BlockState& b) {
  if (b.Q.empty() || b.Q.size() != b.W.size())
    throw inconsistency_error("block state needs N >= 1 with matching Q/W");
  const int64_t L = b.size();
  for (int64_t q : b.Q)
    if (q < 1) throw inconsistency_error("Q entries must be positive");
  for (int64_t w : b.W)
    if (w < 1) throw inconsistency_error("W entries must be positive");
  if (b.offset < 0 || b.offset >= L) throw inconsistency_error("offset out of range");

  BoxString x;
  x.bits.assign(L, 0);
  int64_t pos = b.offset;
  for (int64_t i = 0; i < b.N(); ++i) {
    for (int64_t k = 0; k < b.Q[i]; ++k) {
      x.bits[pos] = 1;
      pos = (pos + 1) % L;
    }
    pos = (pos + b.W[i]) % L;
  }
  return x;
}

BlockState canonicalize(const BlockState& b) {
  const int64_t N = b.N(), L = b.size();
  // Absolute start of each 1-block.
  std::vector<int64_t> starts(N);
  int64_t pos = ((b.offset % L) + L) % L;
  for (int64_t i = 0; i < N; ++i) {
    starts[i] = pos;
    pos = (pos + b.Q[i] + b.W[i]) % L;
  }
  int64_t k = std::min_element(starts.begin(), starts.end()) - starts.begin();
  BlockState out;
  out.offset = starts[k];
  out.Q.resize(N);
  out.W.resize(N);
  for (int64_t i = 0; i < N; ++i) {
    out.Q[i] = b.Q[(k + i) % N];
    out.W[i] = b.W[(k + i) % N];
  }
  return out;
}

BoxString evolve_balls(const BoxString& x) {
  const int64_t L = x.size();
  if (2 * x.balls() >= L)
    throw invariant_error("evolution requires ball count < L/2");
  // Scan from a point of minimal prefix balance; there the carrier is empty.
  int64_t bal = 0, best = 0, start = 0;
  for (int64_t i = 0; i < L; ++i) {
    bal += x.bits[i] ? 1 : -1;
    if (bal < best) {
      best = bal;
      start = i + 1;
    }
  }
  BoxString out;
  out.bits.assign(L, 0);
  int64_t carry = 0;
  for (int64_t k = 0; k < L; ++k) {
    int64_t i = (start + k) % L;
    if (x.bits[i]) {
      ++carry;
    } else if (carry > 0) {
      --carry;
      out.bits[i] = 1;
    }
  }
  return out;
}

BoxString evolve_balls_naive(const BoxString& x, bool left_to_right) {
  const int64_t L = x.size();
  if (2 * x.balls() >= L)
    throw invariant_error("evolution requires ball count < L/2");
  // occupied = original balls plus already placed copies.
  std::vector<uint8_t> occupied(x.bits.begin(), x.bits.end());
  std::vector<uint8_t> copies(L, 0);
  std::vector<int64_t> order;
  for (int64_t i = 0; i < L; ++i)
    if (x.bits[i]) order.push_back(i);
  if (!left_to_right) std::reverse(order.begin(), order.end());
  for (int64_t p : order) {
    int64_t j = (p + 1) % L;
    while (occupied[j]) j = (j + 1) % L;
    occupied[j] = 1;
    copies[j] = 1;
  }
  BoxString out;
  out.bits = std::move(copies);
  return out;
}

BlockState evolve_blocks(const BlockState& b) {
  b.check();
  const int64_t N = b.N();
  BlockState out;
  out.Q.resize(N);
  out.W.resize(N);
  for (int64_t i = 0; i < N; ++i) {
    // X_i = max over k=0..N-1 of sum_{l=1..k} (Q_{i-l} - W_{i-l}).
    int64_t X = 0, acc = 0;
    for (int64_t k = 1; k < N; ++k) {
      int64_t j = ((i - k) % N + N) % N;
      acc += b.Q[j] - b.W[j];
      X = std::max(X, acc);
    }
    out.Q[i] = std::min(b.W[i], X + b.Q[i]);
  }
  for (int64_t i = 0; i < N; ++i)
    out.W[i] = b.Q[(i + 1) % N] + b.W[i] - out.Q[i];
  // The new block 0 grows out of the first box of gap W[0].
  out.offset = (b.offset + b.Q[0]) % b.size();
  return out;
}

BoxString rotate(const BoxString& x, int64_t m) {
  const int64_t L = x.size();
  if (L == 0) return x;
  m = ((m % L) + L) % L;
  BoxString out;
  out.bits.resize(L);
  for (int64_t i = 0; i < L; ++i) out.bits[i] = x.bits[(i + m) % L];
  return out;
}

std::optional<int64_t> rotation_offset(const BoxString& x, const BoxString& y) {
  if (x.size() != y.size()) return std::nullopt;
  const int64_t L = x.size();
  for (int64_t m = 0; m < L; ++m) {
    bool ok = true;
    for (int64_t i = 0; i < L && ok; ++i)
      if (x.bits[(i + m) % L] != y.bits[i]) ok = false;
    if (ok) return m;
  }
  return std::nullopt;
}

namespace {

std::vector<int64_t> parse_int_list(const std::string& s) {
  std::vector<int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw inconsistency_error("empty entry in block list");
    out.push_back(std::stoll(tok));
  }
  return out;
}

}  // namespace

BoxString parse_state(const std::string& text) {
  BoxString x;
  if (text.find('=') == std::string::npos) {
    x = BoxString(text);
    if (x.size() < 2 || x.balls() == 0 || x.balls() == x.size())
      throw degenerate_state_error("state needs at least one ball and one empty box");
  } else {
    BlockState b;
    std::stringstream ss(text);
    std::string part;
    bool have_q = false, have_w = false;
    while (std::getline(ss, part, ';')) {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw inconsistency_error("bad state spec: " + part);
      std::string key = part.substr(0, eq), val = part.substr(eq + 1);
      if (key == "Q") {
        b.Q = parse_int_list(val);
        have_q = true;
      } else if (key == "W") {
        b.W = parse_int_list(val);
        have_w = true;
      } else if (key == "offset") {
        b.offset = std::stoll(val);
      } else {
        throw inconsistency_error("unknown key in state spec: " + key);
      }
    }
    if (!have_q || !have_w) throw inconsistency_error("state spec needs Q= and W=");
    b.check();
    x = from_blocks(b);
  }
  if (2 * x.balls() >= x.size())
    throw invariant_error("ball count must be < L/2");
  return x;
}

}  // namespace pbbs
