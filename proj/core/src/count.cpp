#include "parikhseq/count.hpp"

#include <vector>

namespace parikhseq {

BigInt count_subword(std::string_view w, std::string_view u) {
  // ways[k] = occurrences of u[0..k) as a subword of the prefix scanned so far.
  std::vector<BigInt> ways(u.size() + 1);
  ways[0] = 1;
  for (char c : w) {
    for (std::size_t k = u.size(); k > 0; --k) {
      if (u[k - 1] == c) ways[k] += ways[k - 1];
    }
  }
  return ways[u.size()];
}

BigInt count_factor(std::string_view w, std::string_view u) {
  if (u.empty()) return 1;
  BigInt n = 0;
  for (auto pos = w.find(u); pos != std::string_view::npos; pos = w.find(u, pos + 1)) ++n;
  return n;
}

BigInt count_genseq(std::string_view w, const GenSeq& q) { return count_runs(w, q.factors(), false, false); }

BigInt count_runs(std::string_view w, std::span<const std::string> runs, bool left_anchor, bool right_anchor) {
  if (runs.empty()) {
    if (left_anchor && right_anchor) return w.empty() ? 1 : 0;
    return 1;
  }
  const std::size_t n = w.size();
  const std::size_t r = runs.size();

  // Single left-to-right pass over start positions t. For run k, done[k]
  // sums the tuple counts of occurrences of runs 1..k whose run-k match has
  // already ended before t; pending[k] is a ring buffer holding the counts
  // for starts still in flight (at most |u_k| of them).
  std::vector<BigInt> done(r);
  std::vector<std::vector<BigInt>> pending(r);
  for (std::size_t k = 0; k < r; ++k) pending[k].assign(runs[k].size(), BigInt(0));

  auto matches = [&](std::size_t k, std::size_t t) {
    const auto& u = runs[k];
    return t + u.size() <= n && w.compare(t, u.size(), u) == 0;
  };

  BigInt right_anchored = 0;
  const std::size_t last_len = runs[r - 1].size();
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t len = runs[k].size();
      if (t >= len) done[k] += pending[k][(t - len) % len];
    }
    for (std::size_t k = 0; k < r; ++k) {
      BigInt value = 0;
      if (matches(k, t)) {
        if (k == 0) {
          value = (!left_anchor || t == 0) ? 1 : 0;
        } else {
          value = done[k - 1];
        }
      }
      if (k == r - 1 && right_anchor && t + last_len == n) right_anchored = value;
      pending[k][t % runs[k].size()] = std::move(value);
    }
  }
  if (right_anchor) return right_anchored;

  // done[r-1] covers starts up to n - 1 - |u_r|; the start n - |u_r| (match
  // ending on the last letter) is still pending, later starts cannot match.
  BigInt total = done[r - 1];
  if (n >= last_len) total += pending[r - 1][(n - last_len) % last_len];
  return total;
}

}  // namespace parikhseq
