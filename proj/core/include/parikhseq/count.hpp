#pragma once

#include <span>
#include <string>
#include <string_view>

#include "parikhseq/bigint.hpp"
#include "parikhseq/word.hpp"

namespace parikhseq {

/// Scattered-subword occurrences (w choose u); 1 for the empty u.
BigInt count_subword(std::string_view w, std::string_view u);
inline BigInt count_subword(const Word& w, const Word& u) { return count_subword(w.view(), u.view()); }

/// Occurrences of u as a factor; 1 for the empty u.
BigInt count_factor(std::string_view w, std::string_view u);
inline BigInt count_factor(const Word& w, const Word& u) { return count_factor(w.view(), u.view()); }

/// |w|_Q: tuples (i_1..i_x) with q_j matched at i_j and i_{j+1} - i_j >= |q_j|.
BigInt count_genseq(std::string_view w, const GenSeq& q);
inline BigInt count_genseq(const Word& w, const GenSeq& q) { return count_genseq(w.view(), q); }

/// Occurrences of the runs u_1..u_r in order, consecutive runs separated by
/// a gap of length >= 0. A left anchor pins u_1 to position 1, a right anchor
/// pins u_r to end at |w|.
///
/// Empty run list: 1, except [w is empty] when both anchors are set.
BigInt count_runs(std::string_view w, std::span<const std::string> runs, bool left_anchor, bool right_anchor);

inline BigInt count_piece(std::string_view w, const Piece& p) {
  return count_runs(w, p.parts, p.left_anchor, p.right_anchor);
}
inline BigInt count_piece(const Word& w, const Piece& p) { return count_piece(w.view(), p); }

}  // namespace parikhseq
