#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "parikhseq/exact_matrix.hpp"
#include "parikhseq/sequence_matrix.hpp"
#include "parikhseq/word.hpp"

namespace parikhseq {

/// (x+1)x(x+1) unit upper-triangular matrix with entry (i, j) = |w|_{q_i...q_{j-1}}
/// for i < j, built straight from generalized-subsequence counts.
struct SpecialMinor {
  GenSeq pattern;
  ExactMatrix matrix;
};

SpecialMinor special_minor(const GenSeq& q, const Word& w);

/// 1-based indices of the special minor inside the 3(L-1) sequence matrix:
/// 1, (L-1) + l_m for 1 <= m < x, and 3(L-1). Needs L >= 2.
std::vector<std::size_t> special_minor_indices(const GenSeq& q);

/// Principal submatrix of a sequence matrix on special_minor_indices().
ExactMatrix extract_special_minor(const SeqMatrix& m);

/// Total order on factor indices (0-based) that extends "is a proper prefix
/// of", with equal factors and incomparable ones ordered by index.
/// Returns the factor indices from smallest to largest.
std::vector<std::size_t> factor_order(const GenSeq& q);

/// Word over {a_1 < ... < a_x}, letter k standing for factor q_k.
struct WitnessWord {
  std::vector<std::size_t> letters;  // 1-based factor indices
  std::size_t symbol_count = 0;      // x

  std::size_t length() const noexcept { return letters.size(); }
  /// "a3a3a2a1a1"; "a10,a3,..." when x > 9.
  std::string render() const;
  /// Classic Parikh matrix over a_1 < ... < a_x.
  ExactMatrix parikh_matrix() const;
};

/// Construction statistics, reported by the CLI.
struct WitnessTrace {
  std::vector<std::size_t> initial;  // letters before any exchange
  std::size_t sweeps = 0;            // passes over all (l, i, j) triples, final no-op pass included
  std::size_t exchanges = 0;
  bool repaired = false;             // swap result failed the adjacency check
};

/// Reduction of a special minor to a classic Parikh matrix, by exchanges.
///
/// Every factor occurrence becomes one letter; occurrences sharing a start
/// position are emitted largest-first in factor_order(). Then, for l = x..2,
/// whenever an occurrence of q_l overlaps an occurrence of q_{l-1} but the
/// letter for q_{l-1} sits earlier, the two letters are exchanged. Passes
/// repeat until nothing changes. Throws std::logic_error if the pass bound
/// is exceeded. The result can miss the target: an exchange may carry a_l
/// ahead of an a_{l+1} it does not overlap (Q = ba.a.b, w = bbaa).
WitnessWord witness_word_exchange(const GenSeq& q, const Word& w, WitnessTrace* trace = nullptr);

/// Reduction by chained merges: the k-th a_{i+1} goes directly after the
/// c-th a_i, c being the number of q_i occurrences that end before the k-th
/// occurrence of q_{i+1} starts. Always exact.
WitnessWord witness_word_merge(const GenSeq& q, const Word& w);

/// For every i < x and every k, the number of a_i before the k-th a_{i+1}
/// equals the number of q_i occurrences ending before the k-th q_{i+1}
/// occurrence starts; letter counts equal factor counts. Together these
/// force parikh_matrix() == special_minor().
bool witness_conditions_hold(const GenSeq& q, const Word& w, const WitnessWord& witness);

/// witness_word_exchange(), replaced by witness_word_merge() when its result
/// fails witness_conditions_hold() (flagged in the trace).
WitnessWord witness_word(const GenSeq& q, const Word& w, WitnessTrace* trace = nullptr);

struct MinorEntry {
  std::vector<std::size_t> rows;  // 1-based
  std::vector<std::size_t> cols;  // 1-based
  BigInt det;
};

struct MinorReport {
  std::size_t checked = 0;
  std::size_t max_order = 0;
  std::vector<MinorEntry> negative;
  bool ok() const noexcept { return negative.empty(); }
};

/// Determinants of all square minors of order <= max_order.
MinorReport check_minor_nonneg(const ExactMatrix& m, std::size_t max_order);

}  // namespace parikhseq
