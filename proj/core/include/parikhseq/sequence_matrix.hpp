#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parikhseq/exact_matrix.hpp"
#include "parikhseq/word.hpp"

namespace parikhseq {

/// The four (L-1)x(L-1) blocks of a sequence matrix
///
///     [ I  E  F ]
///     [ 0  C  S ]
///     [ 0  0  I ]
enum class Block { E, F, C, S };

char block_name(Block b) noexcept;

/// What one matrix cell evaluates: a constant or an anchored piece count.
struct Cell {
  enum class Kind { Zero, One, Count };
  Kind kind = Kind::Zero;
  Piece piece;

  static Cell zero() { return {}; }
  static Cell one() { return {Kind::One, {}}; }
  static Cell count(Piece p) { return {Kind::Count, std::move(p)}; }
};

/// Cell-by-cell description of the sequence matrix for one pattern.
///
/// For 1 <= i <= j <= L-1, with B the boundary set of Q:
///   F[i][j] = Q[i..j+1]
///   E[i][j] = Q[i..j],     right-anchored unless j is in B
///   S[i][j] = Q[i+1..j+1], left-anchored unless i is in B
///   C[i][j] = Q[i+1..j],   anchored on each side not at a boundary
/// The C diagonal therefore holds the constant 1 at boundaries and the
/// both-anchored empty piece ([w is empty]) elsewhere.
class EntrySpec {
 public:
  /// Throws std::invalid_argument when L < 2.
  explicit EntrySpec(GenSeq q);

  const GenSeq& pattern() const noexcept { return q_; }
  /// L - 1.
  std::size_t block_size() const noexcept { return block_; }
  /// 3(L - 1).
  std::size_t dim() const noexcept { return 3 * block_; }

  /// 0-based matrix coordinates.
  const Cell& cell(std::size_t row, std::size_t col) const { return cells_[row * dim() + col]; }
  /// 1-based block coordinates, 1 <= i, j <= L-1.
  const Cell& block_cell(Block b, std::size_t i, std::size_t j) const;
  /// 0-based matrix coordinates of block cell (i, j), 1-based.
  std::pair<std::size_t, std::size_t> locate(Block b, std::size_t i, std::size_t j) const;

 private:
  Cell& at(std::size_t row, std::size_t col) { return cells_[row * dim() + col]; }

  GenSeq q_;
  std::size_t block_;
  std::vector<Cell> cells_;
};

EntrySpec entry_spec(const GenSeq& q);

/// Evaluates one cell against w.
BigInt evaluate(const Cell& cell, std::string_view w);

struct SeqMatrix {
  GenSeq pattern;
  ExactMatrix matrix;

  std::size_t block_size() const noexcept { return matrix.dim() / 3; }
  ExactMatrix block(Block b) const;
  /// 1-based block coordinates.
  const BigInt& at(Block b, std::size_t i, std::size_t j) const;
};

/// Every cell counted directly from w.
SeqMatrix seq_matrix_direct(const EntrySpec& spec, const Word& w);
SeqMatrix seq_matrix_direct(const GenSeq& q, const Word& w);

/// Generator for a single letter: the direct matrix of the one-letter word.
ExactMatrix seq_matrix_letter(const GenSeq& q, char a);
ExactMatrix seq_matrix_letter(const EntrySpec& spec, char a);

/// Streaming product of per-letter generators.
///
/// Generators are built once per letter (up front for a supplied alphabet,
/// otherwise on first use). Only the running product and one scratch matrix
/// are held, so arbitrarily long inputs can be pushed in chunks.
class SeqMatrixFolder {
 public:
  explicit SeqMatrixFolder(GenSeq q);
  SeqMatrixFolder(GenSeq q, const Alphabet& alphabet);

  void push(char a);
  void push(std::string_view letters);
  std::size_t letters_consumed() const noexcept { return consumed_; }
  const ExactMatrix& current() const noexcept { return acc_; }
  SeqMatrix result() const { return {spec_.pattern(), acc_}; }

  const SparseMatrix& generator(char a);

 private:
  EntrySpec spec_;
  std::optional<Alphabet> alphabet_;
  std::array<std::optional<SparseMatrix>, 128> generators_;
  ExactMatrix acc_;
  ExactMatrix scratch_;
  std::size_t consumed_ = 0;
};

/// Homomorphic image of w: left-to-right fold of the letter generators.
SeqMatrix seq_matrix(const GenSeq& q, const Word& w);

/// Factor-tracking special case: the bullet-free pattern [sigma].
/// Throws std::invalid_argument when |sigma| < 2.
SeqMatrix factor_matrix(const Word& sigma, const Word& w);

/// A cell at which two sequence matrices disagree.
struct CellDiff {
  std::size_t row = 0;  // 0-based matrix coordinates
  std::size_t col = 0;
  std::optional<Block> block;  // empty for cells of the I / 0 blocks
  std::size_t i = 0;           // 1-based block coordinates when block is set
  std::size_t j = 0;
  BigInt expected;
  BigInt actual;

  /// "C[1][2]" for block cells, "(row,col)" 1-based otherwise.
  std::string label() const;
};

/// Throws std::invalid_argument when the dimensions differ.
std::vector<CellDiff> diff_cells(const ExactMatrix& expected, const ExactMatrix& actual);

nlohmann::json to_json(const SeqMatrix& m);

}  // namespace parikhseq
