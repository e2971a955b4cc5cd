#pragma once

#include <string_view>

#include "parikhseq/exact_matrix.hpp"
#include "parikhseq/word.hpp"

namespace parikhseq {

/// Parikh mapping induced by a word v = b_1 ... b_k over an alphabet.
///
/// The image of w is the (k+1)-dimensional unit upper-triangular matrix with
/// entry (i, j+1) = (w choose b_i ... b_j). When v lists the alphabet in
/// order without repeats this is the classic Parikh matrix.
class ParikhContext {
 public:
  /// Classic mapping: v = a_1 a_2 ... a_k.
  static ParikhContext classic(const Alphabet& alphabet);
  /// Extended mapping; the alphabet defaults to the letters of v.
  static ParikhContext induced(const Word& inducing);
  /// Throws ParseError when v is empty or uses letters outside the alphabet.
  static ParikhContext induced(const Word& inducing, const Alphabet& alphabet);

  const Word& inducing() const noexcept { return inducing_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t dim() const noexcept { return inducing_.length() + 1; }
  bool is_classic() const noexcept;

 private:
  ParikhContext(Word inducing, Alphabet alphabet);

  Word inducing_;
  Alphabet alphabet_;
};

/// Generator matrix: identity plus a 1 at (q, q+1) for every q with v[q] = a.
/// Throws ParseError for a letter outside the context alphabet.
ExactMatrix letter_matrix(const ParikhContext& ctx, char a);

/// Product of letter matrices over w, left to right.
ExactMatrix parikh_matrix(const ParikhContext& ctx, const Word& w);

/// Fills every entry from subword counts instead of multiplying generators.
ExactMatrix parikh_matrix_direct(const ParikhContext& ctx, const Word& w);

/// True when u and v map to the same matrix under ctx.
bool amiable(const ParikhContext& ctx, const Word& u, const Word& v);

}  // namespace parikhseq
