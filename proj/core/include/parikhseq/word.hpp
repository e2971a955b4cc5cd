#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parikhseq {

/// Raised for malformed words, patterns and expressions.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symbols are single characters drawn from [a-zA-Z0-9].
bool is_symbol(char c) noexcept;

/// An ordered alphabet a_1 < a_2 < ... < a_k.
class Alphabet {
 public:
  /// Throws ParseError on an empty list, a duplicate or a non-symbol.
  explicit Alphabet(std::string_view symbols);

  /// Distinct letters of `text` in order of first appearance.
  static Alphabet of(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool contains(char c) const noexcept;
  /// 1-based order index, or nullopt when absent.
  std::optional<std::size_t> rank(char c) const noexcept;
  char operator[](std::size_t i) const { return symbols_.at(i); }
  std::string_view symbols() const noexcept { return symbols_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

/// A finite word. Storage is 0-based; the 1-based helpers mirror the
/// position convention used by the counting contracts.
class Word {
 public:
  Word() = default;
  /// Throws ParseError if any character is not a symbol.
  explicit Word(std::string letters);

  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::string_view view() const noexcept { return letters_; }
  const std::string& str() const noexcept { return letters_; }
  char operator[](std::size_t i) const { return letters_[i]; }
  /// w[i], 1-based.
  char at(std::size_t pos) const { return letters_.at(pos - 1); }

  Word operator+(const Word& rhs) const { return Word(letters_ + rhs.letters_, Trusted{}); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  struct Trusted {};
  Word(std::string letters, Trusted) : letters_(std::move(letters)) {}

  std::string letters_;
};

Word parse_word(std::string_view text);
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// A generalized subsequence q_1 . q_2 . ... . q_x of nonempty factors.
///
/// Positions run over the flat word q_1 q_2 ... q_x (length L). The boundary
/// set B holds the cumulative lengths l_m = |q_1...q_m| for 1 <= m < x, so a
/// position p in B means a gap may open between flat positions p and p + 1.
class GenSeq {
 public:
  explicit GenSeq(std::vector<std::string> factors);

  std::size_t factor_count() const noexcept { return factors_.size(); }
  const std::vector<std::string>& factors() const noexcept { return factors_; }
  const std::string& factor(std::size_t index) const { return factors_.at(index); }
  /// L = sum of |q_i|.
  std::size_t flat_length() const noexcept { return flat_.size(); }
  const std::string& flat() const noexcept { return flat_; }
  /// l_0 = 0, l_1, ..., l_x = L.
  const std::vector<std::size_t>& cumulative() const noexcept { return cumulative_; }
  /// B = {l_1, ..., l_{x-1}}, ascending.
  std::vector<std::size_t> boundaries() const;
  bool is_boundary(std::size_t pos) const noexcept;

  /// Canonical text form, factors joined by '.'.
  std::string render() const;

  friend bool operator==(const GenSeq& a, const GenSeq& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<std::string> factors_;
  std::string flat_;
  std::vector<std::size_t> cumulative_;
};

/// Accepts `factor ('.' factor)*`; the UTF-8 bullet is an alias for '.'.
GenSeq parse_genseq(std::string_view text);

/// A fragment Q[i..j] split at the boundaries strictly inside it, with
/// optional anchoring to the start and/or end of the containing word.
struct Piece {
  std::vector<std::string> parts;
  bool left_anchor = false;
  bool right_anchor = false;

  bool empty() const noexcept { return parts.empty(); }
  std::size_t flat_length() const noexcept;
  /// Text form: parts joined by '.', '^' marks a left anchor, '$' a right one.
  std::string render() const;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Q[i..j] with 1-based flat positions; i > j yields the empty piece.
/// Throws std::out_of_range when a nonempty range leaves [1, L].
Piece make_piece(const GenSeq& q, std::size_t i, std::size_t j, bool left_anchor, bool right_anchor);

}  // namespace parikhseq
