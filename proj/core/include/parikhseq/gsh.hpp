#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "parikhseq/bigint.hpp"
#include "parikhseq/word.hpp"

namespace parikhseq {

// ---------------------------------------------------------------------------
// Generalized subword histories
//
// A monomial p_1 . ... . p_n takes the value |w|_{p_1...p_n} in a word w;
// the empty monomial takes the value 1. Histories are closed under negation,
// sum and product. Every history is equivalent to a linear one (no products),
// and linear histories are compared through a canonical coefficient map.
// ---------------------------------------------------------------------------

class Monomial {
 public:
  /// The empty monomial.
  Monomial() = default;
  /// Empty factors are dropped.
  explicit Monomial(std::vector<std::string> factors);
  explicit Monomial(const GenSeq& q) : factors_(q.factors()) {}

  bool is_epsilon() const noexcept { return factors_.empty(); }
  std::size_t size() const noexcept { return factors_.size(); }
  const std::vector<std::string>& factors() const noexcept { return factors_; }
  const std::string& operator[](std::size_t i) const { return factors_[i]; }
  std::size_t flat_length() const noexcept;

  /// Concatenation of factor lists.
  Monomial then(const Monomial& rhs) const;
  /// Factors [first, last).
  Monomial slice(std::size_t first, std::size_t last) const;

  /// "ab.c"; "#e" for the empty monomial.
  std::string render() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::string> factors_;
};

/// Throws ParseError; accepts the pattern grammar or "#e".
Monomial parse_monomial(std::string_view text);

BigInt evaluate(const Monomial& m, std::string_view w);

/// Finite integer combination of monomials; zero coefficients never stored.
class LinearGsh {
 public:
  using Terms = std::map<Monomial, BigInt>;

  LinearGsh() = default;
  static LinearGsh of(Monomial m, BigInt coeff = 1);

  void add(const Monomial& m, const BigInt& coeff);
  LinearGsh& operator+=(const LinearGsh& rhs);
  LinearGsh& operator-=(const LinearGsh& rhs);
  LinearGsh& operator*=(const BigInt& k);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  BigInt coeff(const Monomial& m) const;

  /// Term-wise concatenation: (sum a_i P_i) . (sum b_j Q_j) = sum a_i b_j P_i.Q_j.
  LinearGsh then(const LinearGsh& rhs) const;

  BigInt evaluate(std::string_view w) const;

  /// "2 a.a + a"; "0" for the zero history. Terms in canonical order.
  /// Nonzero histories render to text that parse_gsh reads back.
  std::string render() const;

  friend bool operator==(const LinearGsh&, const LinearGsh&) = default;
  friend LinearGsh operator+(LinearGsh a, const LinearGsh& b) { return a += b; }
  friend LinearGsh operator-(LinearGsh a, const LinearGsh& b) { return a -= b; }

 private:
  Terms terms_;
};

/// [{"monomial": "ab.c", "coeff": "2"}, ...] in canonical order.
nlohmann::json to_json(const LinearGsh& g);
LinearGsh linear_from_json(const nlohmann::json& j);

/// Immutable expression tree over monomials with -, +, *, and integer scaling.
class GshExpr {
 public:
  enum class Kind { Leaf, Scale, Negate, Sum, Product };

  GshExpr();  // the empty monomial
  static GshExpr leaf(Monomial m);
  static GshExpr scale(BigInt k, GshExpr e);
  static GshExpr negate(GshExpr e);
  static GshExpr sum(GshExpr a, GshExpr b);
  static GshExpr product(GshExpr a, GshExpr b);

  Kind kind() const noexcept;
  const Monomial& monomial() const;  // Leaf
  const BigInt& factor() const;      // Scale
  const GshExpr& lhs() const;        // Scale, Negate: the operand
  const GshExpr& rhs() const;        // Sum, Product

  std::string render() const;

  friend GshExpr operator+(GshExpr a, GshExpr b) { return sum(std::move(a), std::move(b)); }
  friend GshExpr operator-(GshExpr a, GshExpr b) { return sum(std::move(a), negate(std::move(b))); }
  friend GshExpr operator-(GshExpr a) { return negate(std::move(a)); }
  friend GshExpr operator*(GshExpr a, GshExpr b) { return product(std::move(a), std::move(b)); }

 private:
  struct Node;
  explicit GshExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A linear history as an expression (a sum of scaled leaves).
GshExpr to_expr(const LinearGsh& g);

/// Grammar:
///   expr := ['-'] term (('+' | '-') term)*
///   term := atom ('*' atom)*
///   atom := monomial | '(' expr ')' | integer atom | '-' atom
/// A digit run followed by whitespace or '(' is a coefficient; otherwise
/// digits are symbols. Throws ParseError.
GshExpr parse_gsh(std::string_view text);

BigInt evaluate(const GshExpr& e, std::string_view w);
inline BigInt evaluate(const GshExpr& e, const Word& w) { return evaluate(e, w.view()); }

// ---------------------------------------------------------------------------
// Shuffles, reductions and linearization
// ---------------------------------------------------------------------------

/// All order-preserving interleavings of the factor lists, with
/// multiplicity: binomial(|P| + |Q|, |P|) monomials.
std::vector<Monomial> ground_shuffle(const Monomial& p, const Monomial& q);

/// Start positions (1-based) of each factor of a monomial occurrence.
using Placement = std::vector<std::size_t>;

/// Each consecutive factor pair of u is bridged by one factor of v that
/// overlaps both, and vice versa. Vacuously true for one-factor monomials.
bool is_interleaved(const Monomial& u, const Placement& alpha, const Monomial& v, const Placement& beta);

/// Joint placement of u and v that red() counts.
struct JointPlacement {
  Placement u;
  Placement v;
  std::string word;
};

/// All placements of u and v on the line 1..n with consistent letters,
/// interleaved, covering every position, starting at 1 and shorter than
/// |u| + |v| (flat lengths). Sorted by word, then by placements.
std::vector<JointPlacement> joint_placements(const Monomial& u, const Monomial& v);

/// red(u . v'): sum over the induced words v_d of (#placements) * v_d.
/// Zero when no placement exists.
LinearGsh reduce_pair(const Monomial& u, const Monomial& v);

enum class ProductRule {
  /// Junctions between arbitrary adjacent runs of the two factor lists; exact.
  MergeSchemes,
  /// Junctions only where a run of P is followed by a run of Q in a shuffle
  /// term. Undercounts in general; kept for comparison.
  LiteralRuns,
};

LinearGsh linearize_product(const Monomial& p, const Monomial& q, ProductRule rule = ProductRule::MergeSchemes);

LinearGsh linearize(const GshExpr& e, ProductRule rule = ProductRule::MergeSchemes);

/// Identity of canonical linear forms.
bool equivalent(const GshExpr& a, const GshExpr& b);

struct BoundedVerdict {
  bool equal = true;
  std::size_t words_checked = 0;
  std::optional<std::string> counterexample;
  BigInt lhs;  // values at the counterexample
  BigInt rhs;
};

/// Evaluates both sides on every word of length <= max_len, shortest first,
/// then in alphabet order; stops at the first difference.
BoundedVerdict equivalent_bounded(const GshExpr& a, const GshExpr& b, const Alphabet& alphabet, std::size_t max_len);

/// Calls visit(word) for every word of length <= max_len over the alphabet,
/// shortest first. Stops early when visit returns false.
template <typename F>
void for_each_word(const Alphabet& alphabet, std::size_t max_len, F&& visit) {
  std::string w;
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    w.assign(len, alphabet[0]);
    while (true) {
      if (!visit(std::string_view(w))) return;
      std::size_t pos = len;
      while (pos > 0 && digits[pos - 1] + 1 == alphabet.size()) {
        digits[pos - 1] = 0;
        w[pos - 1] = alphabet[0];
        --pos;
      }
      if (pos == 0) break;
      ++digits[pos - 1];
      w[pos - 1] = alphabet[digits[pos - 1]];
    }
  }
}

}  // namespace parikhseq
