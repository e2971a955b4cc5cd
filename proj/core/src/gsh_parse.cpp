#include <cctype>

#include "parikhseq/gsh.hpp"

namespace parikhseq {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GshExpr parse() {
    GshExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("GSH parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool at_bullet(std::size_t p) const { return s_.substr(p, 3) == "\xE2\x80\xA2"; }

  bool starts_atom(std::size_t p) const {
    if (p >= s_.size()) return false;
    const char c = s_[p];
    return is_symbol(c) || c == '(' || c == '#' || c == '-';
  }

  GshExpr expr() {
    GshExpr e;
    if (peek() == '-') {
      ++pos_;
      e = GshExpr::negate(term());
    } else {
      e = term();
    }
    while (true) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        e = GshExpr::sum(e, term());
      } else if (c == '-') {
        ++pos_;
        e = GshExpr::sum(e, GshExpr::negate(term()));
      } else {
        return e;
      }
    }
  }

  GshExpr term() {
    GshExpr e = atom();
    while (peek() == '*') {
      ++pos_;
      e = GshExpr::product(e, atom());
    }
    return e;
  }

  GshExpr atom() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      GshExpr e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '-') {
      ++pos_;
      return GshExpr::negate(atom());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      if (end < s_.size()) {
        std::size_t next = end;
        while (next < s_.size() && std::isspace(static_cast<unsigned char>(s_[next]))) ++next;
        const bool coefficient = s_[end] == '(' || (next > end && starts_atom(next) && s_[next] != '-');
        if (coefficient) {
          BigInt k(std::string(s_.substr(pos_, end - pos_)));
          pos_ = end;
          return GshExpr::scale(std::move(k), atom());
        }
      }
    }
    return GshExpr::leaf(monomial());
  }

  Monomial monomial() {
    const std::size_t start = pos_;
    if (s_.substr(pos_, 2) == "#e") {
      pos_ += 2;
      if (pos_ < s_.size() && (is_symbol(s_[pos_]) || s_[pos_] == '.')) fail("'#e' cannot be combined with symbols");
      return Monomial();
    }
    while (pos_ < s_.size()) {
      if (is_symbol(s_[pos_]) || s_[pos_] == '.') {
        ++pos_;
      } else if (at_bullet(pos_)) {
        pos_ += 3;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a monomial");
    return parse_monomial(s_.substr(start, pos_ - start));
  }
};

}  // namespace

GshExpr parse_gsh(std::string_view text) { return Parser(text).parse(); }

}  // namespace parikhseq
