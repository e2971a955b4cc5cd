#include "parikhseq/word.hpp"

#include <algorithm>

namespace parikhseq {

namespace {

constexpr std::string_view kBullet = "\xE2\x80\xA2";

std::string normalize_bullets(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kBullet.size()) == kBullet) {
      out.push_back('.');
      i += kBullet.size();
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

void require_symbols(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_symbol(text[i])) {
      throw ParseError("invalid symbol '" + std::string(1, text[i]) + "' at offset " + std::to_string(i));
    }
  }
}

}  // namespace

bool is_symbol(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw ParseError("empty alphabet");
  require_symbols(symbols_);
  std::string sorted = symbols_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError("duplicate symbol in alphabet '" + symbols_ + "'");
  }
}

Alphabet Alphabet::of(std::string_view text) {
  std::string seen;
  for (char c : text) {
    if (seen.find(c) == std::string::npos) seen.push_back(c);
  }
  return Alphabet(seen);
}

bool Alphabet::contains(char c) const noexcept { return symbols_.find(c) != std::string::npos; }

std::optional<std::size_t> Alphabet::rank(char c) const noexcept {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return pos + 1;
}

Word::Word(std::string letters) : letters_(std::move(letters)) { require_symbols(letters_); }

Word parse_word(std::string_view text) { return Word(std::string(text)); }

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word w = parse_word(text);
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (!alphabet.contains(w[i])) {
      throw ParseError("symbol '" + std::string(1, w[i]) + "' is not in alphabet '" +
                       std::string(alphabet.symbols()) + "'");
    }
  }
  return w;
}

GenSeq::GenSeq(std::vector<std::string> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ParseError("pattern needs at least one factor");
  cumulative_.push_back(0);
  for (const auto& f : factors_) {
    if (f.empty()) throw ParseError("pattern factors must be nonempty");
    require_symbols(f);
    flat_ += f;
    cumulative_.push_back(flat_.size());
  }
}

std::vector<std::size_t> GenSeq::boundaries() const {
  return {cumulative_.begin() + 1, cumulative_.end() - 1};
}

bool GenSeq::is_boundary(std::size_t pos) const noexcept {
  if (factors_.size() < 2) return false;
  return std::binary_search(cumulative_.begin() + 1, cumulative_.end() - 1, pos);
}

std::string GenSeq::render() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out.push_back('.');
    out += factors_[i];
  }
  return out;
}

GenSeq parse_genseq(std::string_view text) {
  const std::string normalized = normalize_bullets(text);
  if (normalized.empty()) throw ParseError("empty pattern");
  std::vector<std::string> factors;
  std::string current;
  for (char c : normalized) {
    if (c == '.') {
      if (current.empty()) throw ParseError("empty factor in pattern '" + std::string(text) + "'");
      factors.push_back(std::move(current));
      current.clear();
    } else if (is_symbol(c)) {
      current.push_back(c);
    } else {
      throw ParseError("invalid character '" + std::string(1, c) + "' in pattern");
    }
  }
  if (current.empty()) throw ParseError("empty factor in pattern '" + std::string(text) + "'");
  factors.push_back(std::move(current));
  return GenSeq(std::move(factors));
}

std::size_t Piece::flat_length() const noexcept {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  return n;
}

std::string Piece::render() const {
  std::string out;
  if (left_anchor) out.push_back('^');
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back('.');
    out += parts[i];
  }
  if (parts.empty()) out += "#e";
  if (right_anchor) out.push_back('$');
  return out;
}

Piece make_piece(const GenSeq& q, std::size_t i, std::size_t j, bool left_anchor, bool right_anchor) {
  Piece piece;
  piece.left_anchor = left_anchor;
  piece.right_anchor = right_anchor;
  if (i > j) return piece;
  if (i < 1 || j > q.flat_length()) {
    throw std::out_of_range("piece [" + std::to_string(i) + ", " + std::to_string(j) +
                            "] outside pattern of length " + std::to_string(q.flat_length()));
  }
  std::string run;
  for (std::size_t pos = i; pos <= j; ++pos) {
    run.push_back(q.flat()[pos - 1]);
    if (pos < j && q.is_boundary(pos)) {
      piece.parts.push_back(std::move(run));
      run.clear();
    }
  }
  piece.parts.push_back(std::move(run));
  return piece;
}

}  // namespace parikhseq
