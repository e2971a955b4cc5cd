#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "parikhseq/word.hpp"

namespace parikhseq::cli {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed of iteration i, independent of how iterations are scheduled.
inline std::uint64_t case_seed(std::uint64_t master, std::uint64_t i) { return splitmix64(splitmix64(master) ^ i); }

/// Draws use plain modulo reduction so case sequences match across
/// standard libraries.
class CaseRng {
 public:
  explicit CaseRng(std::uint64_t seed) : gen_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  std::string alphabet(std::size_t max_size) { return std::string("abc").substr(0, between(1, max_size)); }

  std::string word(std::string_view alphabet, std::size_t length) {
    std::string w(length, ' ');
    for (char& c : w) c = alphabet[below(alphabet.size())];
    return w;
  }
  std::string word_up_to(std::string_view alphabet, std::size_t max_len) { return word(alphabet, between(0, max_len)); }

  std::vector<std::string> factors(std::string_view alphabet, std::size_t max_factors, std::size_t max_len) {
    std::vector<std::string> f(between(1, max_factors));
    for (auto& q : f) q = word(alphabet, between(1, max_len));
    return f;
  }

  /// Pattern with x <= max_factors, |q_i| <= max_len and flat length >= min_flat.
  GenSeq pattern(std::string_view alphabet, std::size_t max_factors, std::size_t max_len, std::size_t min_flat) {
    while (true) {
      GenSeq q(factors(alphabet, max_factors, max_len));
      if (q.flat_length() >= min_flat) return q;
    }
  }

 private:
  std::mt19937_64 gen_;
};

/// Greedy single-letter deletion while `fails` keeps returning true.
template <typename Pred>
std::string shrink_word(std::string w, Pred&& fails) {
  for (std::size_t i = 0; i < w.size();) {
    std::string shorter = w;
    shorter.erase(i, 1);
    if (fails(shorter)) {
      w = std::move(shorter);
    } else {
      ++i;
    }
  }
  return w;
}

}  // namespace parikhseq::cli
