#include "parikhseq/minors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "parikhseq/count.hpp"

namespace parikhseq {

namespace {

std::vector<std::size_t> occurrences(std::string_view w, std::string_view u) {
  std::vector<std::size_t> out;
  for (auto pos = w.find(u); pos != std::string_view::npos; pos = w.find(u, pos + 1)) out.push_back(pos);
  return out;
}

bool overlaps(std::size_t a, std::size_t len_a, std::size_t b, std::size_t len_b) {
  return a < b + len_b && b < a + len_a;
}

// Position in `word` of the n-th (1-based) copy of `letter`.
std::size_t nth_position(const std::vector<std::size_t>& word, std::size_t letter, std::size_t n) {
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p] == letter && --n == 0) return p;
  }
  throw std::logic_error("witness construction lost track of an occurrence");
}

// Visits every k-subset of {1..n} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{1});
  while (true) {
    visit(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

SpecialMinor special_minor(const GenSeq& q, const Word& w) {
  const std::size_t x = q.factor_count();
  ExactMatrix m = ExactMatrix::identity(x + 1);
  const auto& factors = q.factors();
  for (std::size_t i = 0; i < x; ++i) {
    for (std::size_t j = i + 1; j <= x; ++j) {
      std::vector<std::string> run(factors.begin() + static_cast<std::ptrdiff_t>(i),
                                   factors.begin() + static_cast<std::ptrdiff_t>(j));
      m(i, j) = count_runs(w.view(), run, false, false);
    }
  }
  return {q, std::move(m)};
}

std::vector<std::size_t> special_minor_indices(const GenSeq& q) {
  if (q.flat_length() < 2) throw std::invalid_argument("special minor extraction needs |Q| >= 2");
  const std::size_t n = q.flat_length() - 1;
  std::vector<std::size_t> idx{1};
  for (std::size_t l : q.boundaries()) idx.push_back(n + l);
  idx.push_back(3 * n);
  return idx;
}

ExactMatrix extract_special_minor(const SeqMatrix& m) {
  const auto idx = special_minor_indices(m.pattern);
  return minor(m.matrix, idx, idx);
}

std::vector<std::size_t> factor_order(const GenSeq& q) {
  const auto& f = q.factors();
  const std::size_t x = f.size();
  // before(i, j): q_i must precede q_j.
  auto before = [&](std::size_t i, std::size_t j) {
    if (i == j || !f[j].starts_with(f[i])) return false;
    return f[i] != f[j] || i < j;
  };
  std::vector<std::size_t> order;
  std::vector<bool> placed(x, false);
  while (order.size() < x) {
    for (std::size_t cand = 0; cand < x; ++cand) {
      if (placed[cand]) continue;
      bool ready = true;
      for (std::size_t p = 0; p < x && ready; ++p) {
        if (!placed[p] && before(p, cand)) ready = false;
      }
      if (ready) {
        placed[cand] = true;
        order.push_back(cand);
        break;
      }
    }
  }
  return order;
}

std::string WitnessWord::render() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (symbol_count > 9 && i) out.push_back(',');
    out += "a" + std::to_string(letters[i]);
  }
  return out;
}

ExactMatrix WitnessWord::parikh_matrix() const {
  // a_k is the k-th symbol; index k - 1 into a dense stand-in alphabet.
  ExactMatrix acc = ExactMatrix::identity(symbol_count + 1);
  ExactMatrix scratch(symbol_count + 1);
  std::vector<SparseMatrix> generators;
  for (std::size_t k = 0; k < symbol_count; ++k) {
    ExactMatrix g = ExactMatrix::identity(symbol_count + 1);
    g(k, k + 1) = 1;
    generators.emplace_back(g);
  }
  for (std::size_t letter : letters) {
    multiply_into(acc, generators.at(letter - 1), scratch);
    std::swap(acc, scratch);
  }
  return acc;
}

WitnessWord witness_word_exchange(const GenSeq& q, const Word& w, WitnessTrace* trace) {
  const std::size_t x = q.factor_count();
  const auto order = factor_order(q);
  std::vector<std::size_t> rank(x);
  for (std::size_t r = 0; r < x; ++r) rank[order[r]] = r;

  std::vector<std::vector<std::size_t>> occ(x);
  for (std::size_t k = 0; k < x; ++k) occ[k] = occurrences(w.view(), q.factor(k));

  WitnessWord out;
  out.symbol_count = x;
  auto& word = out.letters;
  for (std::size_t p = 0; p < w.length(); ++p) {
    std::vector<std::size_t> here;
    for (std::size_t k = 0; k < x; ++k) {
      if (std::binary_search(occ[k].begin(), occ[k].end(), p)) here.push_back(k);
    }
    std::sort(here.begin(), here.end(), [&](std::size_t a, std::size_t b) { return rank[a] > rank[b]; });
    for (std::size_t k : here) word.push_back(k + 1);
  }
  if (trace) trace->initial = word;

  const std::size_t bound = std::max<std::size_t>(1, word.size() * word.size()) + 1;
  std::size_t sweeps = 0;
  std::size_t exchanges = 0;
  bool changed = true;
  while (changed) {
    if (++sweeps > bound) throw std::logic_error("witness exchange phase did not reach a fixpoint");
    changed = false;
    for (std::size_t l = x; l >= 2; --l) {
      const auto& hi = occ[l - 1];
      const auto& lo = occ[l - 2];
      const std::size_t hi_len = q.factor(l - 1).size();
      const std::size_t lo_len = q.factor(l - 2).size();
      for (std::size_t i = hi.size(); i >= 1; --i) {
        for (std::size_t j = lo.size(); j >= 1; --j) {
          if (!overlaps(hi[i - 1], hi_len, lo[j - 1], lo_len)) continue;
          const std::size_t ip = nth_position(word, l, i);
          const std::size_t jp = nth_position(word, l - 1, j);
          if (jp < ip) {
            std::swap(word[ip], word[jp]);
            ++exchanges;
            changed = true;
          }
        }
      }
    }
  }
  if (trace) {
    trace->sweeps = sweeps;
    trace->exchanges = exchanges;
  }
  return out;
}

namespace {

// For each occurrence of q_{i+1} (in order), how many q_i occurrences end before it starts.
std::vector<std::size_t> preceding_counts(const std::vector<std::size_t>& lo, std::size_t lo_len,
                                          const std::vector<std::size_t>& hi) {
  std::vector<std::size_t> out;
  std::size_t c = 0;
  for (std::size_t start : hi) {
    while (c < lo.size() && lo[c] + lo_len <= start) ++c;
    out.push_back(c);
  }
  return out;
}

}  // namespace

WitnessWord witness_word_merge(const GenSeq& q, const Word& w) {
  const std::size_t x = q.factor_count();
  WitnessWord out;
  out.symbol_count = x;
  auto prev = occurrences(w.view(), q.factor(0));
  out.letters.assign(prev.size(), 1);
  for (std::size_t i = 1; i < x; ++i) {
    auto cur = occurrences(w.view(), q.factor(i));
    const auto counts = preceding_counts(prev, q.factor(i - 1).size(), cur);
    std::vector<std::size_t> merged;
    std::size_t seen = 0;  // a_i copies passed so far
    std::size_t k = 0;
    for (std::size_t letter : out.letters) {
      if (letter == i) {
        while (k < counts.size() && counts[k] == seen) {
          merged.push_back(i + 1);
          ++k;
        }
        ++seen;
      }
      merged.push_back(letter);
    }
    for (; k < counts.size(); ++k) merged.push_back(i + 1);
    out.letters = std::move(merged);
    prev = std::move(cur);
  }
  return out;
}

bool witness_conditions_hold(const GenSeq& q, const Word& w, const WitnessWord& witness) {
  const std::size_t x = q.factor_count();
  if (witness.symbol_count != x) return false;
  std::vector<std::vector<std::size_t>> occ(x);
  for (std::size_t k = 0; k < x; ++k) occ[k] = occurrences(w.view(), q.factor(k));
  for (std::size_t k = 0; k < x; ++k) {
    if (static_cast<std::size_t>(std::count(witness.letters.begin(), witness.letters.end(), k + 1)) != occ[k].size())
      return false;
  }
  for (std::size_t i = 1; i < x; ++i) {
    const auto expected = preceding_counts(occ[i - 1], q.factor(i - 1).size(), occ[i]);
    std::size_t before = 0;
    std::size_t k = 0;
    for (std::size_t letter : witness.letters) {
      if (letter == i) ++before;
      if (letter == i + 1 && expected[k++] != before) return false;
    }
  }
  return true;
}

WitnessWord witness_word(const GenSeq& q, const Word& w, WitnessTrace* trace) {
  WitnessWord out = witness_word_exchange(q, w, trace);
  if (witness_conditions_hold(q, w, out)) return out;
  if (trace) trace->repaired = true;
  return witness_word_merge(q, w);
}

MinorReport check_minor_nonneg(const ExactMatrix& m, std::size_t max_order) {
  MinorReport report;
  report.max_order = std::min(max_order, m.dim());
  for (std::size_t k = 1; k <= report.max_order; ++k) {
    for_each_subset(m.dim(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.dim(), k, [&](const std::vector<std::size_t>& cols) {
        ++report.checked;
        BigInt det = determinant(minor(m, rows, cols));
        if (det < 0) report.negative.push_back({rows, cols, std::move(det)});
      });
    });
  }
  return report;
}

}  // namespace parikhseq
