#include "parikhseq/parikh_matrix.hpp"

#include <array>
#include <optional>

#include "parikhseq/count.hpp"

namespace parikhseq {

namespace {

void require_letters(const ParikhContext& ctx, const Word& w) {
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (!ctx.alphabet().contains(w[i])) {
      throw ParseError("symbol '" + std::string(1, w[i]) + "' is not in alphabet '" +
                       std::string(ctx.alphabet().symbols()) + "'");
    }
  }
}

}  // namespace

ParikhContext::ParikhContext(Word inducing, Alphabet alphabet)
    : inducing_(std::move(inducing)), alphabet_(std::move(alphabet)) {
  if (inducing_.empty()) throw ParseError("inducing word must be nonempty");
  for (std::size_t i = 0; i < inducing_.length(); ++i) {
    if (!alphabet_.contains(inducing_[i])) {
      throw ParseError("inducing word uses '" + std::string(1, inducing_[i]) + "' outside the alphabet");
    }
  }
}

ParikhContext ParikhContext::classic(const Alphabet& alphabet) {
  return ParikhContext(Word(std::string(alphabet.symbols())), alphabet);
}

ParikhContext ParikhContext::induced(const Word& inducing) {
  if (inducing.empty()) throw ParseError("inducing word must be nonempty");
  return ParikhContext(inducing, Alphabet::of(inducing.view()));
}

ParikhContext ParikhContext::induced(const Word& inducing, const Alphabet& alphabet) {
  return ParikhContext(inducing, alphabet);
}

bool ParikhContext::is_classic() const noexcept { return inducing_.view() == alphabet_.symbols(); }

ExactMatrix letter_matrix(const ParikhContext& ctx, char a) {
  if (!ctx.alphabet().contains(a)) {
    throw ParseError("symbol '" + std::string(1, a) + "' is not in alphabet '" +
                     std::string(ctx.alphabet().symbols()) + "'");
  }
  ExactMatrix m = ExactMatrix::identity(ctx.dim());
  for (std::size_t q = 0; q < ctx.inducing().length(); ++q) {
    if (ctx.inducing()[q] == a) m(q, q + 1) = 1;
  }
  return m;
}

ExactMatrix parikh_matrix(const ParikhContext& ctx, const Word& w) {
  require_letters(ctx, w);
  std::array<std::optional<SparseMatrix>, 128> generators;
  ExactMatrix acc = ExactMatrix::identity(ctx.dim());
  ExactMatrix scratch(ctx.dim());
  for (char c : w.view()) {
    auto& g = generators[static_cast<unsigned char>(c)];
    if (!g) g.emplace(letter_matrix(ctx, c));
    multiply_into(acc, *g, scratch);
    std::swap(acc, scratch);
  }
  return acc;
}

ExactMatrix parikh_matrix_direct(const ParikhContext& ctx, const Word& w) {
  require_letters(ctx, w);
  const auto v = ctx.inducing().view();
  ExactMatrix m = ExactMatrix::identity(ctx.dim());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) {
      m(i, j + 1) = count_subword(w.view(), v.substr(i, j - i + 1));
    }
  }
  return m;
}

bool amiable(const ParikhContext& ctx, const Word& u, const Word& v) {
  return parikh_matrix(ctx, u) == parikh_matrix(ctx, v);
}

}  // namespace parikhseq
