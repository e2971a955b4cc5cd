#include "parikhseq/sequence_matrix.hpp"

#include <stdexcept>

#include "parikhseq/count.hpp"

namespace parikhseq {

namespace {

std::size_t checked_block_size(const GenSeq& q) {
  if (q.flat_length() < 2) {
    throw std::invalid_argument("sequence matrix undefined for pattern '" + q.render() + "': needs |Q| >= 2");
  }
  return q.flat_length() - 1;
}

// Top-left corner of a block, 0-based.
std::pair<std::size_t, std::size_t> origin(Block b, std::size_t size) {
  switch (b) {
    case Block::E: return {0, size};
    case Block::F: return {0, 2 * size};
    case Block::C: return {size, size};
    case Block::S: return {size, 2 * size};
  }
  return {0, 0};
}

constexpr std::array<Block, 4> kBlocks = {Block::E, Block::F, Block::C, Block::S};

}  // namespace

char block_name(Block b) noexcept {
  switch (b) {
    case Block::E: return 'E';
    case Block::F: return 'F';
    case Block::C: return 'C';
    case Block::S: return 'S';
  }
  return '?';
}

EntrySpec::EntrySpec(GenSeq q) : q_(std::move(q)), block_(checked_block_size(q_)), cells_(dim() * dim()) {
  const std::size_t n = block_;
  for (std::size_t k = 0; k < n; ++k) {
    at(k, k) = Cell::one();
    at(2 * n + k, 2 * n + k) = Cell::one();
  }
  auto place = [&](Block b, std::size_t i, std::size_t j, Cell cell) {
    auto [r, c] = locate(b, i, j);
    at(r, c) = std::move(cell);
  };
  for (std::size_t i = 1; i <= n; ++i) {
    const bool open_left = !q_.is_boundary(i);
    for (std::size_t j = i; j <= n; ++j) {
      const bool open_right = !q_.is_boundary(j);
      place(Block::F, i, j, Cell::count(make_piece(q_, i, j + 1, false, false)));
      place(Block::E, i, j, Cell::count(make_piece(q_, i, j, false, open_right)));
      place(Block::S, i, j, Cell::count(make_piece(q_, i + 1, j + 1, open_left, false)));
      if (i == j && !open_left) {
        place(Block::C, i, j, Cell::one());
      } else {
        place(Block::C, i, j, Cell::count(make_piece(q_, i + 1, j, open_left, open_right)));
      }
    }
  }
}

const Cell& EntrySpec::block_cell(Block b, std::size_t i, std::size_t j) const {
  auto [r, c] = locate(b, i, j);
  return cell(r, c);
}

std::pair<std::size_t, std::size_t> EntrySpec::locate(Block b, std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > block_ || j > block_) throw std::out_of_range("block coordinate outside [1, L-1]");
  auto [r, c] = origin(b, block_);
  return {r + i - 1, c + j - 1};
}

EntrySpec entry_spec(const GenSeq& q) { return EntrySpec(q); }

BigInt evaluate(const Cell& cell, std::string_view w) {
  switch (cell.kind) {
    case Cell::Kind::Zero: return 0;
    case Cell::Kind::One: return 1;
    case Cell::Kind::Count: return count_piece(w, cell.piece);
  }
  return 0;
}

ExactMatrix SeqMatrix::block(Block b) const {
  const std::size_t n = block_size();
  auto [r, c] = origin(b, n);
  return matrix.block(r, c, n);
}

const BigInt& SeqMatrix::at(Block b, std::size_t i, std::size_t j) const {
  const std::size_t n = block_size();
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("block coordinate outside [1, L-1]");
  auto [r, c] = origin(b, n);
  return matrix(r + i - 1, c + j - 1);
}

SeqMatrix seq_matrix_direct(const EntrySpec& spec, const Word& w) {
  ExactMatrix m(spec.dim());
  for (std::size_t r = 0; r < spec.dim(); ++r)
    for (std::size_t c = r; c < spec.dim(); ++c) m(r, c) = evaluate(spec.cell(r, c), w.view());
  return {spec.pattern(), std::move(m)};
}

SeqMatrix seq_matrix_direct(const GenSeq& q, const Word& w) { return seq_matrix_direct(EntrySpec(q), w); }

ExactMatrix seq_matrix_letter(const EntrySpec& spec, char a) {
  return seq_matrix_direct(spec, Word(std::string(1, a))).matrix;
}

ExactMatrix seq_matrix_letter(const GenSeq& q, char a) { return seq_matrix_letter(EntrySpec(q), a); }

SeqMatrixFolder::SeqMatrixFolder(GenSeq q)
    : spec_(std::move(q)), acc_(ExactMatrix::identity(spec_.dim())), scratch_(spec_.dim()) {}

SeqMatrixFolder::SeqMatrixFolder(GenSeq q, const Alphabet& alphabet) : SeqMatrixFolder(std::move(q)) {
  alphabet_ = alphabet;
  for (char a : alphabet.symbols()) generator(a);
}

const SparseMatrix& SeqMatrixFolder::generator(char a) {
  if (!is_symbol(a)) throw ParseError("invalid symbol '" + std::string(1, a) + "'");
  if (alphabet_ && !alphabet_->contains(a)) {
    throw ParseError("symbol '" + std::string(1, a) + "' is not in alphabet '" + std::string(alphabet_->symbols()) +
                     "'");
  }
  auto& slot = generators_[static_cast<unsigned char>(a)];
  if (!slot) slot.emplace(seq_matrix_letter(spec_, a));
  return *slot;
}

void SeqMatrixFolder::push(char a) {
  multiply_into(acc_, generator(a), scratch_);
  std::swap(acc_, scratch_);
  ++consumed_;
}

void SeqMatrixFolder::push(std::string_view letters) {
  for (char a : letters) push(a);
}

SeqMatrix seq_matrix(const GenSeq& q, const Word& w) {
  SeqMatrixFolder folder(q);
  folder.push(w.view());
  return folder.result();
}

SeqMatrix factor_matrix(const Word& sigma, const Word& w) {
  if (sigma.length() < 2) throw std::invalid_argument("factor matrix needs |sigma| >= 2");
  return seq_matrix(GenSeq({sigma.str()}), w);
}

std::string CellDiff::label() const {
  if (block) return std::string(1, block_name(*block)) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

std::vector<CellDiff> diff_cells(const ExactMatrix& expected, const ExactMatrix& actual) {
  if (expected.dim() != actual.dim()) throw std::invalid_argument("cannot diff matrices of different dimension");
  const std::size_t n = expected.dim() / 3;
  std::vector<CellDiff> out;
  for (std::size_t r = 0; r < expected.dim(); ++r) {
    for (std::size_t c = 0; c < expected.dim(); ++c) {
      if (expected(r, c) == actual(r, c)) continue;
      CellDiff d;
      d.row = r;
      d.col = c;
      d.expected = expected(r, c);
      d.actual = actual(r, c);
      if (n > 0 && expected.dim() == 3 * n) {
        for (Block b : kBlocks) {
          auto [br, bc] = origin(b, n);
          if (r >= br && r < br + n && c >= bc && c < bc + n) {
            d.block = b;
            d.i = r - br + 1;
            d.j = c - bc + 1;
          }
        }
      }
      out.push_back(std::move(d));
    }
  }
  return out;
}

nlohmann::json to_json(const SeqMatrix& m) {
  nlohmann::json j = to_json(m.matrix);
  j["pattern"] = m.pattern.render();
  nlohmann::json blocks = nlohmann::json::object();
  for (Block b : kBlocks) blocks[std::string(1, block_name(b))] = to_json(m.block(b));
  j["blocks"] = std::move(blocks);
  return j;
}

}  // namespace parikhseq
