#include "parikhseq/exact_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace parikhseq {

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : ExactMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("matrix rows must form a square");
    std::size_t c = 0;
    for (long long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

ExactMatrix::ExactMatrix(const std::vector<std::vector<BigInt>>& rows) : ExactMatrix(rows.size()) {
  for (std::size_t r = 0; r < dim_; ++r) {
    if (rows[r].size() != dim_) throw std::invalid_argument("matrix rows must form a square");
    for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) = rows[r][c];
  }
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if ((*this)(r, c) != 0) return false;
  return true;
}

bool ExactMatrix::is_unit_upper_triangular() const {
  if (!is_upper_triangular()) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    if ((*this)(i, i) != 1) return false;
  return true;
}

ExactMatrix ExactMatrix::block(std::size_t row, std::size_t col, std::size_t size) const {
  if (row + size > dim_ || col + size > dim_) throw std::out_of_range("block outside matrix");
  ExactMatrix out(size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) out(r, c) = (*this)(row + r, col + c);
  return out;
}

std::vector<std::vector<BigInt>> ExactMatrix::rows() const {
  std::vector<std::vector<BigInt>> out(dim_, std::vector<BigInt>(dim_));
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
  const std::size_t n = a.dim();
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ExactMatrix minor(const ExactMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs as many rows as columns");
  if (rows.empty()) throw std::invalid_argument("minor needs at least one row");
  auto sorted = [&](std::span<const std::size_t> idx) {
    std::vector<std::size_t> v(idx.begin(), idx.end());
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw std::invalid_argument("repeated index in minor");
    for (std::size_t i : v) {
      if (i < 1 || i > a.dim()) throw std::out_of_range("minor index " + std::to_string(i) + " outside matrix");
    }
    return v;
  };
  const auto r = sorted(rows);
  const auto c = sorted(cols);
  ExactMatrix out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out(i, j) = a(r[i] - 1, c[j] - 1);
  return out;
}

BigInt determinant(const ExactMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return 1;
  ExactMatrix m = a;
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = value / previous;  // exact by Sylvester's identity
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

SparseMatrix::SparseMatrix(const ExactMatrix& dense) : columns_(dense.dim()) {
  for (std::size_t c = 0; c < dense.dim(); ++c)
    for (std::size_t r = 0; r < dense.dim(); ++r)
      if (dense(r, c) != 0) columns_[c].push_back({r, dense(r, c)});
}

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

void multiply_into(const ExactMatrix& acc, const SparseMatrix& g, ExactMatrix& out) {
  if (acc.dim() != g.dim()) throw std::invalid_argument("dimension mismatch in sparse product");
  const std::size_t n = acc.dim();
  if (out.dim() != n) out = ExactMatrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& column = g.column(c);
    for (std::size_t r = 0; r < n; ++r) {
      BigInt& cell = out(r, c);
      cell = 0;
      for (const auto& e : column) {
        const BigInt& x = acc(r, e.row);
        if (x == 0) continue;
        if (e.value == 1) {
          cell += x;
        } else {
          cell += x * e.value;
        }
      }
    }
  }
}

nlohmann::json to_json(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"rows", std::move(rows)}};
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rows")) {
    throw std::invalid_argument("matrix JSON needs \"dim\" and \"rows\"");
  }
  const auto dim = j.at("dim").get<std::size_t>();
  const auto& rows = j.at("rows");
  if (!rows.is_array() || rows.size() != dim) throw std::invalid_argument("matrix JSON row count differs from dim");
  ExactMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != dim) throw std::invalid_argument("matrix JSON row length differs from dim");
    for (std::size_t c = 0; c < dim; ++c) {
      if (!row[c].is_string()) throw std::invalid_argument("matrix JSON entries must be decimal strings");
      try {
        m(r, c) = BigInt(row[c].get<std::string>());
      } catch (const std::exception&) {
        throw std::invalid_argument("not a decimal integer: " + row[c].get<std::string>());
      }
    }
  }
  return m;
}

std::string to_text(const ExactMatrix& m) {
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) width = std::max(width, m(r, c).str().size());
  std::ostringstream out;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const std::string s = m(r, c).str();
      if (c) out << ' ';
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace parikhseq
