#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permx/error.hpp"
#include "permx/permutation.hpp"

namespace permx {

/// 1-indexed (row, col); row 1 is the top row.
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// An m x n 0-1 matrix. Stored densely; the desk-scale instances handled here
/// never exceed a few hundred cells.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  BinaryMatrix(std::size_t rows, std::size_t cols, const std::vector<Cell>& ones) : BinaryMatrix(rows, cols) {
    for (const auto& c : ones) {
      if (c.row < 1 || c.row > rows || c.col < 1 || c.col > cols) {
        throw Error(Errc::OutOfRange, "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                          ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
      }
      if (at(c.row, c.col)) {
        throw Error(Errc::MalformedInput,
                    "duplicate cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ")");
      }
      set(c.row, c.col);
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool at(std::size_t r, std::size_t c) const { return data_[(r - 1) * cols_ + (c - 1)] != 0; }
  void set(std::size_t r, std::size_t c, bool v = true) { data_[(r - 1) * cols_ + (c - 1)] = v ? 1 : 0; }

  std::size_t count_ones() const {
    std::size_t n = 0;
    for (auto v : data_) n += v;
    return n;
  }

  /// Row-major list of one-cells.
  std::vector<Cell> ones() const {
    std::vector<Cell> out;
    for (std::size_t r = 1; r <= rows_; ++r)
      for (std::size_t c = 1; c <= cols_; ++c)
        if (at(r, c)) out.push_back({r, c});
    return out;
  }

  std::size_t row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (std::size_t c = 1; c <= cols_; ++c) w += at(r, c) ? 1 : 0;
    return w;
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// k x k matrix with exactly one one per row and per column.
class PermutationMatrix {
 public:
  explicit PermutationMatrix(BinaryMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
      throw Error(Errc::NotPermutationMatrix, "matrix is not square");
    }
    for (std::size_t r = 1; r <= m_.rows(); ++r) {
      if (m_.row_weight(r) != 1) throw Error(Errc::NotPermutationMatrix, "row " + std::to_string(r) + " weight != 1");
    }
    for (std::size_t c = 1; c <= m_.cols(); ++c) {
      std::size_t w = 0;
      for (std::size_t r = 1; r <= m_.rows(); ++r) w += m_.at(r, c) ? 1 : 0;
      if (w != 1) throw Error(Errc::NotPermutationMatrix, "column " + std::to_string(c) + " weight != 1");
    }
  }

  std::size_t size() const noexcept { return m_.rows(); }
  const BinaryMatrix& matrix() const noexcept { return m_; }

  /// Column of the one in row r (both 1-based).
  std::size_t col_of_row(std::size_t r) const {
    for (std::size_t c = 1; c <= m_.cols(); ++c)
      if (m_.at(r, c)) return c;
    return 0;
  }

  friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;

 private:
  BinaryMatrix m_;
};

/// pi(j) is drawn at cell (k + 1 - pi(j), j), so larger values sit higher.
inline PermutationMatrix to_matrix(const Permutation& p) {
  const std::size_t k = p.size();
  BinaryMatrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) m.set(k + 1 - static_cast<std::size_t>(p[j]), j + 1);
  return PermutationMatrix(std::move(m));
}

inline Permutation from_matrix(const PermutationMatrix& pm) {
  const std::size_t k = pm.size();
  std::vector<int> e(k);
  for (std::size_t r = 1; r <= k; ++r) e[pm.col_of_row(r) - 1] = static_cast<int>(k + 1 - r);
  return Permutation(std::move(e));
}

/// Literal k x k diagonal: ones at (i, i).
inline PermutationMatrix identity_matrix(std::size_t k) {
  BinaryMatrix m(k, k);
  for (std::size_t i = 1; i <= k; ++i) m.set(i, i);
  return PermutationMatrix(std::move(m));
}

/// Quarter turn: cell (i, j) of an m x n matrix goes to (j, m + 1 - i).
inline BinaryMatrix rotate90(const BinaryMatrix& a) {
  BinaryMatrix out(a.cols(), a.rows());
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j)
      if (a.at(i, j)) out.set(j, a.rows() + 1 - i);
  return out;
}

inline PermutationMatrix rotate90(const PermutationMatrix& p) { return PermutationMatrix(rotate90(p.matrix())); }

inline BinaryMatrix transpose(const BinaryMatrix& a) {
  BinaryMatrix out(a.cols(), a.rows());
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j)
      if (a.at(i, j)) out.set(j, i);
  return out;
}

inline BinaryMatrix reverse_rows(const BinaryMatrix& a) {
  BinaryMatrix out(a.rows(), a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j)
      if (a.at(i, j)) out.set(a.rows() + 1 - i, j);
  return out;
}

/// Selected host rows and columns (1-based, strictly increasing).
struct MatrixOccurrence {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

namespace detail {

class SubmatrixSearch {
 public:
  SubmatrixSearch(const BinaryMatrix& host, const BinaryMatrix& pattern)
      : host_(host), pat_(pattern), row_map_(pattern.rows()) {}

  bool run(MatrixOccurrence* witness) {
    if (pat_.rows() > host_.rows() || pat_.cols() > host_.cols()) return false;
    if (!assign(0)) return false;
    if (witness) {
      witness->rows = row_map_;
      std::vector<std::size_t> cols;
      greedy_columns(pat_.rows(), &cols);
      witness->cols = std::move(cols);
    }
    return true;
  }

 private:
  // Leftmost-first column choice is optimal once rows are fixed, so checking
  // it on the assigned prefix of pattern rows is an exact feasibility test for
  // that prefix.
  bool greedy_columns(std::size_t assigned, std::vector<std::size_t>* cols) const {
    std::size_t next = 1;
    for (std::size_t j = 1; j <= pat_.cols(); ++j) {
      bool placed = false;
      for (std::size_t c = next; c + (pat_.cols() - j) <= host_.cols(); ++c) {
        bool ok = true;
        for (std::size_t i = 1; i <= assigned && ok; ++i)
          if (pat_.at(i, j) && !host_.at(row_map_[i - 1], c)) ok = false;
        if (ok) {
          if (cols) cols->push_back(c);
          next = c + 1;
          placed = true;
          break;
        }
      }
      if (!placed) return false;
    }
    return true;
  }

  bool assign(std::size_t i) {
    if (i == pat_.rows()) return true;
    const std::size_t first = i == 0 ? 1 : row_map_[i - 1] + 1;
    const std::size_t last = host_.rows() - (pat_.rows() - i - 1);
    for (std::size_t r = first; r <= last; ++r) {
      row_map_[i] = r;
      if (greedy_columns(i + 1, nullptr) && assign(i + 1)) return true;
    }
    return false;
  }

  const BinaryMatrix& host_;
  const BinaryMatrix& pat_;
  std::vector<std::size_t> row_map_;
};

}  // namespace detail

/// True iff some order-preserving choice of rows and columns of `host` has a
/// one wherever `pattern` does. Extra host ones are allowed.
inline bool matrix_contains(const BinaryMatrix& host, const BinaryMatrix& pattern, MatrixOccurrence* witness = nullptr) {
  if (pattern.count_ones() == 0) throw Error(Errc::EmptyPattern, "pattern has no one-cells");
  return detail::SubmatrixSearch(host, pattern).run(witness);
}

}  // namespace permx
