#pragma once

#include <cstddef>
#include <vector>

#include "wlp/polynomial.hpp"

namespace wlp {

/// Sparse integer matrix stored column-major; each column holds
/// (row, value) pairs sorted by row with no explicit zeros.
class IntMatrix {
 public:
  struct Entry {
    std::size_t row;
    Integer value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Column = std::vector<Entry>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_dense(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix from_dense(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  bool empty() const noexcept { return rows_ == 0 || columns_.empty(); }
  std::size_t nonzeros() const noexcept;

  const Column& column(std::size_t c) const { return columns_.at(c); }
  /// Replaces column c; entries may arrive unsorted and with repeated rows,
  /// which are summed.
  void set_column(std::size_t c, Column entries);
  Integer at(std::size_t r, std::size_t c) const;

  IntMatrix transposed() const;
  std::vector<std::vector<Integer>> to_dense() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

}  // namespace wlp
