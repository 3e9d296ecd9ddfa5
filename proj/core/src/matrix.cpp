#include "wlp/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace wlp {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, Integer(1)});
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < ncols; ++c) {
      if (rows[r][c] != 0) m.columns_[c].push_back({r, rows[r][c]});
    }
  }
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Integer>> big;
  big.reserve(rows.size());
  for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
  return from_dense(big);
}

std::size_t IntMatrix::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& col : columns_) total += col.size();
  return total;
}

void IntMatrix::set_column(std::size_t c, Column entries) {
  if (c >= columns_.size()) throw std::out_of_range("column index out of range");
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.row < b.row; });
  Column merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (e.row >= rows_) throw std::out_of_range("row index out of range");
    if (!merged.empty() && merged.back().row == e.row) {
      merged.back().value += e.value;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
  columns_[c] = std::move(merged);
}

Integer IntMatrix::at(std::size_t r, std::size_t c) const {
  const Column& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.row < row; });
  return it != col.end() && it->row == r ? it->value : Integer(0);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) t.columns_[e.row].push_back({c, e.value});
  }
  return t;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols(), Integer(0)));
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) out[e.row][c] = e.value;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  std::vector<Integer> accumulator(a.rows(), Integer(0));
  std::vector<char> touched_flag(a.rows(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (const auto& be : b.columns_[c]) {
      for (const auto& ae : a.columns_[be.row]) {
        accumulator[ae.row] += ae.value * be.value;
        if (!touched_flag[ae.row]) {
          touched_flag[ae.row] = 1;
          touched.push_back(ae.row);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    IntMatrix::Column col;
    for (std::size_t r : touched) {
      if (accumulator[r] != 0) col.push_back({r, accumulator[r]});
      accumulator[r] = 0;
      touched_flag[r] = 0;
    }
    touched.clear();
    out.columns_[c] = std::move(col);
  }
  return out;
}

}  // namespace wlp
