#include "kleinforge/f2_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace kleinforge {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + 63) / 64), 0) {}

F2Matrix F2Matrix::identity(std::size_t size) {
  F2Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, true);
  return m;
}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("F2Matrix::get");
  return (bits_[r * words_per_row() + c / 64] >> (c % 64)) & 1u;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("F2Matrix::set");
  auto& word = bits_[r * words_per_row() + c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  word = value ? (word | mask) : (word & ~mask);
}

F2Matrix F2Matrix::transposed() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

namespace {

// Row-reduces the augmented system in place; returns pivot column per pivot row.
std::vector<std::size_t> eliminate(std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t found = next;
    while (found < rows.size() && !(rows[found][word] & mask)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && (rows[r][word] & mask)) {
        for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[next][w];
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

std::size_t F2Matrix::rank() const {
  std::vector<std::vector<std::uint64_t>> rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    rows[r].assign(bits_.begin() + static_cast<std::ptrdiff_t>(r * words_per_row()),
                   bits_.begin() + static_cast<std::ptrdiff_t>((r + 1) * words_per_row()));
  return eliminate(rows, cols_).size();
}

std::optional<std::vector<bool>> F2Matrix::solve(const std::vector<bool>& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("F2Matrix::solve: rhs size mismatch");
  const std::size_t aug_cols = cols_ + 1;
  const std::size_t words = (aug_cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(rows_, std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
    if (rhs[r]) rows[r][cols_ / 64] |= std::uint64_t{1} << (cols_ % 64);
  }
  const auto pivots = eliminate(rows, aug_cols);
  std::vector<bool> x(cols_, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols_) return std::nullopt;  // 0 = 1
    x[pivots[i]] = (rows[i][cols_ / 64] >> (cols_ % 64)) & 1u;
  }
  return x;
}

std::vector<std::string> F2Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::string line(cols_, '0');
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) line[c] = '1';
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace kleinforge
