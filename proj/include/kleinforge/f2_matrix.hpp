#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kleinforge {

/// Dense matrix over F_2 with rows packed into 64-bit words.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix identity(std::size_t size);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  F2Matrix transposed() const;
  std::size_t rank() const;
  bool is_nonsingular() const { return rows_ == cols_ && rank() == rows_; }

  /// Solves A x = b by Gaussian elimination with pivots taken in column order.
  /// Returns nullopt when the system is inconsistent; free variables are set to 0.
  std::optional<std::vector<bool>> solve(const std::vector<bool>& rhs) const;

  /// Rows as strings of '0'/'1'.
  std::vector<std::string> to_strings() const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t words_per_row() const noexcept { return (cols_ + 63) / 64; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace kleinforge
