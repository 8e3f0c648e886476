#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace recip::gf2 {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true) {
    auto mask = std::uint64_t{1} << (i % 64);
    if (v) words_[i / 64] |= mask;
    else words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool any() const;
  std::size_t count() const;
  /// First set index at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const;

  BitVector& operator^=(const BitVector& o);
  bool operator==(const BitVector& o) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2), stored by rows.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }

  std::size_t rank() const;
  BitVector apply(const BitVector& x) const;

  /// Lexicographically least x (coordinate 0 most significant, 0 < 1) with
  /// M x = b, or nullopt when the system is inconsistent.
  std::optional<BitVector> solve_lexmin(const BitVector& b) const;

  /// Basis of the null space, in reduced echelon form over column order.
  std::vector<BitVector> kernel() const;

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
};

}  // namespace recip::gf2
