#include "recip/gf2_linalg.hpp"

#include <bit>
#include <utility>

namespace recip::gf2 {

bool BitVector::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitVector::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t wi = from / 64;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % 64));
  while (true) {
    if (w) {
      std::size_t i = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
      return i < size_ ? i : size_;
    }
    if (++wi == words_.size()) return size_;
    w = words_[wi];
  }
}

BitVector& BitVector::operator^=(const BitVector& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

namespace {

// Reduces `rows` in place to reduced row echelon form over the first `ncols`
// columns; returns the pivot column of each leading row.
std::vector<std::size_t> rref(std::vector<BitVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && !rows[sel].get(c)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
  auto copy = rows_;
  return rref(copy, cols_).size();
}

BitVector Matrix::apply(const BitVector& x) const {
  BitVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    bool bit = false;
    for (std::size_t c = x.find_next(0); c < cols_; c = x.find_next(c + 1)) bit ^= rows_[r].get(c);
    out.set(r, bit);
  }
  return out;
}

std::vector<BitVector> Matrix::kernel() const {
  auto reduced = rows_;
  auto pivots = rref(reduced, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(cols_);
    v.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (reduced[i].get(f)) v.set(pivots[i]);
    basis.push_back(std::move(v));
  }
  rref(basis, cols_);
  return basis;
}

std::optional<BitVector> Matrix::solve_lexmin(const BitVector& b) const {
  std::vector<BitVector> aug;
  aug.reserve(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    BitVector row(cols_ + 1);
    for (std::size_t c = rows_[r].find_next(0); c < cols_; c = rows_[r].find_next(c + 1)) row.set(c);
    row.set(cols_, b.get(r));
    aug.push_back(std::move(row));
  }
  auto pivots = rref(aug, cols_);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i)
    if (aug[i].get(cols_)) return std::nullopt;

  BitVector x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], aug[i].get(cols_));

  // Clear each kernel leading position in turn.
  for (const auto& k : kernel()) {
    std::size_t lead = k.find_next(0);
    if (lead < cols_ && x.get(lead)) x ^= k;
  }
  return x;
}

}  // namespace recip::gf2
