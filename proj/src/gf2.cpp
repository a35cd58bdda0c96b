#include "mlat/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace mlat {

BitVector& BitVector::operator^=(const BitVector& other) noexcept {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> BitVector::first_set() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return std::nullopt;
}

bool Gf2Matrix::is_zero() const noexcept {
  return std::none_of(columns_.begin(), columns_.end(), [](const BitVector& c) { return c.any(); });
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix operator*(const Gf2Matrix& lhs, const Gf2Matrix& rhs) {
  assert(lhs.cols() == rhs.rows());
  Gf2Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    BitVector acc(lhs.rows());
    for (std::size_t k = 0; k < rhs.rows(); ++k) {
      if (rhs.test(k, c)) acc ^= lhs.column(k);
    }
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
      if (acc.test(r)) out.set(r, c);
    }
  }
  return out;
}

void Gf2ColumnBasis::reduce(BitVector& v) const {
  while (auto p = v.first_set()) {
    const auto& pivot = pivots_[*p];
    if (!pivot) return;
    v ^= *pivot;
  }
}

bool Gf2ColumnBasis::insert(BitVector v) {
  reduce(v);
  auto p = v.first_set();
  if (!p) return false;
  pivots_[*p] = std::move(v);
  ++rank_;
  return true;
}

bool Gf2ColumnBasis::contains(BitVector v) const {
  reduce(v);
  return !v.any();
}

std::size_t gf2_rank(const Gf2Matrix& m) {
  Gf2ColumnBasis basis(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) basis.insert(m.column(c));
  return basis.rank();
}

}  // namespace mlat
