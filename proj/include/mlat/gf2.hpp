#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace mlat {

/// Packed vector over the two-element field.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }

  BitVector& operator^=(const BitVector& other) noexcept;
  bool any() const noexcept;
  std::size_t count() const noexcept;
  std::optional<std::size_t> first_set() const noexcept;

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Column-major GF(2) matrix.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols, BitVector(rows)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  void set(std::size_t r, std::size_t c) noexcept { columns_[c].set(r); }
  void flip(std::size_t r, std::size_t c) noexcept { columns_[c].flip(r); }
  bool test(std::size_t r, std::size_t c) const noexcept { return columns_[c].test(r); }

  const BitVector& column(std::size_t c) const noexcept { return columns_[c]; }
  bool is_zero() const noexcept;

  static Gf2Matrix identity(std::size_t n);

  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::vector<BitVector> columns_;
};

/// Product over GF(2); requires lhs.cols() == rhs.rows().
Gf2Matrix operator*(const Gf2Matrix& lhs, const Gf2Matrix& rhs);

/// Incrementally maintained echelon basis of a column space. The pivot of a
/// stored vector is its first nonzero row.
class Gf2ColumnBasis {
 public:
  explicit Gf2ColumnBasis(std::size_t rows) : pivots_(rows) {}

  /// Reduces `v` against the basis; returns true and stores it if it was
  /// independent.
  bool insert(BitVector v);
  /// True when `v` already lies in the span.
  bool contains(BitVector v) const;
  std::size_t rank() const noexcept { return rank_; }

 private:
  void reduce(BitVector& v) const;

  std::vector<std::optional<BitVector>> pivots_;
  std::size_t rank_ = 0;
};

std::size_t gf2_rank(const Gf2Matrix& m);

}  // namespace mlat
