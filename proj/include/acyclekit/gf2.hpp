#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace acyclekit {

/// Column of a GF(2) matrix packed into 64-bit words.
class BitColumn {
 public:
  BitColumn() = default;
  explicit BitColumn(std::size_t nbits) : words_((nbits + 63) / 64, 0) {}

  std::size_t word_count() const { return words_.size(); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitColumn& operator^=(const BitColumn& other) {
    const std::size_t n = words_.size();
    std::uint64_t* a = words_.data();
    const std::uint64_t* b = other.words_.data();
    for (std::size_t i = 0; i < n; ++i) a[i] ^= b[i];
    return *this;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Highest set row, the pivot used by the reduction.
  std::optional<std::size_t> low() const {
    for (std::size_t i = words_.size(); i-- > 0;)
      if (words_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i]));
    return std::nullopt;
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  std::vector<std::size_t> ones() const;

  friend bool operator==(const BitColumn&, const BitColumn&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

/// Column-major GF(2) matrix.
struct Gf2Matrix {
  std::size_t nrows = 0;
  std::vector<BitColumn> columns;

  std::size_t ncols() const { return columns.size(); }
  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix zero(std::size_t nrows, std::size_t ncols);
};

/// Left-to-right column reduction with a pivot-row -> column map. Columns
/// that survive reduction are stored; one reducer answers rank queries,
/// span membership and persistence pairing.
///
/// With a nonzero combination capacity the reducer also records, for each
/// stored column, which inserted columns it is the sum of; solve() then
/// expresses a column in terms of the inserted ones.
class ColumnReducer {
 public:
  explicit ColumnReducer(std::size_t nrows, std::size_t combination_capacity = 0);

  std::size_t nrows() const { return nrows_; }
  std::size_t rank() const { return reduced_.size(); }

  /// Reduce col in place against the stored pivots. Returns its pivot row
  /// when nonzero.
  std::optional<std::size_t> reduce(BitColumn& col) const;

  /// Reduce and, if the result is nonzero, store it. Returns the pivot row
  /// (the column was independent) or nullopt (it was in the span).
  std::optional<std::size_t> insert(BitColumn col);

  bool in_span(BitColumn col) const { return !reduce(col).has_value(); }

  /// Number of inserted columns so far, including ones that reduced to zero.
  std::size_t inserted() const { return inserted_; }

  /// Ids of inserted columns summing to col, if col is in the span.
  /// Requires a combination capacity.
  std::optional<std::vector<std::size_t>> solve(BitColumn col) const;

 private:
  std::size_t nrows_;
  std::size_t capacity_;
  std::size_t inserted_ = 0;
  std::vector<BitColumn> reduced_;
  std::vector<BitColumn> combos_;
  std::vector<std::int64_t> pivot_owner_;
};

std::size_t gf2_rank(const Gf2Matrix& m);

}  // namespace acyclekit
