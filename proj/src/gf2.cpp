#include "acyclekit/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace acyclekit {

std::vector<std::size_t> BitColumn::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    m.columns.emplace_back(n);
    m.columns.back().set(i);
  }
  return m;
}

Gf2Matrix Gf2Matrix::zero(std::size_t nrows, std::size_t ncols) {
  return Gf2Matrix{nrows, std::vector<BitColumn>(ncols, BitColumn(nrows))};
}

ColumnReducer::ColumnReducer(std::size_t nrows, std::size_t combination_capacity)
    : nrows_(nrows), capacity_(combination_capacity), pivot_owner_(nrows, -1) {}

std::optional<std::size_t> ColumnReducer::reduce(BitColumn& col) const {
  auto low = col.low();
  while (low) {
    auto owner = pivot_owner_[*low];
    if (owner < 0) return low;
    col ^= reduced_[static_cast<std::size_t>(owner)];
    low = col.low();
  }
  return std::nullopt;
}

std::optional<std::size_t> ColumnReducer::insert(BitColumn col) {
  const std::size_t id = inserted_++;
  if (capacity_ == 0) {
    auto low = reduce(col);
    if (low) {
      pivot_owner_[*low] = static_cast<std::int64_t>(reduced_.size());
      reduced_.push_back(std::move(col));
    }
    return low;
  }

  if (id >= capacity_) throw std::length_error("ColumnReducer: combination capacity exceeded");
  BitColumn combo(capacity_);
  combo.set(id);
  auto low = col.low();
  while (low) {
    auto owner = pivot_owner_[*low];
    if (owner < 0) break;
    col ^= reduced_[static_cast<std::size_t>(owner)];
    combo ^= combos_[static_cast<std::size_t>(owner)];
    low = col.low();
  }
  if (low) {
    pivot_owner_[*low] = static_cast<std::int64_t>(reduced_.size());
    reduced_.push_back(std::move(col));
    combos_.push_back(std::move(combo));
  }
  return low;
}

std::optional<std::vector<std::size_t>> ColumnReducer::solve(BitColumn col) const {
  if (capacity_ == 0) throw std::logic_error("ColumnReducer::solve needs combination tracking");
  BitColumn combo(capacity_);
  auto low = col.low();
  while (low) {
    auto owner = pivot_owner_[*low];
    if (owner < 0) return std::nullopt;
    col ^= reduced_[static_cast<std::size_t>(owner)];
    combo ^= combos_[static_cast<std::size_t>(owner)];
    low = col.low();
  }
  return combo.ones();
}

std::size_t gf2_rank(const Gf2Matrix& m) {
  ColumnReducer r(m.nrows);
  for (const auto& c : m.columns) r.insert(c);
  return r.rank();
}

}  // namespace acyclekit
