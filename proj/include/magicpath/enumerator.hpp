#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "magicpath/square.hpp"

namespace magicpath {

/// Sorted, duplicate-free list of Frenicle-canonical magic squares.
///
/// Indices are 1-based positions in ascending row-major lexicographic order.
/// This indexing is a convention of this library; no published numbering of
/// the order-4 squares is implied.
class CanonicalCatalog {
public:
  // Validates every catalog invariant (magic, canonical, strictly increasing).
  CanonicalCatalog(int order, std::vector<Square> squares);

  int order() const { return order_; }
  std::size_t size() const { return squares_.size(); }
  bool empty() const { return squares_.empty(); }
  const std::vector<Square>& squares() const { return squares_; }

  // 1-based. Throws ValidationError when out of range.
  const Square& at(std::size_t index) const;

  // 1-based index of a canonical square, if present.
  std::optional<std::size_t> index_of(const Square& canonical) const;

  auto begin() const { return squares_.begin(); }
  auto end() const { return squares_.end(); }

private:
  int order_;
  std::vector<Square> squares_;
};

// Constraint-pruned backtracking; see enumerator.cpp for the fill order. The
// search is split by the value of the top-left cell; `threads` only affects
// wall time, never the result.
CanonicalCatalog enumerate_canonical(int order, unsigned threads = 1);

// Every magic square of the order: the full 8-element orbit of each catalog
// entry, sorted.
std::vector<Square> enumerate_all(int order);

}  // namespace magicpath
