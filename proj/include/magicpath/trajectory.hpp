#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "magicpath/enumerator.hpp"
#include "magicpath/square.hpp"

namespace magicpath {

/// Squared lengths of the legs 1->2, 2->3, ..., (n^2-1)->n^2 of the traveler's
/// path. Squared lengths are exact integers; all comparisons use them.
class LegSequence {
public:
  // Throws ValidationError unless there are order^2-1 entries, all >= 1.
  LegSequence(int order, std::vector<int> legs_squared);

  int order() const { return order_; }
  std::size_t size() const { return legs_.size(); }
  std::span<const int> squared() const { return legs_; }
  int operator[](std::size_t i) const { return legs_[i]; }

  // Floating-point leg lengths, in cell-side units.
  std::vector<double> lengths() const;

  LegSequence reversed() const;

  friend bool operator==(const LegSequence&, const LegSequence&) = default;
  friend auto operator<=>(const LegSequence&, const LegSequence&) = default;

private:
  int order_;
  std::vector<int> legs_;
};

struct TrajectoryStats {
  double total_distance = 0.0;
  double per_city_average = 0.0;  // total / leg count
};

// positions[v] is the cell holding value v; index 0 is unused.
std::vector<Cell> city_positions(const Square& s);

LegSequence leg_squares(const Square& s);

TrajectoryStats trajectory_stats(const LegSequence& legs);

struct CatalogExtremes {
  double min_total = 0.0;
  double max_total = 0.0;
  double mean_total = 0.0;
  std::vector<std::size_t> argmin;  // 1-based catalog indices, ascending
  std::vector<std::size_t> argmax;
  double min_per_city = 0.0;
  double max_per_city = 0.0;
};

// Ties are decided on the exact multiset of squared legs, so the result does
// not depend on summation order or partitioning.
CatalogExtremes catalog_extremes(const CanonicalCatalog& catalog);
CatalogExtremes catalog_extremes(std::span<const LegSequence> legs);

}  // namespace magicpath
