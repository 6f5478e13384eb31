#include "magicpath/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <map>

#include "magicpath/error.hpp"

namespace magicpath {

LegSequence::LegSequence(int order, std::vector<int> legs_squared)
    : order_(order), legs_(std::move(legs_squared)) {
  if (order < 2) throw ValidationError(fmt::format("invalid order {}", order));
  const auto expected = static_cast<std::size_t>(order * order - 1);
  if (legs_.size() != expected)
    throw ValidationError(fmt::format("leg sequence needs {} entries, got {}", expected, legs_.size()));
  for (int v : legs_)
    if (v < 1) throw ValidationError(fmt::format("leg length squared must be >= 1, got {}", v));
}

std::vector<double> LegSequence::lengths() const {
  std::vector<double> out;
  out.reserve(legs_.size());
  for (int v : legs_) out.push_back(std::sqrt(static_cast<double>(v)));
  return out;
}

LegSequence LegSequence::reversed() const {
  return LegSequence(order_, std::vector<int>(legs_.rbegin(), legs_.rend()));
}

std::vector<Cell> city_positions(const Square& s) {
  const int n = s.order();
  std::vector<Cell> pos(n * n + 1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) pos[s.at(r, c)] = {r, c};
  return pos;
}

LegSequence leg_squares(const Square& s) {
  const auto pos = city_positions(s);
  std::vector<int> legs;
  legs.reserve(pos.size() - 2);
  for (std::size_t v = 1; v + 1 < pos.size(); ++v) {
    const int dr = pos[v + 1].row - pos[v].row;
    const int dc = pos[v + 1].col - pos[v].col;
    legs.push_back(dr * dr + dc * dc);
  }
  return LegSequence(s.order(), std::move(legs));
}

TrajectoryStats trajectory_stats(const LegSequence& legs) {
  TrajectoryStats st;
  for (int v : legs.squared()) st.total_distance += std::sqrt(static_cast<double>(v));
  st.per_city_average = st.total_distance / static_cast<double>(legs.size());
  return st;
}

namespace {

// Count of each squared length; the total is a function of this alone.
std::map<int, int> histogram_key(const LegSequence& legs) {
  std::map<int, int> h;
  for (int v : legs.squared()) ++h[v];
  return h;
}

double keyed_total(const std::map<int, int>& key) {
  double t = 0.0;
  for (auto [v, n] : key) t += n * std::sqrt(static_cast<double>(v));
  return t;
}

}  // namespace

CatalogExtremes catalog_extremes(std::span<const LegSequence> legs) {
  if (legs.empty()) throw ValidationError("catalog_extremes: empty catalog");

  std::vector<std::map<int, int>> keys;
  keys.reserve(legs.size());
  for (const auto& l : legs) keys.push_back(histogram_key(l));

  std::size_t lo = 0, hi = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const double t = keyed_total(keys[i]);
    sum += trajectory_stats(legs[i]).total_distance;
    if (t < keyed_total(keys[lo])) lo = i;
    if (t > keyed_total(keys[hi])) hi = i;
  }

  CatalogExtremes ex;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (keys[i] == keys[lo]) ex.argmin.push_back(i + 1);
    if (keys[i] == keys[hi]) ex.argmax.push_back(i + 1);
  }
  const auto lo_stats = trajectory_stats(legs[lo]);
  const auto hi_stats = trajectory_stats(legs[hi]);
  ex.min_total = lo_stats.total_distance;
  ex.max_total = hi_stats.total_distance;
  ex.mean_total = sum / static_cast<double>(legs.size());
  ex.min_per_city = lo_stats.per_city_average;
  ex.max_per_city = hi_stats.per_city_average;
  return ex;
}

CatalogExtremes catalog_extremes(const CanonicalCatalog& catalog) {
  std::vector<LegSequence> legs;
  legs.reserve(catalog.size());
  for (const Square& s : catalog) legs.push_back(leg_squares(s));
  return catalog_extremes(legs);
}

}  // namespace magicpath
