#include "magicpath/square.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>

#include "magicpath/error.hpp"

namespace magicpath {

std::string to_string(Transform t) {
  switch (t) {
    case Transform::Identity: return "identity";
    case Transform::Rotate90: return "rotate90";
    case Transform::Rotate180: return "rotate180";
    case Transform::Rotate270: return "rotate270";
    case Transform::FlipH: return "flipH";
    case Transform::FlipV: return "flipV";
    case Transform::FlipMainDiag: return "flipMainDiag";
    case Transform::FlipAntiDiag: return "flipAntiDiag";
  }
  return "?";
}

Cell map_cell(Transform t, Cell c, int order) {
  const int m = order - 1;
  switch (t) {
    case Transform::Identity: return c;
    case Transform::Rotate90: return {c.col, m - c.row};
    case Transform::Rotate180: return {m - c.row, m - c.col};
    case Transform::Rotate270: return {m - c.col, c.row};
    case Transform::FlipH: return {m - c.row, c.col};
    case Transform::FlipV: return {c.row, m - c.col};
    case Transform::FlipMainDiag: return {c.col, c.row};
    case Transform::FlipAntiDiag: return {m - c.col, m - c.row};
  }
  return c;
}

namespace {

bool same_action(Transform x, auto&& other) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (map_cell(x, {r, c}, 4) != other(Cell{r, c})) return false;
  return true;
}

}  // namespace

Transform compose(Transform a, Transform b) {
  for (Transform t : kAllTransforms)
    if (same_action(t, [&](Cell c) { return map_cell(a, map_cell(b, c, 4), 4); })) return t;
  return Transform::Identity;  // unreachable: D4 is closed
}

Transform inverse(Transform t) {
  for (Transform u : kAllTransforms)
    if (compose(t, u) == Transform::Identity) return u;
  return Transform::Identity;
}

int magic_constant(int order) {
  if (order <= 0) throw ValidationError(fmt::format("invalid order {}", order));
  return order * (order * order + 1) / 2;
}

bool is_magic(std::span<const int> cells, int order) {
  const int target = magic_constant(order);
  const auto n = static_cast<std::size_t>(order);
  if (cells.size() != n * n)
    throw ValidationError(
        fmt::format("invalid shape: expected {} cells for order {}, got {}", n * n, order, cells.size()));

  std::vector<bool> seen(n * n + 1, false);
  for (int v : cells) {
    if (v < 1 || static_cast<std::size_t>(v) > n * n || seen[v]) return false;
    seen[v] = true;
  }
  int diag = 0, anti = 0;
  for (int i = 0; i < order; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < order; ++j) {
      row += cells[i * n + j];
      col += cells[j * n + i];
    }
    if (row != target || col != target) return false;
    diag += cells[i * n + i];
    anti += cells[i * n + (n - 1 - i)];
  }
  return diag == target && anti == target;
}

Square Square::make(int order, std::vector<int> cells) {
  if (order != 3 && order != 4) throw ValidationError(fmt::format("unsupported order {}", order));
  if (!is_magic(cells, order)) throw ValidationError("grid is not a normal magic square");
  return Square(order, std::move(cells));
}

Cell Square::position_of(int value) const {
  auto it = std::find(cells_.begin(), cells_.end(), value);
  const auto idx = static_cast<int>(it - cells_.begin());
  return {idx / order_, idx % order_};
}

std::string Square::to_string() const { return fmt::format("{}", fmt::join(cells_, " ")); }

std::strong_ordering operator<=>(const Square& a, const Square& b) {
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(), b.cells_.begin(),
                                                b.cells_.end());
}

Square apply_transform(const Square& s, Transform t) {
  const int n = s.order_;
  std::vector<int> out(s.cells_.size());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Cell d = map_cell(t, {r, c}, n);
      out[d.row * n + d.col] = s.cells_[r * n + c];
    }
  return Square(n, std::move(out));
}

std::array<Square, 8> orbit(const Square& s) {
  return {apply_transform(s, kAllTransforms[0]), apply_transform(s, kAllTransforms[1]),
          apply_transform(s, kAllTransforms[2]), apply_transform(s, kAllTransforms[3]),
          apply_transform(s, kAllTransforms[4]), apply_transform(s, kAllTransforms[5]),
          apply_transform(s, kAllTransforms[6]), apply_transform(s, kAllTransforms[7])};
}

Square frenicle_canonical(const Square& s) {
  auto variants = orbit(s);
  return *std::min_element(variants.begin(), variants.end());
}

Square complement(const Square& s) {
  if (s.order_ != 4)
    throw ValidationError(fmt::format("complement: unsupported order {} (order 4 only)", s.order_));
  std::vector<int> out(s.cells_);
  for (int& v : out) v = 17 - v;
  return Square(4, std::move(out));
}

namespace {

// Does pos(n^2+1-k) == g(pos(k)) hold for every k?
template <class Isometry>
bool complements_follow(const Square& s, Isometry g) {
  const int n = s.order();
  const int top = n * n + 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Cell image = g(Cell{r, c});
      if (s.at(image) != top - s.at(r, c)) return false;
    }
  return true;
}

}  // namespace

bool is_associative(const Square& s) {
  const int m = s.order() - 1;
  return complements_follow(s, [m](Cell c) { return Cell{m - c.row, m - c.col}; });
}

bool is_pandiagonal(const Square& s) {
  const int n = s.order();
  const int target = magic_constant(n);
  for (int offset = 0; offset < n; ++offset) {
    int down = 0, up = 0;
    for (int i = 0; i < n; ++i) {
      down += s.at(i, (i + offset) % n);
      up += s.at(i, ((offset - i) % n + n) % n);
    }
    if (down != target || up != target) return false;
  }
  return true;
}

bool is_axis_complement(const Square& s) {
  const int m = s.order() - 1;
  return complements_follow(s, [m](Cell c) { return Cell{m - c.row, c.col}; }) ||
         complements_follow(s, [m](Cell c) { return Cell{c.row, m - c.col}; });
}

bool is_semi_pandiagonal(const Square& s) {
  if (s.order() != 4) return false;
  const int a = s.at(0, 2) + s.at(1, 3) + s.at(2, 0) + s.at(3, 1);
  const int b = s.at(0, 1) + s.at(1, 0) + s.at(2, 3) + s.at(3, 2);
  return a == 34 && b == 34;
}

}  // namespace magicpath
