#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace magicpath {

struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// The eight symmetries of the square. Rotations are clockwise.
enum class Transform : std::uint8_t {
  Identity,
  Rotate90,
  Rotate180,
  Rotate270,
  FlipH,         // mirror across the horizontal center line (top <-> bottom)
  FlipV,         // mirror across the vertical center line (left <-> right)
  FlipMainDiag,  // transpose
  FlipAntiDiag,
};

inline constexpr std::array<Transform, 8> kAllTransforms = {
    Transform::Identity,  Transform::Rotate90,     Transform::Rotate180,
    Transform::Rotate270, Transform::FlipH,        Transform::FlipV,
    Transform::FlipMainDiag, Transform::FlipAntiDiag};

std::string to_string(Transform t);

// Where cell `c` of an order-n grid lands after applying `t`.
Cell map_cell(Transform t, Cell c, int order);

// Group structure: map_cell(compose(a, b), c) == map_cell(a, map_cell(b, c)).
Transform compose(Transform a, Transform b);
Transform inverse(Transform t);

int magic_constant(int order);

// True iff `cells` is a permutation of 1..order^2 whose rows, columns and both
// main diagonals sum to magic_constant(order). Throws ValidationError if the
// length is not order^2.
bool is_magic(std::span<const int> cells, int order);

/// A normal magic square of order 3 or 4, stored row-major.
///
/// Instances can only be obtained through `make`, which validates the magic
/// property, or from operations that preserve it.
class Square {
public:
  static Square make(int order, std::vector<int> cells);

  int order() const { return order_; }
  std::span<const int> cells() const { return cells_; }
  int at(int row, int col) const { return cells_[row * order_ + col]; }
  int at(Cell c) const { return at(c.row, c.col); }

  // Position of value v (1-based values).
  Cell position_of(int value) const;

  std::string to_string() const;

  friend bool operator==(const Square&, const Square&) = default;
  // Row-major lexicographic order, the order used for canonical forms.
  friend std::strong_ordering operator<=>(const Square& a, const Square& b);

private:
  Square(int order, std::vector<int> cells) : order_(order), cells_(std::move(cells)) {}

  friend Square apply_transform(const Square&, Transform);
  friend Square complement(const Square&);
  friend class SquareBuilder;

  int order_;
  std::vector<int> cells_;
};

// Internal constructor used by the enumerator, which only emits grids that
// already satisfy the magic property.
class SquareBuilder {
public:
  static Square trusted(int order, std::vector<int> cells) {
    return Square(order, std::move(cells));
  }
};

Square apply_transform(const Square& s, Transform t);

// All eight images of `s`, in kAllTransforms order.
std::array<Square, 8> orbit(const Square& s);

// Lexicographically least row-major variant among the eight images.
Square frenicle_canonical(const Square& s);

// v -> order^2 + 1 - v. Only order 4 is supported.
Square complement(const Square& s);

// pos(k) + pos(n^2+1-k) == (n-1, n-1) for every k.
bool is_associative(const Square& s);

// Every broken diagonal, in both directions, sums to the magic constant.
bool is_pandiagonal(const Square& s);

// Complementary values mirror each other across one fixed center line
// (horizontal or vertical).
bool is_axis_complement(const Square& s);

// Order 4: both pairs of opposite length-2 corner diagonals sum to 34.
// Metadata only; not used for classification.
bool is_semi_pandiagonal(const Square& s);

}  // namespace magicpath
