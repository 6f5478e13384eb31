#pragma once

#include <string>

#include "magicpath/square.hpp"

namespace magicpath {

enum class RenderMode { Trajectory, Pattern };

inline constexpr int kSvgCellSize = 64;

// Numbered grid with the city-order polyline through cell centers; start
// marked by a circle, end by a square.
std::string render_trajectory_svg(const Square& s);

// Leg length against leg index, with a dashed line at the sequence center.
std::string render_pattern_svg(const Square& s);

std::string render_svg(const Square& s, RenderMode mode);

}  // namespace magicpath
