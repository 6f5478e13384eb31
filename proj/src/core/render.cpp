#include "magicpath/render.hpp"

#include <cmath>
#include <fmt/format.h>
#include <vector>

#include "magicpath/trajectory.hpp"

namespace magicpath {

namespace {

constexpr int kMargin = 32;

// Styling.
constexpr const char* kGridStroke = "#888888";
constexpr const char* kPathStroke = "#7b2d8e";
constexpr const char* kStartFill = "#2e8b57";
constexpr const char* kEndFill = "#c0392b";

std::string svg_open(int width, int height) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
      "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n",
      width, height);
}

}  // namespace

std::string render_trajectory_svg(const Square& s) {
  const int n = s.order();
  const int side = n * kSvgCellSize + 2 * kMargin;
  std::string out = svg_open(side, side);
  auto center = [](int idx) { return kMargin + idx * kSvgCellSize + kSvgCellSize / 2; };

  out += "<g id=\"grid\">\n";
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      out += fmt::format(
          "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"{}\"/>\n",
          kMargin + c * kSvgCellSize, kMargin + r * kSvgCellSize, kSvgCellSize, kSvgCellSize, kGridStroke);
      out += fmt::format(
          "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#333333\">{}</text>\n",
          kMargin + c * kSvgCellSize + 6, kMargin + r * kSvgCellSize + 18, s.at(r, c));
    }
  out += "</g>\n";

  const auto pos = city_positions(s);
  std::string points;
  for (std::size_t v = 1; v < pos.size(); ++v) {
    if (!points.empty()) points += ' ';
    points += fmt::format("{},{}", center(pos[v].col), center(pos[v].row));
  }
  out += fmt::format(
      "<polyline id=\"trajectory\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"3\" "
      "stroke-linejoin=\"round\"/>\n",
      points, kPathStroke);

  const Cell first = pos[1], last = pos.back();
  out += fmt::format("<circle id=\"start\" cx=\"{}\" cy=\"{}\" r=\"8\" fill=\"{}\"/>\n", center(first.col),
                     center(first.row), kStartFill);
  out += fmt::format("<rect id=\"end\" x=\"{}\" y=\"{}\" width=\"16\" height=\"16\" fill=\"{}\"/>\n",
                     center(last.col) - 8, center(last.row) - 8, kEndFill);
  out += "</svg>\n";
  return out;
}

std::string render_pattern_svg(const Square& s) {
  const LegSequence legs = leg_squares(s);
  const auto lengths = legs.lengths();
  const int count = static_cast<int>(lengths.size());

  double top = 0.0;
  for (double v : lengths) top = std::max(top, v);
  const double y_max = std::ceil(top);
  const int plot_w = count * kSvgCellSize;
  const int plot_h = 4 * kSvgCellSize;
  const int width = plot_w + 2 * kMargin;
  const int height = plot_h + 2 * kMargin;

  // Leg index i (1-based) maps to the middle of its column.
  auto x_of = [&](double i) { return kMargin + (i - 0.5) * kSvgCellSize; };
  auto y_of = [&](double v) { return kMargin + plot_h - v / y_max * plot_h; };

  std::string out = svg_open(width, height);
  out += fmt::format("<g id=\"axes\" stroke=\"{}\">\n", kGridStroke);
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>\n", kMargin, kMargin + plot_h,
                     kMargin + plot_w);
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n", kMargin, kMargin, kMargin + plot_h);
  out += "</g>\n";
  for (int i = 1; i <= count; ++i)
    out += fmt::format(
        "<text x=\"{:.2f}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
        x_of(i), kMargin + plot_h + 16, i);

  const double mid = (count + 1) / 2.0;
  out += fmt::format(
      "<line id=\"center-line\" x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" stroke=\"#555555\" "
      "stroke-dasharray=\"6,4\"/>\n",
      x_of(mid), kMargin, kMargin + plot_h);

  std::string points;
  for (int i = 0; i < count; ++i) {
    if (!points.empty()) points += ' ';
    points += fmt::format("{:.2f},{:.2f}", x_of(i + 1), y_of(lengths[i]));
  }
  out += fmt::format(
      "<polyline id=\"pattern\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n", points,
      kPathStroke);
  for (int i = 0; i < count; ++i)
    out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"4\" fill=\"{}\"/>\n", x_of(i + 1), y_of(lengths[i]),
                       kPathStroke);
  out += "</svg>\n";
  return out;
}

std::string render_svg(const Square& s, RenderMode mode) {
  return mode == RenderMode::Trajectory ? render_trajectory_svg(s) : render_pattern_svg(s);
}

}  // namespace magicpath
