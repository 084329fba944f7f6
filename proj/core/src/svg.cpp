#include "arcchroma/svg.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace arcchroma::svg {
namespace {

constexpr int kCell = 40;
constexpr int kMargin = 16;
constexpr int kLegendGap = 24;
constexpr int kLegendSwatch = 18;

constexpr std::array<const char*, 12> kPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b4", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
};

const char* fill_for(int color) { return kPalette[color % kPalette.size()]; }

}  // namespace

std::string grid_svg(const Geometry& grid, const Coloring& coloring) {
  if (grid.kind() != GeometryKind::Grid)
    throw std::invalid_argument("svg export handles grids only");
  if (coloring.geometry != grid.descriptor())
    throw std::invalid_argument("coloring belongs to a different geometry");
  if (static_cast<std::int32_t>(coloring.color_of.size()) != grid.point_count())
    throw std::invalid_argument("coloring is not total");

  const int n = grid.param();
  const int board = n * kCell;
  const int width = board + 2 * kMargin;
  const int height = board + 2 * kMargin + kLegendGap + kLegendSwatch;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";

  for (PointId p = 0; p < grid.point_count(); ++p) {
    const auto [x, y] = grid.grid_coords(p);
    const int color = coloring.color_of[p];
    if (color < 0 || color >= coloring.k)
      throw std::invalid_argument("color out of range");
    const int px = kMargin + (x - 1) * kCell;
    const int py = kMargin + (n - y) * kCell;
    out << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << kCell
        << "\" height=\"" << kCell << "\" fill=\"" << fill_for(color)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }

  const int ly = kMargin + board + kLegendGap;
  for (int c = 0; c < coloring.k; ++c) {
    const int lx = kMargin + c * (kLegendSwatch + 46);
    out << "  <rect x=\"" << lx << "\" y=\"" << ly << "\" width=\"" << kLegendSwatch
        << "\" height=\"" << kLegendSwatch << "\" fill=\"" << fill_for(c)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << lx + kLegendSwatch + 6 << "\" y=\"" << ly + 14
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << c + 1 << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace arcchroma::svg
