#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "windlab/invariant.hpp"
#include "windlab/winding.hpp"
#include "windlab/word.hpp"

namespace windlab {

struct RenderConfig {
  int cell_px = 24;
  int pad_cells = 1;
  bool show_winding_numbers = false;
  std::optional<InvariantSpec> coloring;
};

namespace detail {

// pixel coordinate that may land on a half cell; renders "12" or "12.5"
inline std::string fmt_half(long long twice) {
  std::string s = std::to_string(twice / 2);
  if (twice % 2 != 0) s += ".5";
  return s;
}

}  // namespace detail

/// Deterministic SVG 1.1 picture of the lattice curve of a word: optional
/// coloring background, grid, the path as a polyline with an arrowhead, and
/// optional winding-number labels (from the brute-force oracle).  Identical
/// inputs produce byte-identical output.
inline std::string render_svg(const Word& w, const RenderConfig& cfg = {}) {
  if (cfg.cell_px < 4) throw std::invalid_argument("render_svg: cell_px must be >= 4");
  if (cfg.pad_cells < 0) throw std::invalid_argument("render_svg: pad_cells must be >= 0");
  LatticePath path = curve_points(w);
  long long min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& [vx, vy] : path.vertices) {
    min_x = std::min(min_x, vx);
    max_x = std::max(max_x, vx);
    min_y = std::min(min_y, vy);
    max_y = std::max(max_y, vy);
  }
  const long long pad = cfg.pad_cells;
  const long long cx0 = min_x - pad, cx1 = max_x + pad;  // cells [cx0, cx1)
  const long long cy0 = min_y - pad, cy1 = max_y + pad;
  const long long cell = cfg.cell_px;
  const long long width = (cx1 - cx0) * cell;
  const long long height = (cy1 - cy0) * cell;
  // y axis flipped: mathematical up is SVG up
  auto px = [&](long long x) { return (x - cx0) * cell; };
  auto py = [&](long long y) { return height - (y - cy0) * cell; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) +
         "\">\n";
  svg += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
         "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#c22\"/></marker></defs>\n";

  // coloring background
  if (cfg.coloring) {
    const InvariantSpec& spec = *cfg.coloring;
    for (long long j = cy0; j < cy1; ++j)
      for (long long i = cx0; i < cx1; ++i) {
        long long key = floor_mod(spec.phi_x * (i - spec.translate.first) +
                                      spec.phi_y * (j - spec.translate.second),
                                  spec.n);
        if (const auto* two = std::get_if<TwoColoring>(&spec.coloring)) {
          const char* fill = two->color(key) == CellColor::black ? "#b8b8b8" : "#ffffff";
          svg += "<rect x=\"" + std::to_string(px(i)) + "\" y=\"" +
                 std::to_string(py(j + 1)) + "\" width=\"" + std::to_string(cell) +
                 "\" height=\"" + std::to_string(cell) + "\" fill=\"" + fill + "\"/>\n";
        } else {
          const auto& pg = std::get<PGoodColoring>(spec.coloring);
          svg += "<text x=\"" + std::to_string(px(i) + 2) + "\" y=\"" +
                 std::to_string(py(j) - 2) + "\" font-size=\"" +
                 std::to_string(cell / 3) + "\" fill=\"#888\">" +
                 std::to_string(pg.color(key)) + "</text>\n";
        }
      }
  }

  // grid lines, axes darker
  for (long long i = cx0; i <= cx1; ++i) {
    const char* stroke = i == 0 ? "#808080" : "#d0d0d0";
    svg += "<line x1=\"" + std::to_string(px(i)) + "\" y1=\"0\" x2=\"" +
           std::to_string(px(i)) + "\" y2=\"" + std::to_string(height) + "\" stroke=\"" +
           std::string(stroke) + "\" stroke-width=\"1\"/>\n";
  }
  for (long long j = cy0; j <= cy1; ++j) {
    const char* stroke = j == 0 ? "#808080" : "#d0d0d0";
    svg += "<line x1=\"0\" y1=\"" + std::to_string(py(j)) + "\" x2=\"" +
           std::to_string(width) + "\" y2=\"" + std::to_string(py(j)) + "\" stroke=\"" +
           std::string(stroke) + "\" stroke-width=\"1\"/>\n";
  }

  // winding-number labels from the oracle (closed curves only)
  if (cfg.show_winding_numbers && in_derived_subgroup(w)) {
    const LaurentPoly labels = winding_oracle(w);
    for (const auto& [e, c] : labels.terms()) {
      svg += "<text x=\"" + detail::fmt_half(2 * px(e.first) + cell) + "\" y=\"" +
             detail::fmt_half(2 * py(e.second) - cell) +
             "\" font-size=\"" + std::to_string(cell / 2) +
             "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#222\">" +
             c.to_string() + "</text>\n";
    }
  }

  // the curve itself
  if (path.vertices.size() > 1) {
    std::string points;
    for (const auto& [vx, vy] : path.vertices) {
      if (!points.empty()) points += " ";
      points += std::to_string(px(vx)) + "," + std::to_string(py(vy));
    }
    svg += "<polyline points=\"" + points +
           "\" fill=\"none\" stroke=\"#c22\" stroke-width=\"2\" "
           "marker-end=\"url(#arrow)\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace windlab
