#pragma once

// SVG chord diagrams. Output is a pure function of the word and the style,
// with coordinates printed at fixed precision.

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "sphcurve/gauss_word.hpp"

namespace sphcurve {

struct RenderStyle {
  int size = 400;
  bool highlight_free = true;
  std::optional<std::array<Label, 3>> trigon;  // chords to highlight as a trigon
  bool show_positions = false;
};

namespace detail {

inline std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

}  // namespace detail

inline std::string render_svg(const GaussWord& w, const RenderStyle& style = {}) {
  const double size = style.size;
  const double cx = size / 2;
  const double cy = size / 2;
  const double r = size * 0.38;
  const int len = static_cast<int>(w.size());
  auto point = [&](int pos, double radius) {
    // position 0 at the top, counterclockwise
    const double t = std::numbers::pi / 2 + 2 * std::numbers::pi * pos / len;
    return std::array<double, 2>{cx + radius * std::cos(t), cy - radius * std::sin(t)};
  };

  std::vector<char> is_free(static_cast<std::size_t>(w.crossings()) + 1, 0);
  if (style.highlight_free)
    for (Label a : free_chords(w)) is_free[static_cast<std::size_t>(a)] = 1;
  std::vector<char> in_trigon(static_cast<std::size_t>(w.crossings()) + 1, 0);
  if (style.trigon) {
    for (Label a : *style.trigon) {
      w.require_label(a);
      in_trigon[static_cast<std::size_t>(a)] = 1;
    }
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.size << "\" height=\"" << style.size
      << "\" viewBox=\"0 0 " << style.size << ' ' << style.size << "\">\n";
  out << "  <title>" << w.str() << "</title>\n";
  out << "  <circle class=\"curve\" cx=\"" << detail::fixed(cx) << "\" cy=\"" << detail::fixed(cy) << "\" r=\""
      << detail::fixed(r) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

  for (Label a = 1; a <= w.crossings(); ++a) {
    const auto pos = w.positions(a);
    const auto p = point(pos[0], r);
    const auto q = point(pos[1], r);
    std::string cls = "chord";
    std::string color = "#3465a4";
    if (in_trigon[static_cast<std::size_t>(a)]) {
      cls += " trigon";
      color = "#4e9a06";
    }
    if (is_free[static_cast<std::size_t>(a)]) {
      cls += " free";
      color = "#cc0000";
    }
    out << "  <line class=\"" << cls << "\" data-label=\"" << a << "\" x1=\"" << detail::fixed(p[0]) << "\" y1=\""
        << detail::fixed(p[1]) << "\" x2=\"" << detail::fixed(q[0]) << "\" y2=\"" << detail::fixed(q[1])
        << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
  }
  for (int k = 0; k < len; ++k) {
    const auto p = point(k, r);
    const auto t = point(k, r + size * 0.06);
    out << "  <circle class=\"endpoint\" cx=\"" << detail::fixed(p[0]) << "\" cy=\"" << detail::fixed(p[1])
        << "\" r=\"3\" fill=\"black\"/>\n";
    out << "  <text x=\"" << detail::fixed(t[0]) << "\" y=\"" << detail::fixed(t[1])
        << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << w[static_cast<std::size_t>(k)];
    if (style.show_positions) out << "<tspan font-size=\"9\" dy=\"4\">" << k << "</tspan>";
    out << "</text>\n";
  }
  // direction of travel
  const auto a0 = point(0, r);
  const auto a1 = point(0, r - 10);
  out << "  <path class=\"start\" d=\"M " << detail::fixed(a1[0] - 6) << ' ' << detail::fixed(a1[1]) << " L "
      << detail::fixed(a0[0]) << ' ' << detail::fixed(a0[1]) << " L " << detail::fixed(a1[0] + 6) << ' '
      << detail::fixed(a1[1]) << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace sphcurve
