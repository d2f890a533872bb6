#include <gtest/gtest.h>

#include <regex>

#include "sphcurve/render.hpp"

using namespace sphcurve;

namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(Render, Deterministic) {
  const auto w = parse_word("1 2 3 1 2 3");
  EXPECT_EQ(render_svg(w), render_svg(w));
  EXPECT_EQ(render_svg(w).rfind("<svg", 0), 0u);
  EXPECT_NE(render_svg(w).find("</svg>"), std::string::npos);
}

TEST(Render, TrefoilHasThreeChords) {
  const auto svg = render_svg(parse_word("1 2 3 1 2 3"));
  EXPECT_EQ(count(svg, "<line class=\"chord"), 3);
  EXPECT_EQ(count(svg, " free\""), 0);
}

TEST(Render, FreeChordHighlighted) {
  const auto svg = render_svg(parse_word("1 1 2 3 2 3"));
  EXPECT_EQ(count(svg, "<line class=\"chord"), 3);
  EXPECT_EQ(count(svg, "<line class=\"chord free\""), 1);
  EXPECT_NE(svg.find("data-label=\"1\""), std::string::npos);
  RenderStyle plain;
  plain.highlight_free = false;
  EXPECT_EQ(count(render_svg(parse_word("1 1 2 3 2 3"), plain), " free\""), 0);
}

TEST(Render, TrigonHighlighted) {
  RenderStyle style;
  style.trigon = std::array<Label, 3>{1, 2, 3};
  const auto svg = render_svg(parse_word("1 2 3 1 2 3"), style);
  EXPECT_EQ(count(svg, "<line class=\"chord trigon\""), 3);
}

TEST(Render, SizeControlsViewBox) {
  RenderStyle style;
  style.size = 200;
  const auto svg = render_svg(parse_word("1 1"), style);
  EXPECT_TRUE(std::regex_search(svg, std::regex("width=\"200\"")));
}
