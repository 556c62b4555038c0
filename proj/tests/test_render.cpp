// Copyright 2026 The fermap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "fermap/render.hpp"

namespace fermap {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

std::string render_full(const CodeLayout& l, const TransformPlan& p) {
  RenderSpec spec;
  spec.layout = &l;
  spec.plan = &p;
  spec.overlay = full_overlay();
  return render_layout(spec);
}

TEST(Render, GoldenFiles) {
  const std::string dir = FERMAP_GOLDEN_DIR;
  for (auto [kind, d, file] : {std::tuple{CodeKind::Surface, 3, "surface_d3.svg"},
                               std::tuple{CodeKind::Toric, 4, "toric_d4.svg"},
                               std::tuple{CodeKind::Toric, 6, "toric_d6.svg"}}) {
    const CodeLayout l = build_code(kind, d);
    const std::string golden = slurp(dir + "/" + file);
    ASSERT_FALSE(golden.empty()) << file;
    EXPECT_EQ(render_full(l, plan_for(l)), golden) << file;
  }
}

TEST(Render, OverlayCounts) {
  const CodeLayout s = build_surface_code(3);
  const std::string svg3 = render_full(s, plan_for(s));
  EXPECT_EQ(count(svg3, "class=\"arrow "), 8u);
  EXPECT_EQ(count(svg3, "class=\"logical x\""), 2u + 3u);
  EXPECT_EQ(count(svg3, "class=\"zero-mode\""), 1u);

  const CodeLayout t = build_toric_code(4);
  const std::string svg = render_full(t, plan_for(t));
  EXPECT_EQ(count(svg, "class=\"arrow black\""), 7u);
  EXPECT_EQ(count(svg, "class=\"arrow white\""), 7u);
  EXPECT_EQ(count(svg, "class=\"parity-marker\""), 2u);
  EXPECT_EQ(count(svg, "class=\"zero-mode\""), 2u);
  EXPECT_EQ(count(svg, "stroke=\"#1f77b4\""), 7u);
  EXPECT_EQ(count(svg, "stroke=\"#ff7f0e\""), 7u);
}

TEST(Render, BareLatticeAndDeterminism) {
  const CodeLayout t = build_toric_code(4);
  RenderSpec spec;
  spec.layout = &t;
  const std::string bare = render_layout(spec);
  EXPECT_EQ(count(bare, "class=\"plaquette black\""), 8u);
  EXPECT_EQ(count(bare, "class=\"plaquette white\""), 8u);
  EXPECT_EQ(count(bare, "class=\"arrow"), 0u);
  EXPECT_EQ(bare, render_layout(spec));
  // Integer coordinates only.
  const std::regex fractional(R"re( (x|y|cx|cy|x1|y1|x2|y2|width|height|r)="-?[0-9]+\.)re");
  EXPECT_FALSE(std::regex_search(render_full(t, plan_for(t)), fractional));
}

TEST(Render, DanglingReferencesThrow) {
  const CodeLayout s = build_surface_code(3);
  TransformPlan p = plan_for(s);
  RenderSpec spec;
  spec.layout = &s;
  spec.overlay = full_overlay();
  EXPECT_THROW(render_layout(spec), std::invalid_argument);

  spec.plan = &p;
  p.mode_map.dynamic_modes[42] = 0;
  EXPECT_THROW(render_layout(spec), std::invalid_argument);

  p = plan_for(s);
  p.mode_map.dynamic_modes[0] = 8;
  EXPECT_THROW(render_layout(spec), std::invalid_argument);

  p = plan_for(s);
  p.mode_map.zero_modes = {99};
  EXPECT_THROW(render_layout(spec), std::invalid_argument);

  const TransformPlan other = plan_for(build_surface_code(5));
  spec.plan = &other;
  EXPECT_THROW(render_layout(spec), std::invalid_argument);

  spec.plan = nullptr;
  spec.overlay = RenderOverlay{};
  spec.overlay.strings.push_back({StringKind::X, {0, 9}});
  EXPECT_THROW(render_layout(spec), std::invalid_argument);
}

}  // namespace
}  // namespace fermap
