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

// SVG lattice diagrams. Output is a pure function of the spec: integer
// coordinates, fixed element order, no timestamps.

#pragma once

#include <string>
#include <vector>

#include "fermap/lattice.hpp"
#include "fermap/planner.hpp"

namespace fermap {

struct RenderOverlay {
  /// Arrows from each plaquette to the qubit carrying its mode (needs a plan).
  bool arrows = false;
  /// Part index next to each arrow and zero mode.
  bool part_labels = false;
  bool logicals = false;
  /// Zero-mode rings and parity markers on b1/w1 (needs a plan).
  bool mode_markers = false;
  bool plaquette_ids = false;
  std::vector<StringPath> strings;
};

struct RenderStyle {
  int cell = 80;
  int margin = 70;
  int qubit_radius = 7;
  std::string black_fill = "#404040";
  std::string white_fill = "#ffffff";
  std::string black_arrow = "#1f77b4";
  std::string white_arrow = "#ff7f0e";
  std::string x_logical = "#d62728";
  std::string z_logical = "#2ca02c";
  std::string marker = "#9467bd";
};

struct RenderSpec {
  const CodeLayout* layout = nullptr;
  const TransformPlan* plan = nullptr;
  RenderOverlay overlay;
  RenderStyle style;
};

/// Every overlay flag on except plaquette ids.
RenderOverlay full_overlay();

/// Throws std::invalid_argument when the overlay references a plaquette,
/// qubit or plan that does not belong to the layout.
std::string render_layout(const RenderSpec& spec);

}  // namespace fermap
