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

#include "fermap/render.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fermap {
namespace {

struct Pt {
  long x;
  long y;
};

class Canvas {
 public:
  Canvas(const CodeLayout& layout, const RenderStyle& style) : layout_(layout), style_(style) {}

  // Grid position (row, col) may sit one step outside the lattice.
  Pt at(int row, int col) const {
    return {style_.margin + static_cast<long>(col) * style_.cell,
            style_.margin + static_cast<long>(row) * style_.cell};
  }
  Pt qubit(Qubit q) const { return at(layout_.row_of(q), layout_.col_of(q)); }

  Pt corner(const Plaquette& p, int slot) const {
    return at(p.anchor_row + slot / 2, p.anchor_col + slot % 2);
  }

  // Outward unit direction of a surface boundary plaquette, (0,0) for bulk.
  Pt outward(const Plaquette& p) const {
    if (p.weight() == 4) return {0, 0};
    const int d = layout_.d();
    if (p.anchor_col == -1) return {-1, 0};
    if (p.anchor_col == d - 1) return {1, 0};
    if (p.anchor_row == -1) return {0, -1};
    return {0, 1};
  }

  Pt center(const Plaquette& p) const {
    if (p.weight() == 4) {
      const Pt tl = at(p.anchor_row, p.anchor_col);
      return {tl.x + style_.cell / 2, tl.y + style_.cell / 2};
    }
    const Pt a = qubit(p.qubits[0]);
    const Pt b = qubit(p.qubits[1]);
    const Pt o = outward(p);
    return {(a.x + b.x) / 2 + o.x * style_.cell / 4, (a.y + b.y) / 2 + o.y * style_.cell / 4};
  }

  int width() const { return 2 * style_.margin + extent() * style_.cell; }
  int height() const { return width(); }
  int extent() const { return layout_.kind() == CodeKind::Toric ? layout_.d() : layout_.d() - 1; }

 private:
  const CodeLayout& layout_;
  const RenderStyle& style_;
};

int slot_of(const Plaquette& p, Qubit q) {
  for (int k = 0; k < 4; ++k) {
    if (p.corners[static_cast<std::size_t>(k)] == q) return k;
  }
  return -1;
}

Pt shorten(Pt from, Pt to, int by) {
  const double dx = static_cast<double>(to.x - from.x);
  const double dy = static_cast<double>(to.y - from.y);
  const double len = std::hypot(dx, dy);
  if (len <= by) return from;
  return {to.x - std::lround(dx / len * by), to.y - std::lround(dy / len * by)};
}

std::string pts(Pt p) { return std::to_string(p.x) + "," + std::to_string(p.y); }

void check_overlay(const RenderSpec& spec) {
  const CodeLayout& layout = *spec.layout;
  const std::size_t n = layout.n();
  auto has_plaquette = [&](int id) {
    return id >= 0 && static_cast<std::size_t>(id) < layout.plaquettes().size();
  };
  for (const auto& s : spec.overlay.strings) {
    for (Qubit q : s.qubits) {
      if (q >= n) throw std::invalid_argument("string path references qubit " + std::to_string(q));
    }
  }
  const bool needs_plan = spec.overlay.arrows || spec.overlay.mode_markers || spec.overlay.part_labels;
  if (!spec.plan) {
    if (needs_plan) throw std::invalid_argument("arrow and mode overlays need a plan");
    return;
  }
  const TransformPlan& plan = *spec.plan;
  if (plan.kind != layout.kind() || plan.d != layout.d()) {
    throw std::invalid_argument("plan does not belong to this layout");
  }
  for (const auto& [id, q] : plan.mode_map.dynamic_modes) {
    if (!has_plaquette(id)) throw std::invalid_argument("mode map references plaquette " + std::to_string(id));
    if (slot_of(layout.plaquette(id), q) < 0) {
      throw std::invalid_argument("mode qubit " + std::to_string(q) + " is not a corner of plaquette " +
                                  std::to_string(id));
    }
  }
  for (Qubit q : plan.mode_map.zero_modes) {
    if (q >= n) throw std::invalid_argument("zero mode references qubit " + std::to_string(q));
  }
  for (int id : plan.mode_map.parity_plaquettes) {
    if (!has_plaquette(id)) throw std::invalid_argument("parity marker references plaquette " + std::to_string(id));
  }
  for (const auto& step : plan.steps) {
    if (step.provenance.kind == Provenance::Kind::Plaquette && !has_plaquette(step.provenance.plaquette_id)) {
      throw std::invalid_argument("plan step references plaquette " +
                                  std::to_string(step.provenance.plaquette_id));
    }
  }
}

}  // namespace

RenderOverlay full_overlay() {
  RenderOverlay o;
  o.arrows = true;
  o.part_labels = true;
  o.logicals = true;
  o.mode_markers = true;
  return o;
}

std::string render_layout(const RenderSpec& spec) {
  if (!spec.layout) throw std::invalid_argument("render spec has no layout");
  check_overlay(spec);
  const CodeLayout& layout = *spec.layout;
  const RenderStyle& st = spec.style;
  const Canvas cv(layout, st);
  const int d = layout.d();
  const bool toric = layout.kind() == CodeKind::Toric;
  std::ostringstream o;

  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cv.width() << "\" height=\"" << cv.height()
    << "\" viewBox=\"0 0 " << cv.width() << ' ' << cv.height() << "\" font-family=\"sans-serif\">\n";
  o << "<title>" << to_string(layout.kind()) << " code d=" << d << "</title>\n";
  o << "<defs>\n";
  for (const auto& [name, color] : {std::pair<std::string, std::string>{"black", st.black_arrow},
                                    std::pair<std::string, std::string>{"white", st.white_arrow}}) {
    o << "<marker id=\"head-" << name << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\""
      << " markerHeight=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"" << color
      << "\"/></marker>\n";
  }
  o << "</defs>\n";
  o << "<rect width=\"" << cv.width() << "\" height=\"" << cv.height() << "\" fill=\"#f8f8f8\"/>\n";

  o << "<g id=\"plaquettes\" stroke=\"#202020\" stroke-width=\"1\">\n";
  for (const auto& p : layout.plaquettes()) {
    const std::string cls = p.color == Color::Black ? "black" : "white";
    const std::string& fill = p.color == Color::Black ? st.black_fill : st.white_fill;
    if (p.weight() == 4) {
      const Pt tl = cv.at(p.anchor_row, p.anchor_col);
      o << "<rect class=\"plaquette " << cls << "\" data-id=\"" << p.id << "\" x=\"" << tl.x << "\" y=\"" << tl.y
        << "\" width=\"" << st.cell << "\" height=\"" << st.cell << "\" fill=\"" << fill << "\"/>\n";
    } else {
      const Pt a = cv.qubit(p.qubits[0]);
      const Pt b = cv.qubit(p.qubits[1]);
      const Pt out = cv.outward(p);
      const long cross = (b.x - a.x) * out.y - (b.y - a.y) * out.x;
      o << "<path class=\"plaquette " << cls << "\" data-id=\"" << p.id << "\" d=\"M" << pts(a) << " A"
        << st.cell / 2 << ',' << st.cell / 2 << " 0 0 " << (cross > 0 ? 0 : 1) << ' ' << pts(b)
        << " Z\" fill=\"" << fill << "\"/>\n";
    }
  }
  o << "</g>\n";

  if (toric) {
    o << "<g id=\"ghosts\" fill=\"none\" stroke=\"#909090\" stroke-dasharray=\"3,3\">\n";
    for (int k = 0; k <= d; ++k) {
      const Pt g = cv.at(d, k);
      o << "<circle class=\"ghost\" cx=\"" << g.x << "\" cy=\"" << g.y << "\" r=\"" << st.qubit_radius << "\"/>\n";
    }
    for (int k = 0; k < d; ++k) {
      const Pt g = cv.at(k, d);
      o << "<circle class=\"ghost\" cx=\"" << g.x << "\" cy=\"" << g.y << "\" r=\"" << st.qubit_radius << "\"/>\n";
    }
    o << "</g>\n";
  }

  o << "<g id=\"qubits\" fill=\"#ffffff\" stroke=\"#202020\" stroke-width=\"1.5\">\n";
  for (Qubit q = 0; q < layout.n(); ++q) {
    const Pt c = cv.qubit(q);
    o << "<circle class=\"qubit\" data-q=\"" << q << "\" cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\""
      << st.qubit_radius << "\"/>\n";
  }
  o << "</g>\n";

  // Paths: consecutive qubits are drawn as lattice steps; a periodic step
  // goes to the ghost copy instead of across the figure.
  auto draw_path = [&](const std::vector<Qubit>& path, const std::string& cls, const std::string& color,
                       const std::string& dash, bool closed) {
    for (std::size_t i = 0; i + 1 < path.size() + (closed ? 1 : 0); ++i) {
      const Qubit a = path[i];
      const Qubit b = path[(i + 1) % path.size()];
      int ra = layout.row_of(a), ca = layout.col_of(a);
      int rb = layout.row_of(b), cb = layout.col_of(b);
      if (toric) {
        if (rb - ra == d - 1) ra += d;
        if (ra - rb == d - 1) rb += d;
        if (cb - ca == d - 1) ca += d;
        if (ca - cb == d - 1) cb += d;
      }
      if (std::abs(ra - rb) + std::abs(ca - cb) != 1) continue;
      const Pt pa = cv.at(ra, ca);
      const Pt pb = cv.at(rb, cb);
      o << "<line class=\"" << cls << "\" x1=\"" << pa.x << "\" y1=\"" << pa.y << "\" x2=\"" << pb.x << "\" y2=\""
        << pb.y << "\" stroke=\"" << color << "\"" << dash << "/>\n";
    }
    for (Qubit q : path) {
      const Pt c = cv.qubit(q);
      o << "<circle class=\"" << cls << "\" cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"" << st.qubit_radius - 2
        << "\" fill=\"" << color << "\" stroke=\"none\"/>\n";
    }
  };

  if (spec.overlay.logicals) {
    o << "<g id=\"logicals\" stroke-width=\"5\" stroke-opacity=\"0.75\" stroke-linecap=\"round\">\n";
    for (const auto& l : layout.logicals()) {
      const bool is_x = l.label[0] == 'X';
      draw_path(l.path, is_x ? "logical x" : "logical z", is_x ? st.x_logical : st.z_logical, "", toric);
      const Pt c = cv.qubit(l.path[std::min<std::size_t>(1, l.path.size() - 1)]);
      o << "<text class=\"logical-label\" x=\"" << c.x + 10 << "\" y=\"" << c.y - 10 << "\" font-size=\"13\" fill=\""
        << (is_x ? st.x_logical : st.z_logical) << "\">" << l.label << "</text>\n";
    }
    o << "</g>\n";
  }

  if (!spec.overlay.strings.empty()) {
    o << "<g id=\"strings\" stroke-width=\"3\">\n";
    for (const auto& s : spec.overlay.strings) {
      const bool is_x = s.kind == StringKind::X;
      draw_path(s.qubits, is_x ? "string x" : "string z", is_x ? st.x_logical : st.z_logical,
                " stroke-dasharray=\"6,4\"", false);
    }
    o << "</g>\n";
  }

  std::map<int, int> part_of;
  std::map<std::string, int> logical_part;
  if (spec.plan) {
    for (const auto& step : spec.plan->steps) {
      if (step.provenance.kind == Provenance::Kind::Plaquette) {
        part_of[step.provenance.plaquette_id] = step.part;
      } else {
        logical_part[step.provenance.logical_label] = step.part;
      }
    }
  }

  if (spec.overlay.arrows) {
    o << "<g id=\"arrows\" stroke-width=\"3\" fill=\"none\">\n";
    for (const auto& [id, q] : spec.plan->mode_map.dynamic_modes) {
      const Plaquette& p = layout.plaquette(id);
      const bool black = p.color == Color::Black;
      const Pt from = cv.center(p);
      const Pt to = shorten(from, cv.corner(p, slot_of(p, q)), st.qubit_radius + 3);
      o << "<line class=\"arrow " << (black ? "black" : "white") << "\" data-id=\"" << id << "\" x1=\"" << from.x
        << "\" y1=\"" << from.y << "\" x2=\"" << to.x << "\" y2=\"" << to.y << "\" stroke=\""
        << (black ? st.black_arrow : st.white_arrow) << "\" marker-end=\"url(#head-" << (black ? "black" : "white")
        << ")\"/>\n";
    }
    o << "</g>\n";
  }

  if (spec.overlay.mode_markers) {
    o << "<g id=\"markers\" stroke=\"" << st.marker << "\" stroke-width=\"2.5\" fill=\"none\">\n";
    for (Qubit q : spec.plan->mode_map.zero_modes) {
      const Pt c = cv.qubit(q);
      o << "<circle class=\"zero-mode\" cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"" << st.qubit_radius + 6
        << "\"/>\n";
    }
    for (int id : spec.plan->mode_map.parity_plaquettes) {
      const Plaquette& p = layout.plaquette(id);
      const Pt c = cv.center(p);
      const int r = st.cell / 5;
      o << "<polygon class=\"parity-marker\" points=\"" << c.x << ',' << c.y - r << ' ' << c.x + r << ',' << c.y
        << ' ' << c.x << ',' << c.y + r << ' ' << c.x - r << ',' << c.y << "\" fill=\"" << st.white_fill
        << "\"/>\n";
      o << "<text class=\"parity-label\" x=\"" << c.x << "\" y=\"" << c.y + 4
        << "\" font-size=\"11\" text-anchor=\"middle\" stroke=\"none\" fill=\"" << st.marker << "\">"
        << (p.color == Color::Black ? "Sb" : "Sw") << "</text>\n";
    }
    o << "</g>\n";
  }

  if (spec.overlay.part_labels) {
    o << "<g id=\"part-labels\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (const auto& [id, q] : spec.plan->mode_map.dynamic_modes) {
      auto it = part_of.find(id);
      if (it == part_of.end()) continue;
      const Plaquette& p = layout.plaquette(id);
      const Pt c = cv.center(p);
      const Pt t = cv.corner(p, slot_of(p, q));
      // Opposite side of the centre from the arrow.
      const Pt away = shorten(t, c, -12);
      o << "<text class=\"part-label\" x=\"" << away.x << "\" y=\"" << away.y + 4 << "\" fill=\""
        << (p.color == Color::Black ? st.white_fill : "#202020") << "\">U" << it->second + 1 << "</text>\n";
    }
    // One label per zero mode listing the logical parts that end there.
    std::map<Qubit, std::string> at_mode;
    for (const auto& [label, q] : spec.plan->mode_map.logical_modes) {
      auto it = logical_part.find(label);
      if (it == logical_part.end()) continue;
      std::string& text = at_mode[q];
      text += (text.empty() ? "U" : ",U") + std::to_string(it->second + 1);
    }
    for (const auto& [q, text] : at_mode) {
      const Pt c = cv.qubit(q);
      o << "<text class=\"part-label\" x=\"" << c.x - 30 << "\" y=\"" << c.y + 28 << "\" fill=\"#202020\">" << text
        << "</text>\n";
    }
    o << "</g>\n";
  }

  if (spec.overlay.plaquette_ids) {
    o << "<g id=\"plaquette-ids\" font-size=\"10\" fill=\"#808080\">\n";
    for (const auto& p : layout.plaquettes()) {
      const Pt c = cv.center(p);
      o << "<text x=\"" << c.x + 6 << "\" y=\"" << c.y + 16 << "\">" << p.id << "</text>\n";
    }
    o << "</g>\n";
  }

  o << "</svg>\n";
  return o.str();
}

}  // namespace fermap
