// Copyright 2026 The hcover Authors
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


#ifndef HCOVER_SVG_HPP_
#define HCOVER_SVG_HPP_

// Display only: everything below converts to double and never feeds a solver.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hcover/geometry.hpp"
#include "hcover/instance.hpp"

namespace hcover {

namespace svg_detail {

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool empty = true;

  void add(double x, double y) {
    if (empty) {
      x0 = x1 = x;
      y0 = y1 = y;
      empty = false;
      return;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
};

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Segment of the line a x + b y = c inside the box, or nothing.
inline bool clip_line(double a, double b, double c, const Box& box, double out[4]) {
  std::vector<std::pair<double, double>> hits;
  auto push = [&](double x, double y) {
    const double tol = 1e-9 * (1 + std::abs(x) + std::abs(y));
    if (x < box.x0 - tol || x > box.x1 + tol || y < box.y0 - tol || y > box.y1 + tol) return;
    hits.emplace_back(x, y);
  };
  if (b != 0) {
    push(box.x0, (c - a * box.x0) / b);
    push(box.x1, (c - a * box.x1) / b);
  }
  if (a != 0) {
    push((c - b * box.y0) / a, box.y0);
    push((c - b * box.y1) / a, box.y1);
  }
  if (hits.empty()) return false;
  std::sort(hits.begin(), hits.end());
  out[0] = hits.front().first;
  out[1] = hits.front().second;
  out[2] = hits.back().first;
  out[3] = hits.back().second;
  return true;
}

}  // namespace svg_detail

// One path per halfplane boundary, clipped to a padded bounding box of the
// instance; halfplanes listed in `chosen` are drawn in a second colour.
inline std::string render_svg(const Instance& inst, std::span<const std::size_t> chosen = {}) {
  using svg_detail::num;
  svg_detail::Box box;
  for (const Point& p : inst.points) box.add(p.x.get_d(), p.y.get_d());
  for (const Point& p : inst.vertices) box.add(p.x.get_d(), p.y.get_d());
  if (inst.center) box.add(inst.center->x.get_d(), inst.center->y.get_d());
  if (box.empty) box.add(0, 0);
  // Make room for lines that miss the box: include the foot of the
  // perpendicular from the box centre.
  {
    const double cx = (box.x0 + box.x1) / 2, cy = (box.y0 + box.y1) / 2;
    for (const Halfplane& h : inst.halfplanes) {
      const double a = h.a.get_d(), b = h.b.get_d(), c = h.c.get_d();
      const double t = (c - a * cx - b * cy) / (a * a + b * b);
      box.add(cx + t * a, cy + t * b);
    }
  }
  const double pad = 0.1 * std::max({box.x1 - box.x0, box.y1 - box.y0, 1.0});
  box.x0 -= pad;
  box.y0 -= pad;
  box.x1 += pad;
  box.y1 += pad;
  const double w = box.x1 - box.x0, h = box.y1 - box.y0;
  const double r = 0.006 * std::max(w, h);

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(box.x0) + " " +
       num(-box.y1) + " " + num(w) + " " + num(h) + "\">\n";
  // y grows upward in the instance, downward in SVG.
  s += "<g transform=\"scale(1,-1)\" stroke-width=\"" + num(r / 2) + "\" fill=\"none\">\n";
  const std::set<std::size_t> picked(chosen.begin(), chosen.end());
  for (std::size_t i = 0; i < inst.halfplanes.size(); ++i) {
    const Halfplane& hp = inst.halfplanes[i];
    double seg[4];
    const char* colour = picked.count(i) != 0 ? "#d62728" : "#7f7f7f";
    if (!svg_detail::clip_line(hp.a.get_d(), hp.b.get_d(), hp.c.get_d(), box, seg)) {
      seg[0] = seg[2] = box.x0;
      seg[1] = seg[3] = box.y0;
    }
    s += "<path class=\"halfplane\" data-index=\"" + std::to_string(i) + "\" stroke=\"" + colour +
         "\" d=\"M " + num(seg[0]) + " " + num(seg[1]) + " L " + num(seg[2]) + " " + num(seg[3]) +
         "\"/>\n";
  }
  if (!inst.vertices.empty()) {
    std::string d;
    for (std::size_t k = 0; k < inst.vertices.size(); ++k) {
      d += (k == 0 ? "M " : " L ") + num(inst.vertices[k].x.get_d()) + " " + num(inst.vertices[k].y.get_d());
    }
    if (inst.kind == InstanceKind::kStar) d += " Z";
    s += "<path class=\"boundary\" stroke=\"#1f77b4\" d=\"" + d + "\"/>\n";
  }
  for (const Point& p : inst.points) {
    s += "<circle class=\"point\" fill=\"#000000\" cx=\"" + num(p.x.get_d()) + "\" cy=\"" + num(p.y.get_d()) +
         "\" r=\"" + num(r) + "\"/>\n";
  }
  if (inst.center) {
    s += "<circle class=\"center\" fill=\"#2ca02c\" cx=\"" + num(inst.center->x.get_d()) + "\" cy=\"" +
         num(inst.center->y.get_d()) + "\" r=\"" + num(r) + "\"/>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace hcover

#endif  // HCOVER_SVG_HPP_
