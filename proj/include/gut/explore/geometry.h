// Copyright 2026 The GUT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GUT_EXPLORE_GEOMETRY_H_
#define GUT_EXPLORE_GEOMETRY_H_

#include <cmath>
#include <span>
#include <string_view>
#include <vector>

namespace gut::explore {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  bool operator==(const Vec2&) const = default;

  double Dot(Vec2 o) const { return x * o.x + y * o.y; }
  double Cross(Vec2 o) const { return x * o.y - y * o.x; }
  double Norm() const { return std::hypot(x, y); }
  // Unit vector; the zero vector maps to +x.
  Vec2 Normalized() const;
  // Rotated 90 degrees counter-clockwise.
  Vec2 Perp() const { return {-y, x}; }
};

inline double Distance(Vec2 a, Vec2 b) { return (a - b).Norm(); }

struct Circle {
  Vec2 center;
  double radius = 0.0;

  bool Contains(Vec2 p) const { return Distance(p, center) < radius; }
};

// True when the segment a-b passes strictly inside `c`.
bool SegmentIntersects(Vec2 a, Vec2 b, const Circle& c);

// Entry parameter t in [0, 1] of segment a-b into `c`, or a negative value
// when it misses.
double SegmentEntry(Vec2 a, Vec2 b, const Circle& c);

enum class FormationKind { kPatrol, kAttackTriangle, kDefendPolygon, kTreasureCircle };

std::string_view FormationName(FormationKind kind);

struct Formation {
  FormationKind kind = FormationKind::kPatrol;
  double spacing = 0.3;  // meters, > 0
};

struct Slot {
  int id = 0;
  Vec2 position;
};

// Slot positions for `member_ids` around `anchor`. `heading` orients the
// triangle (apex at the anchor, pointing along heading), the patrol line
// (perpendicular to heading) and the polygon's first vertex. Slots are
// assigned in ascending id order and returned sorted by id. Throws
// kEmptyGroup when there are no members.
std::vector<Slot> FormationTargets(const Formation& formation,
                                   std::span<const int> member_ids, Vec2 anchor,
                                   Vec2 heading = {1.0, 0.0});

inline constexpr double kDefaultClearance = 0.15;

// Next waypoint on the way from `from` to `to`. Returns `to` when the
// straight segment is clear; otherwise steers around the first blocking
// circle, either toward the tangent point of the circle grown by
// `clearance` or, once on that boundary, along it toward the goal side.
// Throws kNoPath when `to` lies inside an obstacle.
Vec2 AvoidObstacles(Vec2 from, Vec2 to, std::span<const Circle> obstacles,
                    double clearance = kDefaultClearance);

}  // namespace gut::explore

#endif  // GUT_EXPLORE_GEOMETRY_H_
