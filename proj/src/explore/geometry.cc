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

#include "gut/explore/geometry.h"

#include <algorithm>
#include <numbers>

#include <fmt/format.h>

#include "gut/error.h"

namespace gut::explore {
namespace {

constexpr double kBoundaryStep = 0.3;  // radians per boundary waypoint

Vec2 OnCircle(const Circle& c, double angle) {
  return c.center + Vec2{std::cos(angle), std::sin(angle)} * c.radius;
}

std::vector<Slot> Polygon(std::span<const int> ids, Vec2 anchor,
                          double spacing, double start_angle) {
  const std::size_t n = ids.size();
  std::vector<Slot> out;
  if (n == 1) {
    out.push_back({ids[0], anchor});
    return out;
  }
  const double chord_radius =
      spacing / (2.0 * std::sin(std::numbers::pi / static_cast<double>(n)));
  const Circle ring{anchor, std::max(spacing, chord_radius)};
  for (std::size_t i = 0; i < n; ++i) {
    const double angle =
        start_angle + 2.0 * std::numbers::pi * static_cast<double>(i) /
                          static_cast<double>(n);
    out.push_back({ids[i], OnCircle(ring, angle)});
  }
  return out;
}

}  // namespace

Vec2 Vec2::Normalized() const {
  const double n = Norm();
  if (n == 0.0) return {1.0, 0.0};
  return {x / n, y / n};
}

double SegmentEntry(Vec2 a, Vec2 b, const Circle& c) {
  const Vec2 d = b - a;
  const Vec2 f = a - c.center;
  const double qa = d.Dot(d);
  const double qc = f.Dot(f) - c.radius * c.radius;
  if (qc < 0.0) return 0.0;  // starts inside
  if (qa == 0.0) return -1.0;
  const double qb = 2.0 * f.Dot(d);
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc <= 0.0) return -1.0;
  const double t = (-qb - std::sqrt(disc)) / (2.0 * qa);
  return (t >= 0.0 && t <= 1.0) ? t : -1.0;
}

bool SegmentIntersects(Vec2 a, Vec2 b, const Circle& c) {
  return SegmentEntry(a, b, c) >= 0.0;
}

std::string_view FormationName(FormationKind kind) {
  switch (kind) {
    case FormationKind::kPatrol: return "patrol";
    case FormationKind::kAttackTriangle: return "attack_triangle";
    case FormationKind::kDefendPolygon: return "defend_polygon";
    case FormationKind::kTreasureCircle: return "treasure_circle";
  }
  return "unknown";
}

std::vector<Slot> FormationTargets(const Formation& formation,
                                   std::span<const int> member_ids, Vec2 anchor,
                                   Vec2 heading) {
  if (member_ids.empty()) {
    throw Error(ErrorCode::kEmptyGroup, "formation without members");
  }
  if (!(formation.spacing > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "formation spacing must be > 0");
  }
  std::vector<int> ids(member_ids.begin(), member_ids.end());
  std::sort(ids.begin(), ids.end());
  const double s = formation.spacing;
  const Vec2 h = heading.Normalized();
  const Vec2 p = h.Perp();
  const std::size_t n = ids.size();

  std::vector<Slot> out;
  out.reserve(n);
  switch (formation.kind) {
    case FormationKind::kPatrol: {
      const double mid = (static_cast<double>(n) - 1.0) / 2.0;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back({ids[i], anchor + p * ((static_cast<double>(i) - mid) * s)});
      }
      break;
    }
    case FormationKind::kAttackTriangle: {
      // Triangular lattice: row r holds r + 1 members, rows recede from the
      // apex by s*sqrt(3)/2 so every neighbour pair is s apart.
      const double row_depth = s * std::numbers::sqrt3 / 2.0;
      std::size_t placed = 0;
      for (std::size_t row = 0; placed < n; ++row) {
        for (std::size_t j = 0; j <= row && placed < n; ++j, ++placed) {
          const double lateral =
              (static_cast<double>(j) - static_cast<double>(row) / 2.0) * s;
          out.push_back({ids[placed], anchor - h * (static_cast<double>(row) *
                                                    row_depth) +
                                          p * lateral});
        }
      }
      break;
    }
    case FormationKind::kDefendPolygon:
      out = Polygon(ids, anchor, s, std::atan2(h.y, h.x));
      break;
    case FormationKind::kTreasureCircle:
      out = Polygon(ids, anchor, s, 0.0);
      break;
  }
  return out;
}

Vec2 AvoidObstacles(Vec2 from, Vec2 to, std::span<const Circle> obstacles,
                    double clearance) {
  for (const Circle& c : obstacles) {
    if (c.Contains(to)) {
      throw Error(ErrorCode::kNoPath,
                  fmt::format("goal ({:.3f}, {:.3f}) lies inside an obstacle",
                              to.x, to.y));
    }
  }

  // First blocking circle along the segment. Obstacles are tested at half
  // the clearance so an agent riding the full-clearance boundary is clear.
  const Circle* blocking = nullptr;
  double first = 2.0;
  for (const Circle& c : obstacles) {
    const Circle core{c.center, c.radius + 0.5 * clearance};
    const double t = SegmentEntry(from, to, core);
    if (t < 0.0) continue;
    const Vec2 outward = from - c.center;
    if (t == 0.0 && outward.Dot(to - from) >= 0.0) continue;  // leaving it
    if (t < first) {
      first = t;
      blocking = &c;
    }
  }
  if (blocking == nullptr) return to;

  const Circle ring{blocking->center, blocking->radius + clearance};
  const Vec2 rel = from - ring.center;
  const double dist = rel.Norm();
  const double angle = std::atan2(rel.y, rel.x);

  if (dist <= ring.radius * (1.0 + 1e-6)) {
    // On or inside the clearance ring: walk along it toward the goal side.
    const double side = rel.Cross(to - ring.center) >= 0.0 ? 1.0 : -1.0;
    return OnCircle(ring, angle + side * kBoundaryStep);
  }

  const double spread = std::acos(ring.radius / dist);
  const Vec2 left = OnCircle(ring, angle + spread);
  const Vec2 right = OnCircle(ring, angle - spread);
  const double via_left = Distance(from, left) + Distance(left, to);
  const double via_right = Distance(from, right) + Distance(right, to);
  return via_right < via_left ? right : left;
}

}  // namespace gut::explore
