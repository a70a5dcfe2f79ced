#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Closed ball {x : d(x, center) <= radius}. Identified by its members; the
/// witness is the smallest center index, then the smallest radius.
struct Ball {
  std::vector<std::size_t> members;  // ascending point indices
  std::size_t center = 0;
  Rational radius;
};

/// Every distinct closed ball, scanning all centers and radii in Sp X.
/// Sorted by member count, then lexicographically by members.
std::vector<Ball> all_balls(const SemimetricSpace& space);

/// Covering relation of (balls, inclusion).
struct HasseDiagram {
  std::vector<Ball> vertices;  // order of all_balls
  /// (i, j): vertex i is a direct predecessor of vertex j, i.e. i is a
  /// maximal ball strictly inside j. Sorted.
  std::vector<std::pair<std::size_t, std::size_t>> arcs;

  /// Vertex holding exactly these members, or npos.
  std::size_t find(const std::vector<std::size_t>& members) const;
  std::vector<std::size_t> direct_predecessors(std::size_t v) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

HasseDiagram hasse_diagram(std::vector<Ball> balls);

/// Total map between two spaces, on point indices.
struct PointMap {
  std::shared_ptr<const SemimetricSpace> from;
  std::shared_ptr<const SemimetricSpace> to;
  std::vector<std::size_t> assignment;

  PointMap(std::shared_ptr<const SemimetricSpace> from,
           std::shared_ptr<const SemimetricSpace> to,
           std::vector<std::size_t> assignment);

  /// Builds from (source label, target label) pairs; throws UnknownPoint and
  /// std::invalid_argument when not total.
  static PointMap from_labels(std::shared_ptr<const SemimetricSpace> from,
                              std::shared_ptr<const SemimetricSpace> to,
                              const std::vector<std::pair<std::string, std::string>>& pairs);

  std::size_t operator()(std::size_t x) const { return assignment[x]; }
  bool is_surjective() const;
  bool is_injective() const;
};

/// The image of every ball of the source is a ball of the target.
bool check_ball_preserving(const PointMap& map);

enum class DiagramMapKind { iso, hom_arc_surjective, hom_only, not_hom };

std::string to_string(DiagramMapKind kind);

/// Classifies B -> F(B) as a map between the Hasse diagrams. not_hom when
/// some ball image is not a ball or some arc is not sent to an arc.
DiagramMapKind check_arc_surjective_hom(const PointMap& map);

}  // namespace ultra
