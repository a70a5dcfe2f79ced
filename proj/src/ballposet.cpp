#include "ultra/ballposet.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "ultra/errors.hpp"

namespace ultra {
namespace {

using Bits = boost::dynamic_bitset<>;

Bits to_bits(const std::vector<std::size_t>& members, std::size_t n) {
  Bits b(n);
  for (auto m : members) b.set(m);
  return b;
}

bool ball_order(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::size_t> image_of(const std::vector<std::size_t>& members,
                                  const PointMap& map) {
  std::vector<std::size_t> out;
  out.reserve(members.size());
  for (auto m : members) out.push_back(map(m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Ball> all_balls(const SemimetricSpace& space) {
  const auto radii = spectrum_of(space).values;
  std::map<std::vector<std::size_t>, Ball> found;
  for (std::size_t t = 0; t < space.size(); ++t) {
    for (const auto& r : radii) {
      std::vector<std::size_t> members;
      for (std::size_t x = 0; x < space.size(); ++x) {
        if (space.d(x, t) <= r) members.push_back(x);
      }
      found.try_emplace(members, Ball{members, t, r});
    }
  }
  std::vector<Ball> out;
  out.reserve(found.size());
  for (auto& [key, ball] : found) out.push_back(std::move(ball));
  std::sort(out.begin(), out.end(),
            [](const Ball& a, const Ball& b) { return ball_order(a.members, b.members); });
  return out;
}

std::size_t HasseDiagram::find(const std::vector<std::size_t>& members) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), members,
                             [](const Ball& b, const std::vector<std::size_t>& m) {
                               return ball_order(b.members, m);
                             });
  if (it == vertices.end() || it->members != members) return npos;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::size_t> HasseDiagram::direct_predecessors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [from, to] : arcs) {
    if (to == v) out.push_back(from);
  }
  return out;
}

HasseDiagram hasse_diagram(std::vector<Ball> balls) {
  std::sort(balls.begin(), balls.end(),
            [](const Ball& a, const Ball& b) { return ball_order(a.members, b.members); });
  balls.erase(std::unique(balls.begin(), balls.end(),
                          [](const Ball& a, const Ball& b) { return a.members == b.members; }),
              balls.end());
  std::size_t universe = 0;
  for (const auto& b : balls) {
    if (!b.members.empty()) universe = std::max(universe, b.members.back() + 1);
  }
  std::vector<Bits> bits;
  bits.reserve(balls.size());
  for (const auto& b : balls) bits.push_back(to_bits(b.members, universe));

  HasseDiagram out;
  for (std::size_t j = 0; j < balls.size(); ++j) {
    // Strict subsets of j, largest first; a candidate covered by j unless it
    // sits inside an already accepted (larger) one.
    std::vector<std::size_t> chosen;
    for (std::size_t i = j; i-- > 0;) {
      if (bits[i].count() == bits[j].count() || !bits[i].is_proper_subset_of(bits[j])) continue;
      const bool covered = std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
        return bits[i].is_subset_of(bits[c]);
      });
      if (!covered) chosen.push_back(i);
    }
    for (auto i : chosen) out.arcs.emplace_back(i, j);
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  out.vertices = std::move(balls);
  return out;
}

PointMap::PointMap(std::shared_ptr<const SemimetricSpace> from_space,
                   std::shared_ptr<const SemimetricSpace> to_space,
                   std::vector<std::size_t> assign)
    : from(std::move(from_space)), to(std::move(to_space)), assignment(std::move(assign)) {
  if (!from || !to) throw std::invalid_argument("point map needs both spaces");
  if (assignment.size() != from->size()) {
    throw std::invalid_argument("point map is not total on the source");
  }
  for (auto y : assignment) {
    if (y >= to->size()) throw std::invalid_argument("point map leaves the target");
  }
}

PointMap PointMap::from_labels(std::shared_ptr<const SemimetricSpace> from,
                               std::shared_ptr<const SemimetricSpace> to,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> assign(from->size(), unset);
  for (const auto& [x, y] : pairs) {
    const auto i = from->index_of(x);
    if (assign[i] != unset) throw std::invalid_argument("point '" + x + "' mapped twice");
    assign[i] = to->index_of(y);
  }
  if (std::find(assign.begin(), assign.end(), unset) != assign.end()) {
    throw std::invalid_argument("point map is not total on the source");
  }
  return PointMap(std::move(from), std::move(to), std::move(assign));
}

bool PointMap::is_surjective() const {
  std::vector<bool> hit(to->size(), false);
  for (auto y : assignment) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool PointMap::is_injective() const {
  std::set<std::size_t> seen(assignment.begin(), assignment.end());
  return seen.size() == assignment.size();
}

bool check_ball_preserving(const PointMap& map) {
  std::set<std::vector<std::size_t>> targets;
  for (auto& b : all_balls(*map.to)) targets.insert(std::move(b.members));
  for (const auto& b : all_balls(*map.from)) {
    if (!targets.contains(image_of(b.members, map))) return false;
  }
  return true;
}

std::string to_string(DiagramMapKind kind) {
  switch (kind) {
    case DiagramMapKind::iso: return "iso";
    case DiagramMapKind::hom_arc_surjective: return "hom_arc_surjective";
    case DiagramMapKind::hom_only: return "hom_only";
    case DiagramMapKind::not_hom: return "not_hom";
  }
  return "unknown";
}

DiagramMapKind check_arc_surjective_hom(const PointMap& map) {
  const HasseDiagram source = hasse_diagram(all_balls(*map.from));
  const HasseDiagram target = hasse_diagram(all_balls(*map.to));

  std::vector<std::size_t> vertex_map;
  vertex_map.reserve(source.vertices.size());
  for (const auto& b : source.vertices) {
    const auto v = target.find(image_of(b.members, map));
    if (v == HasseDiagram::npos) return DiagramMapKind::not_hom;
    vertex_map.push_back(v);
  }

  std::set<std::pair<std::size_t, std::size_t>> image_arcs;
  for (const auto& [a, b] : source.arcs) {
    std::pair<std::size_t, std::size_t> arc{vertex_map[a], vertex_map[b]};
    if (!std::binary_search(target.arcs.begin(), target.arcs.end(), arc)) {
      return DiagramMapKind::not_hom;
    }
    image_arcs.insert(arc);
  }
  if (image_arcs.size() != target.arcs.size()) return DiagramMapKind::hom_only;

  std::set<std::size_t> distinct(vertex_map.begin(), vertex_map.end());
  const bool bijective = distinct.size() == vertex_map.size() &&
                         vertex_map.size() == target.vertices.size();
  return bijective ? DiagramMapKind::iso : DiagramMapKind::hom_arc_surjective;
}

}  // namespace ultra
