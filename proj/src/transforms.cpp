#include "ultra/transforms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "ultra/errors.hpp"
#include "ultra/extremal.hpp"

namespace ultra {

LiftResult lift_semimetric(const SemimetricSpace& space) {
  if (space.size() == 0) throw EmptySpace("cannot lift an empty space");
  const HasseDiagram diagram = hasse_diagram(all_balls(space));
  const std::size_t count = diagram.vertices.size();

  std::vector<std::vector<std::size_t>> preds(count);
  for (const auto& [from, to] : diagram.arcs) preds[to].push_back(from);

  // Vertices are sorted by size, so predecessors come first.
  std::vector<std::size_t> height(count, 0), leaves(count, 1);
  for (std::size_t v = 0; v < count; ++v) {
    if (preds[v].empty()) continue;
    leaves[v] = 0;
    for (auto p : preds[v]) {
      height[v] = std::max(height[v], height[p] + 1);
      leaves[v] = std::min(leaves[v] + leaves[p], kMaxLiftPoints + 1);
    }
  }
  const std::size_t root = count - 1;
  if (leaves[root] > kMaxLiftPoints) {
    throw Oversize("lift would have more than " + std::to_string(kMaxLiftPoints) + " points");
  }

  std::vector<RepTree::Node> nodes;
  std::vector<std::size_t> source_of;  // lifted point -> source point
  std::function<std::size_t(std::size_t)> unfold = [&](std::size_t v) -> std::size_t {
    const std::size_t id = nodes.size();
    nodes.emplace_back();
    if (preds[v].empty()) {
      const auto& members = diagram.vertices[v].members;
      if (members.size() != 1) throw InternalError("minimal ball is not a singleton");
      nodes[id].point = source_of.size();
      source_of.push_back(members.front());
      return id;
    }
    nodes[id].label = static_cast<long long>(height[v]);
    std::vector<std::size_t> kids;
    for (auto p : preds[v]) kids.push_back(unfold(p));
    nodes[id].children = std::move(kids);
    return id;
  };
  unfold(root);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < source_of.size(); ++i) names.push_back("y" + std::to_string(i + 1));
  RepTree tree(names, std::move(nodes), 0);
  auto lifted = std::make_shared<const UltrametricSpace>(realize(tree));
  auto source = std::make_shared<const SemimetricSpace>(space);
  PointMap projection(lifted, source, std::move(source_of));
  return LiftResult{std::move(lifted), std::move(projection), std::move(tree)};
}

Approximation approximate_extremal(const UltrametricSpace& space, const Rational& epsilon) {
  if (epsilon <= 0) throw BadEpsilon("epsilon must be positive");
  auto target = std::make_shared<const UltrametricSpace>(space);
  std::vector<std::size_t> identity(space.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  if (space.size() <= 2) {
    return Approximation{target, EpsIsometryWitness{PointMap(target, target, identity), epsilon, 0}};
  }

  const RepTree tree = build_representing_tree(space);

  std::vector<Rational> labels;
  std::optional<Rational> gap;
  auto consider = [&](const Rational& diff) {
    if (diff > 0 && (!gap || diff < *gap)) gap = diff;
  };
  for (const auto& node : tree.nodes()) {
    if (node.is_leaf()) continue;
    labels.push_back(node.label);
    for (auto c : node.children) consider(node.label - tree.node(c).label);
  }
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 1; i < labels.size(); ++i) consider(labels[i] - labels[i - 1]);

  // Binarize: children c1..ck become ((c1, c2), c3) ... ck, all at the
  // parent's label.
  std::vector<RepTree::Node> nodes = tree.nodes();
  for (std::size_t v = 0, original = nodes.size(); v < original; ++v) {
    if (nodes[v].is_leaf() || nodes[v].children.size() <= 2) continue;
    const auto kids = nodes[v].children;
    std::size_t acc = kids[0];
    for (std::size_t i = 1; i + 1 < kids.size(); ++i) {
      RepTree::Node inner;
      inner.label = nodes[v].label;
      inner.children = {acc, kids[i]};
      acc = nodes.size();
      nodes.push_back(std::move(inner));
    }
    nodes[v].children = {acc, kids.back()};
  }
  const std::size_t internal = space.size() - 1;
  const Rational delta = std::min(epsilon, *gap) / (2 * internal);

  // Breadth-first, the j-th node carrying a given label (j from 0) drops by
  // j * delta. Descendants come later, so chains keep decreasing.
  std::map<Rational, long long> seen;
  std::vector<std::size_t> queue{tree.root()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto& node = nodes[queue[head]];
    if (node.is_leaf()) continue;
    const long long j = seen[node.label]++;
    node.label -= delta * j;
    for (auto c : node.children) queue.push_back(c);
  }

  const RepTree binary(space.labels(), std::move(nodes), tree.root());
  auto result = std::make_shared<const UltrametricSpace>(realize(binary));
  if (!is_extremal(*result)) throw InternalError("approximation is not extremal");

  PointMap map(result, target, identity);
  Rational deviation = eps_isometry_deviation(map);
  if (deviation > epsilon) throw InternalError("approximation exceeds epsilon");
  return Approximation{std::move(result),
                       EpsIsometryWitness{std::move(map), epsilon, std::move(deviation)}};
}

PipelineResult compose_pipeline(const SemimetricSpace& space, const Rational& epsilon) {
  if (epsilon <= 0) throw BadEpsilon("epsilon must be positive");
  LiftResult lift = lift_semimetric(space);
  Approximation approx = approximate_extremal(*lift.lifted, epsilon);
  std::vector<std::size_t> composite;
  for (std::size_t z = 0; z < approx.space->size(); ++z) {
    composite.push_back(lift.projection(approx.witness.map(z)));
  }
  return PipelineResult{std::move(lift), std::move(approx), std::move(composite)};
}

Rational eps_isometry_deviation(const PointMap& map) {
  if (!map.is_surjective()) throw NotSurjective("map is not surjective");
  Rational worst = 0;
  for (std::size_t x = 0; x < map.from->size(); ++x) {
    for (std::size_t y = x + 1; y < map.from->size(); ++y) {
      Rational diff = map.from->d(x, y) - map.to->d(map(x), map(y));
      if (diff < 0) diff = -diff;
      if (diff > worst) worst = diff;
    }
  }
  return worst;
}

}  // namespace ultra
