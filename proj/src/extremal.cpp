#include "ultra/extremal.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ultra/diametrical.hpp"
#include "ultra/errors.hpp"
#include "ultra/reptree.hpp"

namespace ultra {
namespace {

bool pairwise_distinct(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

std::vector<Rational> cycle_weights(const std::vector<std::size_t>& order,
                                    const SemimetricSpace& space) {
  std::vector<Rational> w;
  w.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    w.push_back(space.d(order[i], order[(i + 1) % order.size()]));
  }
  return w;
}

}  // namespace

bool is_extremal(const UltrametricSpace& space) {
  const auto m = gomory_hu_margin(space);
  return m.spectrum_size == m.point_count;
}

CharacteristicPath characteristic_ham_path(const UltrametricSpace& space) {
  if (!is_extremal(space)) {
    throw NotExtremal("space is not extremal for the Gomory-Hu inequality");
  }
  std::vector<std::size_t> order;
  std::function<void(const std::vector<std::size_t>&)> walk =
      [&](const std::vector<std::size_t>& members) {
        if (members.size() <= 2) {
          order.insert(order.end(), members.begin(), members.end());
          return;
        }
        auto dec = diametrical_decompose(space.subspace(members));
        if (dec.k() != 2) throw InternalError("extremal space with k != 2 parts");
        for (const auto& part : dec.parts) {
          std::vector<std::size_t> sub;
          for (auto i : part) sub.push_back(members[i]);
          walk(sub);
        }
      };
  std::vector<std::size_t> all(space.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  walk(all);

  CharacteristicPath path;
  for (std::size_t i = 0; i < order.size(); ++i) {
    path.order.push_back(space.label(order[i]));
    if (i + 1 < order.size()) path.weights.push_back(space.d(order[i], order[i + 1]));
  }
  if (!pairwise_distinct(path.weights)) {
    throw InternalError("constructed path has repeated weights");
  }
  return path;
}

CharacteristicCycle path_to_cycle(const CharacteristicPath& path,
                                  const UltrametricSpace& space) {
  if (path.order.size() < 3) throw TooSmall("a cycle needs at least 3 points");
  if (path.order.size() != space.size() || path.weights.size() + 1 != path.order.size()) {
    throw NotHamiltonian("path does not cover the space");
  }
  CharacteristicCycle cycle{path.order, path.weights};
  const Rational closing =
      space.d(space.index_of(path.order.front()), space.index_of(path.order.back()));
  if (closing != *std::max_element(path.weights.begin(), path.weights.end())) {
    throw NotCharacteristic("closing edge is not the path maximum");
  }
  cycle.weights.push_back(closing);
  return cycle;
}

bool has_characteristic_cycle_weights(const std::vector<Rational>& weights) {
  if (weights.size() < 3) return false;
  if (std::any_of(weights.begin(), weights.end(), [](const Rational& w) { return w <= 0; })) {
    return false;
  }
  const Rational top = *std::max_element(weights.begin(), weights.end());
  std::vector<Rational> rest;
  for (const auto& w : weights) {
    if (w != top) rest.push_back(w);
  }
  return weights.size() - rest.size() == 2 && pairwise_distinct(std::move(rest));
}

bool is_characteristic_cycle(const std::vector<std::string>& order,
                             const UltrametricSpace& space) {
  if (space.size() < 3) throw TooSmall("a cycle needs at least 3 points");
  if (order.size() != space.size()) throw NotHamiltonian("cycle length differs from |X|");
  std::vector<std::size_t> idx;
  std::set<std::size_t> seen;
  for (const auto& label : order) {
    if (!space.contains(label)) throw NotHamiltonian("cycle visits unknown point '" + label + "'");
    idx.push_back(space.index_of(label));
    if (!seen.insert(idx.back()).second) {
      throw NotHamiltonian("cycle visits '" + label + "' twice");
    }
  }
  return has_characteristic_cycle_weights(cycle_weights(idx, space));
}

UltrametricSpace reconstruct_from_path(const CharacteristicPath& path) {
  const std::size_t n = path.order.size();
  if (n == 0) throw TooSmall("empty path");
  if (path.weights.size() + 1 != n) {
    throw NotInjective("a path on " + std::to_string(n) + " points needs " +
                       std::to_string(n - 1) + " weights");
  }
  if (std::any_of(path.weights.begin(), path.weights.end(),
                  [](const Rational& w) { return w <= 0; })) {
    throw NotInjective("path weights must be strictly positive");
  }
  if (!pairwise_distinct(path.weights)) throw NotInjective("path weights repeat");

  std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Rational running = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      running = std::max(running, path.weights[j - 1]);
      matrix[i][j] = running;
      matrix[j][i] = running;
    }
  }
  return UltrametricSpace(path.order, std::move(matrix));
}

UltrametricSpace reconstruct_from_cycle(const CharacteristicCycle& cycle) {
  return reconstruct_from_cycle(cycle, 0);
}

UltrametricSpace reconstruct_from_cycle(const CharacteristicCycle& cycle,
                                        std::size_t which_max) {
  const std::size_t n = cycle.order.size();
  if (cycle.weights.size() != n || !has_characteristic_cycle_weights(cycle.weights)) {
    throw NotCharacteristic("cycle weights are not characteristic");
  }
  if (which_max > 1) throw std::invalid_argument("a characteristic cycle has two maxima");
  const Rational top = *std::max_element(cycle.weights.begin(), cycle.weights.end());
  std::size_t cut = n;
  for (std::size_t i = 0, seen = 0; i < n; ++i) {
    if (cycle.weights[i] == top && seen++ == which_max) {
      cut = i;
      break;
    }
  }
  // Edge `cut` joins order[cut] and order[cut+1]; the path starts after it.
  CharacteristicPath path;
  for (std::size_t s = 1; s <= n; ++s) {
    const std::size_t i = (cut + s) % n;
    path.order.push_back(cycle.order[i]);
    if (s < n) path.weights.push_back(cycle.weights[i]);
  }
  UltrametricSpace out = reconstruct_from_path(path);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = out.index_of(cycle.order[i]);
    const auto b = out.index_of(cycle.order[(i + 1) % n]);
    if (out.d(a, b) != cycle.weights[i]) {
      throw InternalError("reconstruction disagrees with a cycle edge");
    }
  }
  return out;
}

SubsetCycle two_max_cycle_for_subset(const UltrametricSpace& space,
                                     const std::vector<std::string>& subset) {
  const RepTree tree = build_representing_tree(space);
  if (!is_strictly_binary(tree)) {
    throw NotStrictlyBinary("representing tree is not strictly binary");
  }
  std::set<std::size_t> chosen;
  for (const auto& label : subset) chosen.insert(space.index_of(label));
  if (chosen.size() < 3) throw TooSmall("subset needs at least 3 distinct points");

  std::size_t top = tree.leaf_of(*chosen.begin());
  for (auto p : chosen) top = tree.lowest_common_ancestor(top, tree.leaf_of(p));

  // Leaves of the two subtrees below the common ancestor, each in tree
  // order; any Hamiltonian paths of the halves would do.
  SubsetCycle cycle;
  std::vector<std::size_t> order;
  for (auto child : tree.node(top).children) {
    for (auto p : tree.points_under(child)) {
      if (chosen.contains(p)) order.push_back(p);
    }
  }
  cycle.weights = cycle_weights(order, space);
  for (auto p : order) cycle.order.push_back(space.label(p));

  const Rational peak = *std::max_element(cycle.weights.begin(), cycle.weights.end());
  if (std::count(cycle.weights.begin(), cycle.weights.end(), peak) != 2) {
    throw InternalError("subset cycle does not have exactly two maximal edges");
  }
  return cycle;
}

}  // namespace ultra
