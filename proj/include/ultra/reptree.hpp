#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Rooted labeled tree of the recursive diametrical decomposition. Internal
/// nodes carry the diameter of their leaf set, leaves carry one point each.
///
/// Invariants, checked on construction:
///  - every internal node has at least two children;
///  - internal labels strictly decrease from the root towards the leaves;
///  - leaves are in bijection with the point labels.
///
/// Children are kept in canonical order: ascending leaf count, then
/// isometry code, then smallest contained point index.
class RepTree {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Node {
    Rational label;                    // 0 for leaves
    std::optional<std::size_t> point;  // set exactly for leaves
    std::vector<std::size_t> children;
    std::size_t parent = npos;

    bool is_leaf() const { return point.has_value(); }
  };

  /// Throws std::invalid_argument when an invariant fails.
  RepTree(std::vector<std::string> point_labels, std::vector<Node> nodes,
          std::size_t root);

  std::size_t root() const { return root_; }
  const Node& node(std::size_t v) const { return nodes_[v]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<std::string>& point_labels() const { return labels_; }

  std::size_t leaf_of(std::size_t point) const { return leaf_of_[point]; }
  std::size_t leaf_count(std::size_t v) const { return leaf_count_[v]; }
  std::size_t min_point(std::size_t v) const { return min_point_[v]; }
  std::size_t depth(std::size_t v) const { return depth_[v]; }

  std::size_t lowest_common_ancestor(std::size_t a, std::size_t b) const;

  /// Point indices under `v` in stored (canonical) order.
  std::vector<std::size_t> points_under(std::size_t v) const;

  /// Internal nodes in breadth-first order from the root, children visited
  /// in stored order.
  std::vector<std::size_t> internal_nodes_bfs() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Node> nodes_;
  std::size_t root_;
  std::vector<std::size_t> leaf_of_;
  std::vector<std::size_t> leaf_count_;
  std::vector<std::size_t> min_point_;
  std::vector<std::size_t> depth_;
};

/// Throws NotUltrametric via the UltrametricSpace type; |X| >= 1.
RepTree build_representing_tree(const UltrametricSpace& space);

/// The ultrametric realized by a labeled tree: d(x,y) is the label of the
/// lowest common ancestor. Points follow the tree's label order.
UltrametricSpace realize(const RepTree& tree);

/// 0 for x = y, else the label of the lowest common ancestor.
/// Throws UnknownPoint.
Rational tree_distance(const RepTree& tree, const std::string& x, const std::string& y);

bool is_strictly_binary(const RepTree& tree);

bool has_equilateral_triangle(const UltrametricSpace& space);

enum class CodeMode {
  isometry,  // numeric labels kept
  shape,     // labels replaced by their rank among the tree's labels
};

struct CanonicalCode {
  std::string code;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Invariant under child reordering and point renaming.
CanonicalCode canonical_code(const RepTree& tree, CodeMode mode);

/// Point indices in the leaf order of the canonically sorted tree for
/// `mode`. Isomorphic sibling subtrees are ordered by smallest point index.
std::vector<std::size_t> canonical_leaf_order(const RepTree& tree, CodeMode mode);

bool are_isometric(const UltrametricSpace& x, const UltrametricSpace& y);

/// phi: X -> Y on point indices; f: Sp Y -> Sp X strictly increasing,
/// with d_X(a,b) = f(d_Y(phi a, phi b)).
struct WeakSimilarityWitness {
  std::vector<std::size_t> phi;
  std::vector<std::pair<Rational, Rational>> f;  // (value in Sp Y, value in Sp X)
};

std::optional<WeakSimilarityWitness> are_weakly_similar(const UltrametricSpace& x,
                                                        const UltrametricSpace& y);

/// Checks the witness pointwise over all pairs.
bool verify_weak_similarity(const SemimetricSpace& x, const SemimetricSpace& y,
                            const WeakSimilarityWitness& w);

}  // namespace ultra
