#include "ultra/reptree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "ultra/diametrical.hpp"
#include "ultra/errors.hpp"

namespace ultra {
namespace {

struct SortedForm {
  std::vector<std::string> code;                  // per node
  std::vector<std::vector<std::size_t>> children;  // per node, sorted
};

// Bottom-up canonical codes with children sorted by (leaf count, code,
// smallest point index). `label_text` renders an internal label.
SortedForm sorted_form(const std::vector<RepTree::Node>& nodes, std::size_t root,
                       const std::vector<std::size_t>& leaf_count,
                       const std::vector<std::size_t>& min_point,
                       const std::function<std::string(const Rational&)>& label_text) {
  SortedForm out;
  out.code.resize(nodes.size());
  out.children.resize(nodes.size());
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    const auto& node = nodes[v];
    if (node.is_leaf()) {
      out.code[v] = "*";
      return;
    }
    std::vector<std::size_t> kids = node.children;
    for (auto c : kids) visit(c);
    std::sort(kids.begin(), kids.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(leaf_count[a], out.code[a], min_point[a]) <
             std::tie(leaf_count[b], out.code[b], min_point[b]);
    });
    std::string code = "(" + label_text(node.label) + ":";
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i > 0) code += ",";
      code += out.code[kids[i]];
    }
    code += ")";
    out.code[v] = std::move(code);
    out.children[v] = std::move(kids);
  };
  visit(root);
  return out;
}

std::function<std::string(const Rational&)> label_renderer(const RepTree& tree,
                                                           CodeMode mode) {
  if (mode == CodeMode::isometry) {
    return [](const Rational& r) { return to_string(r); };
  }
  std::vector<Rational> labels;
  for (const auto& n : tree.nodes()) {
    if (!n.is_leaf()) labels.push_back(n.label);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return [labels = std::move(labels)](const Rational& r) {
    auto it = std::lower_bound(labels.begin(), labels.end(), r);
    return std::to_string(it - labels.begin() + 1);
  };
}

SortedForm sorted_form(const RepTree& tree, CodeMode mode) {
  std::vector<std::size_t> leaf_count(tree.node_count()), min_point(tree.node_count());
  for (std::size_t v = 0; v < tree.node_count(); ++v) {
    leaf_count[v] = tree.leaf_count(v);
    min_point[v] = tree.min_point(v);
  }
  return sorted_form(tree.nodes(), tree.root(), leaf_count, min_point,
                     label_renderer(tree, mode));
}

}  // namespace

RepTree::RepTree(std::vector<std::string> point_labels, std::vector<Node> nodes,
                 std::size_t root)
    : labels_(std::move(point_labels)), nodes_(std::move(nodes)), root_(root) {
  const std::size_t n = nodes_.size();
  if (root_ >= n) throw std::invalid_argument("tree root out of range");
  for (auto& node : nodes_) node.parent = npos;
  for (std::size_t v = 0; v < n; ++v) {
    for (auto c : nodes_[v].children) {
      if (c >= n || c == root_ || nodes_[c].parent != npos) {
        throw std::invalid_argument("tree node has a bad or repeated child");
      }
      nodes_[c].parent = v;
    }
  }

  leaf_of_.assign(labels_.size(), npos);
  leaf_count_.assign(n, 0);
  min_point_.assign(n, npos);
  depth_.assign(n, 0);
  std::size_t reached = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    ++reached;
    Node& node = nodes_[v];
    if (node.is_leaf()) {
      if (!node.children.empty()) throw std::invalid_argument("leaf with children");
      const std::size_t p = *node.point;
      if (p >= labels_.size() || leaf_of_[p] != npos) {
        throw std::invalid_argument("leaf point out of range or repeated");
      }
      node.label = 0;
      leaf_of_[p] = v;
      leaf_count_[v] = 1;
      min_point_[v] = p;
      return;
    }
    if (node.children.size() < 2) {
      throw std::invalid_argument("internal node with fewer than two children");
    }
    for (auto c : node.children) {
      depth_[c] = depth_[v] + 1;
      visit(c);
      if (!(nodes_[c].label < node.label)) {
        throw std::invalid_argument("labels do not strictly decrease towards leaves");
      }
      leaf_count_[v] += leaf_count_[c];
      min_point_[v] = std::min(min_point_[v], min_point_[c]);
    }
  };
  visit(root_);
  if (reached != n) throw std::invalid_argument("tree has unreachable nodes");
  if (std::find(leaf_of_.begin(), leaf_of_.end(), npos) != leaf_of_.end()) {
    throw std::invalid_argument("some point has no leaf");
  }

  auto form = sorted_form(*this, CodeMode::isometry);
  for (std::size_t v = 0; v < n; ++v) {
    if (!nodes_[v].is_leaf()) nodes_[v].children = std::move(form.children[v]);
  }
}

std::size_t RepTree::lowest_common_ancestor(std::size_t a, std::size_t b) const {
  while (depth_[a] > depth_[b]) a = nodes_[a].parent;
  while (depth_[b] > depth_[a]) b = nodes_[b].parent;
  while (a != b) {
    a = nodes_[a].parent;
    b = nodes_[b].parent;
  }
  return a;
}

std::vector<std::size_t> RepTree::points_under(std::size_t v) const {
  std::vector<std::size_t> out;
  std::function<void(std::size_t)> visit = [&](std::size_t u) {
    if (nodes_[u].is_leaf()) {
      out.push_back(*nodes_[u].point);
      return;
    }
    for (auto c : nodes_[u].children) visit(c);
  };
  visit(v);
  return out;
}

std::vector<std::size_t> RepTree::internal_nodes_bfs() const {
  std::vector<std::size_t> out;
  std::deque<std::size_t> queue{root_};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    if (nodes_[v].is_leaf()) continue;
    out.push_back(v);
    for (auto c : nodes_[v].children) queue.push_back(c);
  }
  return out;
}

RepTree build_representing_tree(const UltrametricSpace& space) {
  if (space.size() == 0) throw TooSmall("representing tree of an empty space");
  std::vector<RepTree::Node> nodes;
  std::function<std::size_t(const std::vector<std::size_t>&)> build =
      [&](const std::vector<std::size_t>& members) -> std::size_t {
    const std::size_t v = nodes.size();
    nodes.emplace_back();
    if (members.size() == 1) {
      nodes[v].point = members.front();
      return v;
    }
    auto dec = diametrical_decompose(space.subspace(members));
    nodes[v].label = dec.diameter;
    std::vector<std::size_t> kids;
    for (const auto& part : dec.parts) {
      std::vector<std::size_t> sub;
      sub.reserve(part.size());
      for (auto i : part) sub.push_back(members[i]);
      kids.push_back(build(sub));
    }
    nodes[v].children = std::move(kids);
    return v;
  };
  std::vector<std::size_t> all(space.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  build(all);
  return RepTree(space.labels(), std::move(nodes), 0);
}

UltrametricSpace realize(const RepTree& tree) {
  const std::size_t n = tree.point_labels().size();
  std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
  for (const auto& node : tree.nodes()) {
    if (node.is_leaf()) continue;
    std::vector<std::vector<std::size_t>> groups;
    for (auto c : node.children) groups.push_back(tree.points_under(c));
    for (std::size_t a = 0; a < groups.size(); ++a) {
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        for (auto x : groups[a]) {
          for (auto y : groups[b]) {
            matrix[x][y] = node.label;
            matrix[y][x] = node.label;
          }
        }
      }
    }
  }
  return UltrametricSpace::unchecked(SemimetricSpace(tree.point_labels(), std::move(matrix)));
}

Rational tree_distance(const RepTree& tree, const std::string& x, const std::string& y) {
  auto find = [&](const std::string& label) {
    const auto& labels = tree.point_labels();
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw UnknownPoint("unknown point '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  const std::size_t a = find(x), b = find(y);
  if (a == b) return 0;
  return tree.node(tree.lowest_common_ancestor(tree.leaf_of(a), tree.leaf_of(b))).label;
}

bool is_strictly_binary(const RepTree& tree) {
  return std::all_of(tree.nodes().begin(), tree.nodes().end(), [](const auto& n) {
    return n.is_leaf() || n.children.size() == 2;
  });
}

bool has_equilateral_triangle(const UltrametricSpace& space) {
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (space.d(i, j) == space.d(i, k) && space.d(i, j) == space.d(j, k)) return true;
      }
    }
  }
  return false;
}

CanonicalCode canonical_code(const RepTree& tree, CodeMode mode) {
  return CanonicalCode{sorted_form(tree, mode).code[tree.root()]};
}

std::vector<std::size_t> canonical_leaf_order(const RepTree& tree, CodeMode mode) {
  auto form = sorted_form(tree, mode);
  std::vector<std::size_t> out;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    const auto& node = tree.node(v);
    if (node.is_leaf()) {
      out.push_back(*node.point);
      return;
    }
    for (auto c : form.children[v]) visit(c);
  };
  visit(tree.root());
  return out;
}

bool are_isometric(const UltrametricSpace& x, const UltrametricSpace& y) {
  if (x.size() != y.size()) return false;
  if (x.size() == 0) return true;
  return canonical_code(build_representing_tree(x), CodeMode::isometry) ==
         canonical_code(build_representing_tree(y), CodeMode::isometry);
}

std::optional<WeakSimilarityWitness> are_weakly_similar(const UltrametricSpace& x,
                                                        const UltrametricSpace& y) {
  if (x.size() != y.size()) return std::nullopt;
  if (x.size() == 0) return WeakSimilarityWitness{};
  const RepTree tx = build_representing_tree(x);
  const RepTree ty = build_representing_tree(y);
  if (canonical_code(tx, CodeMode::shape) != canonical_code(ty, CodeMode::shape)) {
    return std::nullopt;
  }
  const auto order_x = canonical_leaf_order(tx, CodeMode::shape);
  const auto order_y = canonical_leaf_order(ty, CodeMode::shape);
  WeakSimilarityWitness w;
  w.phi.resize(x.size());
  for (std::size_t i = 0; i < order_x.size(); ++i) w.phi[order_x[i]] = order_y[i];
  const auto sx = spectrum_of(x), sy = spectrum_of(y);
  if (sx.size() != sy.size()) throw InternalError("equal shapes with different spectrum sizes");
  for (std::size_t i = 0; i < sx.size(); ++i) w.f.emplace_back(sy.values[i], sx.values[i]);
  if (!verify_weak_similarity(x, y, w)) {
    throw InternalError("aligned canonical trees do not give a weak similarity");
  }
  return w;
}

bool verify_weak_similarity(const SemimetricSpace& x, const SemimetricSpace& y,
                            const WeakSimilarityWitness& w) {
  if (x.size() != y.size() || w.phi.size() != x.size()) return false;
  std::vector<bool> hit(y.size(), false);
  for (auto p : w.phi) {
    if (p >= y.size() || hit[p]) return false;
    hit[p] = true;
  }
  for (std::size_t i = 1; i < w.f.size(); ++i) {
    if (!(w.f[i - 1].first < w.f[i].first) || !(w.f[i - 1].second < w.f[i].second)) {
      return false;
    }
  }
  auto apply_f = [&](const Rational& v) -> std::optional<Rational> {
    auto it = std::lower_bound(w.f.begin(), w.f.end(), v,
                               [](const auto& e, const Rational& r) { return e.first < r; });
    if (it == w.f.end() || it->first != v) return std::nullopt;
    return it->second;
  };
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i; j < x.size(); ++j) {
      auto image = apply_f(y.d(w.phi[i], w.phi[j]));
      if (!image || *image != x.d(i, j)) return false;
    }
  }
  // f must be onto Sp X and defined exactly on Sp Y.
  return w.f.size() == spectrum_of(y).size() && w.f.size() == spectrum_of(x).size();
}

}  // namespace ultra
